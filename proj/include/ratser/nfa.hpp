#ifndef RATSER_NFA_HPP
#define RATSER_NFA_HPP

#include <optional>
#include <vector>

#include "ratser/wfa.hpp"

namespace ratser {

// Unweighted finite automaton without epsilon transitions; used for support
// languages of series and expressions.
class Nfa {
public:
    explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] std::size_t state_count() const { return initial_.size(); }

    std::size_t add_state(bool initial, bool final);
    void add_edge(std::size_t src, std::uint32_t letter, std::size_t dst);

    [[nodiscard]] bool is_initial(std::size_t q) const { return initial_[q]; }
    [[nodiscard]] bool is_final(std::size_t q) const { return final_[q]; }
    void set_initial(std::size_t q, bool b) { initial_[q] = b; }
    void set_final(std::size_t q, bool b) { final_[q] = b; }
    [[nodiscard]] const std::vector<std::pair<std::uint32_t, std::size_t>>& edges_from(
        std::size_t q) const {
        return edges_[q];
    }

    [[nodiscard]] bool accepts(const Word& w) const;
    [[nodiscard]] bool accepts_empty_word() const;
    [[nodiscard]] bool is_empty_language() const;

    // Canonical deterministic form: subset construction, trimmed, states in
    // breadth-first discovery order. Every accepted word has exactly one
    // accepting path afterwards.
    [[nodiscard]] Nfa determinize() const;
    [[nodiscard]] Nfa trimmed() const;

    // Shortest accepted word (ties by letter order); nullopt when empty.
    [[nodiscard]] std::optional<Word> shortest_word() const;

    static Nfa empty_language(const Alphabet& alphabet);
    static Nfa single_word(const Alphabet& alphabet, const Word& w);

    friend Nfa union_nfa(const Nfa& a, const Nfa& b);
    friend Nfa concat_nfa(const Nfa& a, const Nfa& b);
    // Kleene star of a language not containing the empty word; the result
    // accepts the empty word at a fresh hub state.
    friend Nfa star_nfa(const Nfa& a);
    friend Nfa intersect_nfa(const Nfa& a, const Nfa& b);

private:
    Alphabet alphabet_;
    std::vector<bool> initial_;
    std::vector<bool> final_;
    std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> edges_;
};

// Support automaton of an unambiguous weighted automaton: same graph with
// weights dropped; accepts exactly the support of the recognized series.
Nfa support_nfa(const Wfa& a);

// Language disjointness and equality on words up to a length bound are in
// the tests; the library needs only emptiness of intersections.
bool disjoint_languages(const Nfa& a, const Nfa& b);

struct CodeCheck {
    bool is_code;
    std::optional<Word> witness; // a word with two factorizations
};

// Sardinas–Patterson on the regular language accepted by l (which must not
// contain the empty word): iterates residual languages, represented by
// memoized state sets of the determinized automaton, until some residual
// contains the empty word (not a code) or the residuals repeat (code).
// The witness is recovered from the factorization-counting representation;
// the two routes cross-check each other.
CodeCheck code_check(const Nfa& l);

// Representation over Q whose coefficient at w is the number of
// factorizations of w into language words (hub construction over the
// determinized automaton, counting collided continue/restart transitions
// additively). Requires epsilon not in the language.
LinearRep factorization_count_rep(const Nfa& l);

// Shortest word with a nonzero coefficient (ties by letter order); nullopt
// for the zero series. The search range is the equivalence bound of the
// minimized representation.
std::optional<Word> shortest_support_word(const LinearRep& r);

} // namespace ratser

#endif // RATSER_NFA_HPP
