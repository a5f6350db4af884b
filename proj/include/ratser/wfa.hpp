#ifndef RATSER_WFA_HPP
#define RATSER_WFA_HPP

#include <optional>
#include <string>
#include <vector>

#include "ratser/linrep.hpp"

namespace ratser {

// Weighted finite automaton (Q, I, E, T). Only edges with nonzero weight are
// stored; "edge" always means nonzero weight.
class Wfa {
public:
    struct Edge {
        std::uint32_t letter;
        std::size_t dst;
        Scalar weight;
    };

    Wfa(Alphabet alphabet, const Field& f)
        : alphabet_(std::move(alphabet)), field_(f) {}

    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::size_t state_count() const { return names_.size(); }
    [[nodiscard]] const std::string& state_name(std::size_t q) const { return names_[q]; }
    [[nodiscard]] const std::vector<std::string>& state_names() const { return names_; }

    std::size_t add_state(std::string name, Scalar initial, Scalar terminal);
    // Rejects zero weights and duplicate (src, letter, dst) triples.
    void add_edge(std::size_t src, std::uint32_t letter, std::size_t dst, Scalar weight);

    [[nodiscard]] const Scalar& initial(std::size_t q) const { return initial_[q]; }
    [[nodiscard]] const Scalar& terminal(std::size_t q) const { return terminal_[q]; }
    [[nodiscard]] const std::vector<Edge>& edges_from(std::size_t q) const { return edges_[q]; }

    [[nodiscard]] std::optional<std::size_t> state_index(const std::string& name) const;
    [[nodiscard]] std::size_t edge_count() const;

private:
    Alphabet alphabet_;
    Field field_;
    std::vector<std::string> names_;
    std::vector<Scalar> initial_;
    std::vector<Scalar> terminal_;
    std::vector<std::vector<Edge>> edges_; // sorted by (letter, dst)
};

// Sum over accepting paths labelled by w, weighted by initial/terminal
// weights; computed by sparse vector iteration.
Scalar evaluate(const Wfa& a, const Word& w);

// Associated automaton of a representation (states "1".."n") and back.
Wfa to_wfa(const LinearRep& r);
LinearRep to_linear_rep(const Wfa& a);

// Keeps exactly the states lying on some accepting path.
Wfa trim(const Wfa& a);

// At most one initial state and at most one outgoing edge per (state, letter).
bool is_deterministic(const Wfa& a);

// Shortest word labelling two distinct accepting paths (ties broken by letter
// order); nullopt when the automaton is unambiguous.
std::optional<Word> ambiguity_witness(const Wfa& a);

inline bool is_unambiguous(const Wfa& a) { return !ambiguity_witness(a).has_value(); }

// Reciprocal of every initial, edge, and terminal weight; requires an
// unambiguous input (each coefficient is then a single path product).
Wfa hadamard_subinverse(const Wfa& a);

// Structured failure evidence carrying the shortest ambiguity witness.
class AmbiguousInput : public Error {
public:
    AmbiguousInput(const Alphabet& alphabet, const Word& witness)
        : Error("automaton is ambiguous, witness " + format_word(alphabet, witness)),
          witness_(witness) {}
    [[nodiscard]] const Word& witness() const { return witness_; }

private:
    Word witness_;
};

} // namespace ratser

#endif // RATSER_WFA_HPP
