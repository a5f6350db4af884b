#include "ratser/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ratser/minimize.hpp"
#include "ratser/ratexpr.hpp"

namespace ratser {

std::size_t Nfa::add_state(bool initial, bool final) {
    initial_.push_back(initial);
    final_.push_back(final);
    edges_.emplace_back();
    return initial_.size() - 1;
}

void Nfa::add_edge(std::size_t src, std::uint32_t letter, std::size_t dst) {
    auto& out = edges_[src];
    const auto key = std::make_pair(letter, dst);
    const auto pos = std::lower_bound(out.begin(), out.end(), key);
    if (pos != out.end() && *pos == key) return;
    out.insert(pos, key);
}

bool Nfa::accepts(const Word& w) const {
    std::vector<bool> cur(state_count());
    for (std::size_t q = 0; q < state_count(); ++q) cur[q] = initial_[q];
    for (const auto letter : w.letters) {
        std::vector<bool> next(state_count(), false);
        for (std::size_t q = 0; q < state_count(); ++q) {
            if (!cur[q]) continue;
            for (const auto& [x, dst] : edges_[q])
                if (x == letter) next[dst] = true;
        }
        cur = std::move(next);
    }
    for (std::size_t q = 0; q < state_count(); ++q)
        if (cur[q] && final_[q]) return true;
    return false;
}

bool Nfa::accepts_empty_word() const {
    for (std::size_t q = 0; q < state_count(); ++q)
        if (initial_[q] && final_[q]) return true;
    return false;
}

bool Nfa::is_empty_language() const { return !shortest_word().has_value(); }

std::optional<Word> Nfa::shortest_word() const {
    if (accepts_empty_word()) return Word{};
    // Breadth-first over state sets; letters expand in order, so the first
    // accepting set is reached by the least shortest word.
    std::set<std::vector<bool>> seen;
    std::vector<bool> start(state_count(), false);
    bool any = false;
    for (std::size_t q = 0; q < state_count(); ++q)
        if (initial_[q]) {
            start[q] = true;
            any = true;
        }
    if (!any) return std::nullopt;
    std::deque<std::pair<std::vector<bool>, Word>> queue;
    seen.insert(start);
    queue.emplace_back(start, Word{});
    while (!queue.empty()) {
        auto [cur, word] = queue.front();
        queue.pop_front();
        for (std::uint32_t x = 0; x < alphabet_.size(); ++x) {
            std::vector<bool> next(state_count(), false);
            bool nonempty = false;
            for (std::size_t q = 0; q < state_count(); ++q) {
                if (!cur[q]) continue;
                for (const auto& [letter, dst] : edges_[q])
                    if (letter == x) {
                        next[dst] = true;
                        nonempty = true;
                    }
            }
            if (!nonempty) continue;
            Word next_word = word.append(x);
            for (std::size_t q = 0; q < state_count(); ++q)
                if (next[q] && final_[q]) return next_word;
            if (seen.insert(next).second) queue.emplace_back(next, std::move(next_word));
        }
    }
    return std::nullopt;
}

Nfa Nfa::trimmed() const {
    std::vector<bool> fwd(state_count(), false);
    std::deque<std::size_t> queue;
    for (std::size_t q = 0; q < state_count(); ++q)
        if (initial_[q]) {
            fwd[q] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        for (const auto& [x, dst] : edges_[q])
            if (!fwd[dst]) {
                fwd[dst] = true;
                queue.push_back(dst);
            }
    }
    std::vector<std::vector<std::size_t>> preds(state_count());
    for (std::size_t q = 0; q < state_count(); ++q)
        for (const auto& [x, dst] : edges_[q]) preds[dst].push_back(q);
    std::vector<bool> bwd(state_count(), false);
    for (std::size_t q = 0; q < state_count(); ++q)
        if (final_[q]) {
            bwd[q] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        for (const std::size_t p : preds[q])
            if (!bwd[p]) {
                bwd[p] = true;
                queue.push_back(p);
            }
    }
    Nfa out(alphabet_);
    std::vector<std::size_t> remap(state_count(), static_cast<std::size_t>(-1));
    for (std::size_t q = 0; q < state_count(); ++q)
        if (fwd[q] && bwd[q]) remap[q] = out.add_state(initial_[q], final_[q]);
    for (std::size_t q = 0; q < state_count(); ++q) {
        if (remap[q] == static_cast<std::size_t>(-1)) continue;
        for (const auto& [x, dst] : edges_[q])
            if (remap[dst] != static_cast<std::size_t>(-1))
                out.add_edge(remap[q], x, remap[dst]);
    }
    return out;
}

Nfa Nfa::determinize() const {
    using StateSet = std::vector<bool>;
    StateSet start(state_count(), false);
    bool any = false;
    for (std::size_t q = 0; q < state_count(); ++q)
        if (initial_[q]) {
            start[q] = true;
            any = true;
        }
    Nfa out(alphabet_);
    if (!any) return out;

    std::map<StateSet, std::size_t> index;
    std::vector<StateSet> sets;
    const auto is_final_set = [&](const StateSet& s) {
        for (std::size_t q = 0; q < state_count(); ++q)
            if (s[q] && final_[q]) return true;
        return false;
    };
    index.emplace(start, 0);
    sets.push_back(start);
    out.add_state(true, is_final_set(start));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::uint32_t x = 0; x < alphabet_.size(); ++x) {
            StateSet next(state_count(), false);
            bool nonempty = false;
            for (std::size_t q = 0; q < state_count(); ++q) {
                if (!sets[i][q]) continue;
                for (const auto& [letter, dst] : edges_[q])
                    if (letter == x) {
                        next[dst] = true;
                        nonempty = true;
                    }
            }
            if (!nonempty) continue; // partial transition function
            auto [it, fresh] = index.emplace(next, sets.size());
            if (fresh) {
                sets.push_back(next);
                out.add_state(false, is_final_set(next));
            }
            out.add_edge(i, x, it->second);
        }
    }
    return out.trimmed();
}

Nfa Nfa::empty_language(const Alphabet& alphabet) { return Nfa(alphabet); }

Nfa Nfa::single_word(const Alphabet& alphabet, const Word& w) {
    Nfa out(alphabet);
    std::size_t prev = out.add_state(true, w.empty());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const std::size_t next = out.add_state(false, i + 1 == w.size());
        out.add_edge(prev, w.letters[i], next);
        prev = next;
    }
    return out;
}

namespace {

std::size_t append_states(Nfa& out, const Nfa& src, bool keep_initial, bool keep_final) {
    const std::size_t offset = out.state_count();
    for (std::size_t q = 0; q < src.state_count(); ++q)
        out.add_state(keep_initial && src.is_initial(q), keep_final && src.is_final(q));
    for (std::size_t q = 0; q < src.state_count(); ++q)
        for (const auto& [x, dst] : src.edges_from(q)) out.add_edge(offset + q, x, offset + dst);
    return offset;
}

} // namespace

Nfa union_nfa(const Nfa& a, const Nfa& b) {
    if (a.alphabet() != b.alphabet()) throw DimensionMismatch("nfa union alphabets");
    Nfa out(a.alphabet());
    append_states(out, a, true, true);
    append_states(out, b, true, true);
    return out;
}

Nfa concat_nfa(const Nfa& a, const Nfa& b) {
    if (a.alphabet() != b.alphabet()) throw DimensionMismatch("nfa concat alphabets");
    Nfa out(a.alphabet());
    const std::size_t oa = append_states(out, a, true, b.accepts_empty_word());
    const std::size_t ob = append_states(out, b, a.accepts_empty_word(), true);
    // Entering b consumes its first letter from a final state of a.
    for (std::size_t q = 0; q < b.state_count(); ++q) {
        if (!b.is_initial(q)) continue;
        for (const auto& [x, dst] : b.edges_from(q))
            for (std::size_t f = 0; f < a.state_count(); ++f)
                if (a.is_final(f)) out.add_edge(oa + f, x, ob + dst);
    }
    return out;
}

Nfa star_nfa(const Nfa& a) {
    if (a.accepts_empty_word()) throw EmptyWordInLanguage();
    Nfa out(a.alphabet());
    const std::size_t hub = out.add_state(true, true);
    const std::size_t oa = append_states(out, a, false, true);
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        if (!a.is_initial(q)) continue;
        for (const auto& [x, dst] : a.edges_from(q)) {
            out.add_edge(hub, x, oa + dst);
            // Restart after any completed factor.
            for (std::size_t f = 0; f < a.state_count(); ++f)
                if (a.is_final(f)) out.add_edge(oa + f, x, oa + dst);
        }
    }
    return out;
}

Nfa intersect_nfa(const Nfa& a, const Nfa& b) {
    if (a.alphabet() != b.alphabet()) throw DimensionMismatch("nfa intersection alphabets");
    Nfa out(a.alphabet());
    const std::size_t nb = b.state_count();
    for (std::size_t p = 0; p < a.state_count(); ++p)
        for (std::size_t q = 0; q < nb; ++q)
            out.add_state(a.is_initial(p) && b.is_initial(q),
                          a.is_final(p) && b.is_final(q));
    for (std::size_t p = 0; p < a.state_count(); ++p)
        for (const auto& [x, pd] : a.edges_from(p))
            for (std::size_t q = 0; q < nb; ++q)
                for (const auto& [y, qd] : b.edges_from(q))
                    if (x == y) out.add_edge(p * nb + q, x, pd * nb + qd);
    return out;
}

Nfa support_nfa(const Wfa& a) {
    Nfa out(a.alphabet());
    for (std::size_t q = 0; q < a.state_count(); ++q)
        out.add_state(!a.initial(q).is_zero(), !a.terminal(q).is_zero());
    for (std::size_t q = 0; q < a.state_count(); ++q)
        for (const auto& e : a.edges_from(q)) out.add_edge(q, e.letter, e.dst);
    return out;
}

bool disjoint_languages(const Nfa& a, const Nfa& b) {
    return intersect_nfa(a, b).is_empty_language();
}

LinearRep factorization_count_rep(const Nfa& l) {
    if (l.accepts_empty_word()) throw EmptyWordInLanguage();
    const Nfa d = l.determinize();
    const Field f = Field::rationals();
    const Scalar one = Scalar::one(f);
    const std::size_t n = d.state_count();
    // State 0 is the hub (between factors); states 1..n follow the DFA.
    // A continue transition and a restart transition can land on the same
    // pair of states; their counts add.
    LinearRep r(l.alphabet(), f, n + 1);
    r.u().at(0, 0) = one;
    r.v().at(0, 0) = one;
    for (std::size_t q = 0; q < n; ++q)
        if (d.is_final(q)) r.v().at(1 + q, 0) = one;
    for (std::size_t q = 0; q < n; ++q)
        for (const auto& [x, dst] : d.edges_from(q)) {
            r.mu(x).at(1 + q, 1 + dst) += one; // continue the current factor
            if (d.is_initial(q)) {
                r.mu(x).at(0, 1 + dst) += one; // first factor
                for (std::size_t fin = 0; fin < n; ++fin)
                    if (d.is_final(fin))
                        r.mu(x).at(1 + fin, 1 + dst) += one; // restart
            }
        }
    return r;
}

std::optional<Word> shortest_support_word(const LinearRep& r) {
    // A nonzero series with a representation of dimension m has a nonzero
    // coefficient on some word of length < m (equivalence bound against the
    // zero series).
    for (const Word& w : words_up_to(r.alphabet(), r.dim())) {
        if (!evaluate(r, w).is_zero()) return w;
    }
    return std::nullopt;
}

namespace {

// Residual languages are unions of right languages of state sets of the
// determinized automaton for L; quotients map state sets to state sets.
struct ResidualMachinery {
    const Nfa dfa;               // determinized automaton for L
    std::vector<bool> dfa_initial;

    explicit ResidualMachinery(const Nfa& l) : dfa(l.determinize()) {
        dfa_initial.resize(dfa.state_count(), false);
        for (std::size_t q = 0; q < dfa.state_count(); ++q)
            if (dfa.is_initial(q)) dfa_initial[q] = true;
    }

    [[nodiscard]] bool contains_empty(const std::vector<bool>& set) const {
        for (std::size_t q = 0; q < set.size(); ++q)
            if (set[q] && dfa.is_final(q)) return true;
        return false;
    }

    // { delta(q, u) : q in set, u in M } for the language M given by an
    // automaton; when require_nonempty_u is set, u ranges over M minus the
    // empty word.
    [[nodiscard]] std::vector<bool> quotient_targets(const std::vector<bool>& set,
                                                     const Nfa& m,
                                                     bool require_nonempty_u) const {
        // Pair reachability over (dfa state, m state set is implicit: we run
        // m as an NFA alongside).
        struct Node {
            std::size_t dfa_state;
            std::size_t m_state;
        };
        const std::size_t nm = m.state_count();
        std::vector<bool> seen(dfa.state_count() * nm, false);
        std::deque<Node> queue;
        std::vector<bool> out(dfa.state_count(), false);
        for (std::size_t q = 0; q < dfa.state_count(); ++q) {
            if (!set[q]) continue;
            for (std::size_t s = 0; s < nm; ++s) {
                if (!m.is_initial(s)) continue;
                seen[q * nm + s] = true;
                queue.push_back({q, s});
                if (!require_nonempty_u && m.is_final(s)) out[q] = true;
            }
        }
        while (!queue.empty()) {
            const Node node = queue.front();
            queue.pop_front();
            for (const auto& [x, md] : m.edges_from(node.m_state)) {
                for (const auto& [y, dd] : dfa.edges_from(node.dfa_state)) {
                    if (x != y) continue;
                    if (m.is_final(md)) out[dd] = true;
                    if (!seen[dd * nm + md]) {
                        seen[dd * nm + md] = true;
                        queue.push_back({dd, md});
                    }
                }
            }
        }
        return out;
    }

    // Automaton accepting the union of right languages of the states in set.
    [[nodiscard]] Nfa set_language(const std::vector<bool>& set) const {
        Nfa out(dfa.alphabet());
        for (std::size_t q = 0; q < dfa.state_count(); ++q)
            out.add_state(set[q], dfa.is_final(q));
        for (std::size_t q = 0; q < dfa.state_count(); ++q)
            for (const auto& [x, dst] : dfa.edges_from(q)) out.add_edge(q, x, dst);
        return out;
    }
};

} // namespace

CodeCheck code_check(const Nfa& l) {
    if (l.accepts_empty_word()) throw EmptyWordInLanguage();
    if (l.is_empty_language()) return CodeCheck{true, std::nullopt};

    const ResidualMachinery rm(l);
    const Nfa lang = rm.set_language(rm.dfa_initial); // L itself

    bool not_code = false;
    std::set<std::vector<bool>> seen;
    std::deque<std::vector<bool>> queue;
    const auto push = [&](const std::vector<bool>& next) {
        bool any = false;
        for (const bool b : next) any = any || b;
        if (!any || not_code) return;
        if (rm.contains_empty(next)) {
            not_code = true;
            return;
        }
        if (seen.insert(next).second) queue.push_back(next);
    };

    // U_1 = L^{-1}L minus the empty word. The exclusion only matters when
    // quotienting L by U_1, where it becomes a nonempty-word constraint;
    // quotients of U_1 by L never see the empty word because L has none.
    const std::vector<bool> u1 = rm.quotient_targets(rm.dfa_initial, lang, false);
    push(rm.quotient_targets(u1, lang, false));                          // L^{-1}U_1
    push(rm.quotient_targets(rm.dfa_initial, rm.set_language(u1), true)); // U_1^{-1}L

    while (!queue.empty() && !not_code) {
        const std::vector<bool> u = queue.front();
        queue.pop_front();
        push(rm.quotient_targets(u, lang, false));                            // L^{-1}U
        push(rm.quotient_targets(rm.dfa_initial, rm.set_language(u), false)); // U^{-1}L
    }

    if (!not_code) return CodeCheck{true, std::nullopt};
    // Extract the shortest word with at least two factorizations: where the
    // factorization count series differs from its Hadamard square.
    const LinearRep counts = factorization_count_rep(l);
    const LinearRep difference =
        sum_rep(hadamard_product(counts, counts),
                scale_rep(Scalar::from_int(Field::rationals(), -1), counts));
    const auto witness = shortest_support_word(minimize(difference).rep);
    if (!witness) throw Error("Sardinas-Patterson and factorization check disagree");
    return CodeCheck{false, witness};
}

} // namespace ratser
