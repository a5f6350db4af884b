#include "ratser/wfa.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace ratser {

std::size_t Wfa::add_state(std::string name, Scalar initial, Scalar terminal) {
    if (state_index(name).has_value())
        throw ParseError("duplicate state '" + name + "'");
    if (initial.field() != field_ || terminal.field() != field_) throw FieldMismatch();
    names_.push_back(std::move(name));
    initial_.push_back(std::move(initial));
    terminal_.push_back(std::move(terminal));
    edges_.emplace_back();
    return names_.size() - 1;
}

void Wfa::add_edge(std::size_t src, std::uint32_t letter, std::size_t dst, Scalar weight) {
    if (src >= state_count() || dst >= state_count())
        throw ParseError("edge endpoint out of range");
    if (letter >= alphabet_.size()) throw ParseError("edge letter out of range");
    if (weight.field() != field_) throw FieldMismatch();
    if (weight.is_zero()) throw ParseError("zero-weight edge");
    auto& out = edges_[src];
    const auto pos = std::lower_bound(
        out.begin(), out.end(), std::make_pair(letter, dst),
        [](const Edge& e, const std::pair<std::uint32_t, std::size_t>& key) {
            return std::make_pair(e.letter, e.dst) < key;
        });
    if (pos != out.end() && pos->letter == letter && pos->dst == dst)
        throw ParseError("duplicate edge");
    out.insert(pos, Edge{letter, dst, std::move(weight)});
}

std::optional<std::size_t> Wfa::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t Wfa::edge_count() const {
    std::size_t n = 0;
    for (const auto& out : edges_) n += out.size();
    return n;
}

Scalar evaluate(const Wfa& a, const Word& w) {
    for (const auto letter : w.letters)
        if (letter >= a.alphabet().size())
            throw DimensionMismatch("word letter outside the automaton alphabet");
    const Field& f = a.field();
    std::vector<Scalar> vec;
    vec.reserve(a.state_count());
    for (std::size_t q = 0; q < a.state_count(); ++q) vec.push_back(a.initial(q));
    for (const auto letter : w.letters) {
        std::vector<Scalar> next(a.state_count(), Scalar::zero(f));
        for (std::size_t q = 0; q < a.state_count(); ++q) {
            if (vec[q].is_zero()) continue;
            for (const auto& e : a.edges_from(q)) {
                if (e.letter != letter) continue;
                next[e.dst] += vec[q] * e.weight;
            }
        }
        vec = std::move(next);
    }
    Scalar out = Scalar::zero(f);
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        if (!vec[q].is_zero() && !a.terminal(q).is_zero()) out += vec[q] * a.terminal(q);
    }
    return out;
}

Wfa to_wfa(const LinearRep& r) {
    Wfa a(r.alphabet(), r.field());
    for (std::size_t k = 0; k < r.dim(); ++k)
        a.add_state(std::to_string(k + 1), r.u().at(0, k), r.v().at(k, 0));
    for (std::size_t x = 0; x < r.alphabet().size(); ++x)
        for (std::size_t k = 0; k < r.dim(); ++k)
            for (std::size_t l = 0; l < r.dim(); ++l) {
                const Scalar& w = r.mu(x).at(k, l);
                if (!w.is_zero()) a.add_edge(k, static_cast<std::uint32_t>(x), l, w);
            }
    return a;
}

LinearRep to_linear_rep(const Wfa& a) {
    LinearRep r(a.alphabet(), a.field(), a.state_count());
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        r.u().at(0, q) = a.initial(q);
        r.v().at(q, 0) = a.terminal(q);
        for (const auto& e : a.edges_from(q)) r.mu(e.letter).at(q, e.dst) = e.weight;
    }
    return r;
}

namespace {

std::vector<bool> forward_reachable(const Wfa& a) {
    std::vector<bool> seen(a.state_count(), false);
    std::deque<std::size_t> queue;
    for (std::size_t q = 0; q < a.state_count(); ++q)
        if (!a.initial(q).is_zero()) {
            seen[q] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        for (const auto& e : a.edges_from(q))
            if (!seen[e.dst]) {
                seen[e.dst] = true;
                queue.push_back(e.dst);
            }
    }
    return seen;
}

std::vector<bool> backward_reachable(const Wfa& a) {
    std::vector<std::vector<std::size_t>> preds(a.state_count());
    for (std::size_t q = 0; q < a.state_count(); ++q)
        for (const auto& e : a.edges_from(q)) preds[e.dst].push_back(q);
    std::vector<bool> seen(a.state_count(), false);
    std::deque<std::size_t> queue;
    for (std::size_t q = 0; q < a.state_count(); ++q)
        if (!a.terminal(q).is_zero()) {
            seen[q] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        for (const std::size_t p : preds[q])
            if (!seen[p]) {
                seen[p] = true;
                queue.push_back(p);
            }
    }
    return seen;
}

} // namespace

Wfa trim(const Wfa& a) {
    const auto fwd = forward_reachable(a);
    const auto bwd = backward_reachable(a);
    std::vector<std::size_t> remap(a.state_count(), static_cast<std::size_t>(-1));
    Wfa out(a.alphabet(), a.field());
    for (std::size_t q = 0; q < a.state_count(); ++q)
        if (fwd[q] && bwd[q])
            remap[q] = out.add_state(a.state_name(q), a.initial(q), a.terminal(q));
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        if (remap[q] == static_cast<std::size_t>(-1)) continue;
        for (const auto& e : a.edges_from(q))
            if (remap[e.dst] != static_cast<std::size_t>(-1))
                out.add_edge(remap[q], e.letter, remap[e.dst], e.weight);
    }
    return out;
}

bool is_deterministic(const Wfa& a) {
    std::size_t initials = 0;
    for (std::size_t q = 0; q < a.state_count(); ++q)
        if (!a.initial(q).is_zero()) ++initials;
    if (initials > 1) return false;
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        const auto& out = a.edges_from(q);
        for (std::size_t i = 1; i < out.size(); ++i)
            if (out[i].letter == out[i - 1].letter) return false;
    }
    return true;
}

std::optional<Word> ambiguity_witness(const Wfa& input) {
    const Wfa a = trim(input);
    const std::size_t n = a.state_count();
    if (n == 0) return std::nullopt;

    // Nodes of the self-product with a flag recording whether the pair of
    // paths has already diverged: id = (p*n + q)*2 + flag.
    const std::size_t node_count = n * n * 2;
    const auto node = [n](std::size_t p, std::size_t q, bool flag) {
        return (p * n + q) * 2 + (flag ? 1 : 0);
    };

    std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> rev(node_count);
    for (std::size_t p = 0; p < n; ++p)
        for (const auto& ep : a.edges_from(p))
            for (std::size_t q = 0; q < n; ++q)
                for (const auto& eq : a.edges_from(q)) {
                    if (ep.letter != eq.letter) continue;
                    const bool diverge = ep.dst != eq.dst;
                    for (const bool flag : {false, true}) {
                        const std::size_t from = node(p, q, flag);
                        const std::size_t to = node(ep.dst, eq.dst, flag || diverge);
                        rev[to].emplace_back(ep.letter, from);
                    }
                }

    // Backward BFS from accepting nodes gives the shortest completion length.
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(node_count, kInf);
    std::deque<std::size_t> queue;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (a.terminal(p).is_zero() || a.terminal(q).is_zero()) continue;
            const std::size_t id = node(p, q, true);
            dist[id] = 0;
            queue.push_back(id);
        }
    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();
        for (const auto& [letter, from] : rev[id]) {
            if (dist[from] == kInf) {
                dist[from] = dist[id] + 1;
                queue.push_back(from);
            }
        }
    }

    std::vector<std::size_t> frontier;
    std::size_t best = kInf;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (a.initial(p).is_zero() || a.initial(q).is_zero()) continue;
            best = std::min(best, dist[node(p, q, p != q)]);
        }
    if (best == kInf) return std::nullopt;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (a.initial(p).is_zero() || a.initial(q).is_zero()) continue;
            const std::size_t id = node(p, q, p != q);
            if (dist[id] == best) frontier.push_back(id);
        }

    // Greedy walk towards acceptance picks the lexicographically least word
    // among the shortest witnesses.
    std::vector<std::vector<std::vector<std::size_t>>> fwd(
        node_count, std::vector<std::vector<std::size_t>>(a.alphabet().size()));
    for (std::size_t to = 0; to < node_count; ++to)
        for (const auto& [letter, from] : rev[to]) fwd[from][letter].push_back(to);

    Word witness;
    std::size_t remaining = best;
    while (remaining > 0) {
        for (std::uint32_t x = 0; x < a.alphabet().size(); ++x) {
            std::vector<std::size_t> next;
            for (const std::size_t id : frontier)
                for (const std::size_t to : fwd[id][x])
                    if (dist[to] == remaining - 1) next.push_back(to);
            if (!next.empty()) {
                std::sort(next.begin(), next.end());
                next.erase(std::unique(next.begin(), next.end()), next.end());
                witness.letters.push_back(x);
                frontier = std::move(next);
                break;
            }
        }
        --remaining;
    }
    return witness;
}

Wfa hadamard_subinverse(const Wfa& a) {
    if (auto w = ambiguity_witness(a)) throw AmbiguousInput(a.alphabet(), *w);
    Wfa out(a.alphabet(), a.field());
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        const Scalar& i = a.initial(q);
        const Scalar& t = a.terminal(q);
        out.add_state(a.state_name(q), i.is_zero() ? i : i.inverse(),
                      t.is_zero() ? t : t.inverse());
    }
    for (std::size_t q = 0; q < a.state_count(); ++q)
        for (const auto& e : a.edges_from(q))
            out.add_edge(q, e.letter, e.dst, e.weight.inverse());
    return out;
}

} // namespace ratser
