#include "ratser/elim.hpp"

namespace ratser {

namespace {

// Zero series is represented by a null pointer in the elimination table.
ExprPtr add(ExprPtr a, ExprPtr b) {
    if (!a) return b;
    if (!b) return a;
    return RatExpr::sum(std::move(a), std::move(b));
}

ExprPtr mul(ExprPtr a, ExprPtr b) {
    if (!a || !b) return nullptr;
    return RatExpr::prod(std::move(a), std::move(b));
}

} // namespace

ExprPtr state_elimination(const Wfa& input) {
    if (auto w = ambiguity_witness(input)) throw AmbiguousInput(input.alphabet(), *w);
    const Wfa a = trim(input);
    const std::size_t n = a.state_count();
    const Alphabet& alphabet = a.alphabet();
    const Field& field = a.field();

    const auto eps_poly = [&](const Scalar& c) {
        std::map<Word, Scalar> m;
        m.emplace(Word{}, c);
        return RatExpr::poly(alphabet, field, std::move(m));
    };

    // table[p][q] = series of non-empty paths p -> q with intermediate
    // states restricted to the already-eliminated set.
    std::vector<std::vector<ExprPtr>> table(n, std::vector<ExprPtr>(n));
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<std::map<Word, Scalar>> letter_polys(n);
        for (const auto& e : a.edges_from(p))
            letter_polys[e.dst].emplace(Word{std::vector<std::uint32_t>{e.letter}},
                                        e.weight);
        for (std::size_t q = 0; q < n; ++q)
            if (!letter_polys[q].empty())
                table[p][q] = RatExpr::poly(alphabet, field, std::move(letter_polys[q]));
    }

    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::vector<ExprPtr>> next(n, std::vector<ExprPtr>(n));
        const ExprPtr loop = table[r][r];
        const ExprPtr loop_star = loop ? RatExpr::star(loop) : nullptr;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                ExprPtr via;
                if (table[p][r] && table[r][q]) {
                    via = loop_star ? mul(mul(table[p][r], loop_star), table[r][q])
                                    : mul(table[p][r], table[r][q]);
                }
                next[p][q] = add(table[p][q], std::move(via));
            }
        table = std::move(next);
    }

    // S = sum I(p) S_{p,Q,q} T(q) + sum I(p) T(p).
    ExprPtr result;
    for (std::size_t p = 0; p < n; ++p) {
        if (a.initial(p).is_zero()) continue;
        for (std::size_t q = 0; q < n; ++q) {
            if (a.terminal(q).is_zero() || !table[p][q]) continue;
            const Scalar c = a.initial(p) * a.terminal(q);
            result = add(std::move(result), mul(eps_poly(c), table[p][q]));
        }
    }
    Scalar eps_term = Scalar::zero(field);
    for (std::size_t p = 0; p < n; ++p) eps_term += a.initial(p) * a.terminal(p);
    if (!eps_term.is_zero()) result = add(std::move(result), eps_poly(eps_term));

    if (!result) result = RatExpr::poly(alphabet, field, {});
    if (!result->fully_unambiguous())
        throw Error("state elimination produced a non-certified operation");
    return result;
}

} // namespace ratser
