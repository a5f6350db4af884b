#include "ratser/formula.hpp"

#include <algorithm>
#include <set>

#include "ratser/io.hpp"

namespace ratser {

namespace {

void factor_into(const BigInt& value, std::set<BigInt>& primes) {
    BigInt n = value < 0 ? BigInt(-value) : value;
    if (n <= 1) return;
    for (BigInt d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            primes.insert(d);
            n /= d;
        }
    if (n > 1) primes.insert(n);
}

std::int64_t valuation(BigInt n, const BigInt& p) {
    if (n < 0) n = -n;
    std::int64_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

void collect_atoms(const RatExpr& e, std::set<BigInt>& primes, BigInt& bound) {
    if (e.kind() == ExprKind::Poly) {
        for (const auto& [w, c] : e.coefficients()) {
            factor_into(c.numerator(), primes);
            factor_into(c.denominator(), primes);
            if (c.is_negative() && bound < 1) bound = 1;
        }
        return;
    }
    collect_atoms(*e.left(), primes, bound);
    if (e.kind() != ExprKind::Star) collect_atoms(*e.right(), primes, bound);
}

void collect_valuation_bound(const RatExpr& e, const std::vector<BigInt>& primes,
                             BigInt& bound) {
    if (e.kind() == ExprKind::Poly) {
        for (const auto& [w, c] : e.coefficients())
            for (const BigInt& p : primes) {
                const std::int64_t v = valuation(c.numerator(), p) +
                                       valuation(c.denominator(), p);
                if (bound < v) bound = v;
            }
        return;
    }
    collect_valuation_bound(*e.left(), primes, bound);
    if (e.kind() != ExprKind::Star) collect_valuation_bound(*e.right(), primes, bound);
}

LinearRep char_rep(const Nfa& l, const Field& f) {
    return to_linear_rep(nfa_to_unit_wfa(l, f));
}

// Exponent series per lambda, by structural recursion (disjoint sums add,
// products add across the split, stars add along the factorization).
std::vector<LinearRep> exponent_reps(const RatExpr& e, const std::vector<Scalar>& lambdas) {
    const Alphabet& alphabet = e.alphabet();
    const Field f = Field::rationals();
    const std::size_t k = lambdas.size();

    if (e.kind() == ExprKind::Poly) {
        std::vector<LinearRep> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::map<Word, Scalar> exps;
            for (const auto& [w, c] : e.coefficients()) {
                std::int64_t exp = 0;
                if (i == 0) {
                    exp = c.is_negative() ? 1 : 0;
                } else {
                    const BigInt p = lambdas[i].numerator();
                    exp = valuation(c.numerator(), p) - valuation(c.denominator(), p);
                }
                if (exp != 0) exps.emplace(w, Scalar::from_int(f, exp));
            }
            out.push_back(poly_rep(alphabet, f, exps));
        }
        return out;
    }

    const std::vector<LinearRep> a = exponent_reps(*e.left(), lambdas);
    if (e.kind() == ExprKind::Sum) {
        const std::vector<LinearRep> b = exponent_reps(*e.right(), lambdas);
        std::vector<LinearRep> out;
        for (std::size_t i = 0; i < k; ++i) out.push_back(sum_rep(a[i], b[i]));
        return out;
    }
    if (e.kind() == ExprKind::Prod) {
        const std::vector<LinearRep> b = exponent_reps(*e.right(), lambdas);
        const LinearRep char_l = char_rep(e.left()->support(), f);
        const LinearRep char_k = char_rep(e.right()->support(), f);
        std::vector<LinearRep> out;
        // c_i = a_i * 1_K + 1_L * b_i on the unambiguous concatenation.
        for (std::size_t i = 0; i < k; ++i)
            out.push_back(sum_rep(prod_rep(a[i], char_k), prod_rep(char_l, b[i])));
        return out;
    }

    // Star of a code language L:
    // c = (1 - 1_{L*} A) ((1_L + A)* - 1_{L*}) sums A over the factors.
    const Nfa& l = e.child()->support();
    const LinearRep char_l = char_rep(l, f);
    const LinearRep char_lstar = char_rep(star_nfa(l), f);
    const Scalar minus_one = Scalar::from_int(f, -1);
    const LinearRep one = poly_rep(alphabet, f, {{Word{}, Scalar::one(f)}});
    std::vector<LinearRep> out;
    for (std::size_t i = 0; i < k; ++i) {
        const LinearRep& ai = a[i];
        const LinearRep left = sum_rep(one, scale_rep(minus_one, prod_rep(char_lstar, ai)));
        const LinearRep right =
            sum_rep(star_rep(sum_rep(char_l, ai)), scale_rep(minus_one, char_lstar));
        out.push_back(prod_rep(left, right));
    }
    return out;
}

} // namespace

Wfa nfa_to_unit_wfa(const Nfa& l, const Field& f) {
    const Nfa d = l.determinize();
    const Scalar one = Scalar::one(f);
    const Scalar zero = Scalar::zero(f);
    Wfa out(l.alphabet(), f);
    for (std::size_t q = 0; q < d.state_count(); ++q)
        out.add_state(std::to_string(q + 1), d.is_initial(q) ? one : zero,
                      d.is_final(q) ? one : zero);
    for (std::size_t q = 0; q < d.state_count(); ++q)
        for (const auto& [x, dst] : d.edges_from(q)) out.add_edge(q, x, dst, one);
    return out;
}

BigInt ExponentFormula::exponent(std::size_t i, const Word& w) const {
    const Scalar value = ratser::evaluate(exponents[i], w);
    if (value.denominator() != 1)
        throw Error("exponent series produced a non-integer value");
    return value.numerator();
}

Scalar ExponentFormula::evaluate(const Word& w) const {
    const Field f = Field::rationals();
    if (!support.accepts(w)) return Scalar::zero(f);
    Scalar out = Scalar::one(f);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const BigInt e = exponent(i, w);
        out = out * lambdas[i].pow(static_cast<long long>(e));
    }
    return out;
}

ExponentFormula extract_formula(const RatExpr& e) {
    if (!e.field().is_rational()) throw NonRationalField();
    if (!e.fully_unambiguous()) throw NotUnambiguous();

    std::set<BigInt> prime_set;
    BigInt bound = 0;
    collect_atoms(e, prime_set, bound);
    std::vector<BigInt> primes(prime_set.begin(), prime_set.end());
    collect_valuation_bound(e, primes, bound);

    const Field f = Field::rationals();
    std::vector<Scalar> lambdas;
    lambdas.push_back(Scalar::from_int(f, -1));
    for (const BigInt& p : primes) lambdas.push_back(Scalar::rational(p, 1));

    std::vector<LinearRep> exps = exponent_reps(e, lambdas);
    return ExponentFormula{std::move(lambdas), std::move(exps),
                           e.support().determinize(), bound};
}

std::string serialize(const ExponentFormula& f) {
    std::string out = "formula k=" + std::to_string(f.lambdas.size()) + " C=" +
                      f.linear_bound.str() + "\n";
    for (std::size_t i = 0; i < f.lambdas.size(); ++i) {
        out += "lambda " + f.lambdas[i].to_string() + "\n";
        out += serialize(f.exponents[i]);
    }
    out += "support\n";
    out += serialize(nfa_to_unit_wfa(f.support, Field::rationals()));
    return out;
}

} // namespace ratser
