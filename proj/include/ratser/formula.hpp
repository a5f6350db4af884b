#ifndef RATSER_FORMULA_HPP
#define RATSER_FORMULA_HPP

#include "ratser/ratexpr.hpp"

namespace ratser {

// Pólya structure data of an unambiguous rational series over Q:
// S(w) = prod_i lambda_i^{a_i(w)} on the support language, 0 elsewhere.
// lambda_1 = -1 and the remaining constants are the primes dividing some
// polynomial coefficient; the exponent series a_i are integer-valued
// representations with |a_i(w)| <= C|w| for nonempty words.
struct ExponentFormula {
    std::vector<Scalar> lambdas;
    std::vector<LinearRep> exponents;
    Nfa support;        // deterministic, accepts exactly supp(S)
    BigInt linear_bound; // C

    [[nodiscard]] Scalar evaluate(const Word& w) const;
    [[nodiscard]] BigInt exponent(std::size_t i, const Word& w) const;
};

// Structural extraction along the expression tree; requires every operation
// node flagged unambiguous and rational scalars.
ExponentFormula extract_formula(const RatExpr& e);

// Unit-weight automaton for a language (used for characteristic series and
// for printing supports); states follow the determinized automaton.
Wfa nfa_to_unit_wfa(const Nfa& l, const Field& f);

std::string serialize(const ExponentFormula& f);

} // namespace ratser

#endif // RATSER_FORMULA_HPP
