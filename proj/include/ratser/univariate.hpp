#ifndef RATSER_UNIVARIATE_HPP
#define RATSER_UNIVARIATE_HPP

#include "ratser/transform.hpp"

namespace ratser {

// Rational function P/Q over Q with Q(0) = 1 after normalization;
// coefficient lists are ascending in degree.
struct RationalFunction {
    std::vector<Scalar> numerator;
    std::vector<Scalar> denominator;
};

// Normalizes so that the denominator has constant term 1; throws
// QZeroAtOrigin when Q(0) = 0.
RationalFunction make_rational_function(std::vector<Scalar> numerator,
                                        std::vector<Scalar> denominator);

// Literal syntax: P/Q with integer-coefficient polynomials in x and '^'
// powers, e.g. "x/(1-x-x^2)".
RationalFunction parse_ratfun(const std::string& text);

// Companion-matrix representation over the alphabet {x} whose coefficients
// are the power series expansion of P/Q at 0.
LinearRep companion_rep(const RationalFunction& f);

// Arithmetic-progression structure of a univariate series:
// s(kd + r) = alpha_r * beta_r^k away from the finite exception set.
struct APForm {
    std::uint64_t period = 1;
    std::vector<Scalar> alpha;                          // per residue
    std::vector<Scalar> beta;                           // per residue, nonzero
    std::vector<std::pair<std::uint64_t, Scalar>> exceptions; // sorted by index

    [[nodiscard]] Scalar evaluate(std::uint64_t n) const;
};

std::string serialize(const APForm& form);

// Extracts the progression structure from a trim unambiguous automaton over
// a one-letter alphabet, certifying each progression by an explicit cycle.
APForm extract_ap_form(const Wfa& a);

// companion_rep -> minimize -> disambiguate -> extract_ap_form; errors
// propagate (a disambiguation failure is evidence of a non-Polya input).
APForm univariate_pipeline(const RationalFunction& f,
                           const TransformOptions& options = {});

} // namespace ratser

#endif // RATSER_UNIVARIATE_HPP
