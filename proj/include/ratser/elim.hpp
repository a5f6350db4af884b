#ifndef RATSER_ELIM_HPP
#define RATSER_ELIM_HPP

#include "ratser/ratexpr.hpp"

namespace ratser {

// Rational expression denoting the series of an unambiguous automaton,
// computed by state elimination on the trimmed automaton. Every Sum, Prod,
// and Star node of the result carries a certified unambiguous flag.
// Throws AmbiguousInput (with the shortest witness) on ambiguous automata.
ExprPtr state_elimination(const Wfa& a);

} // namespace ratser

#endif // RATSER_ELIM_HPP
