#ifndef RATSER_MINIMIZE_HPP
#define RATSER_MINIMIZE_HPP

#include <functional>

#include "ratser/linrep.hpp"

namespace ratser {

// Breadth-first spanning words: the vectors u*mu(w) for the left words span
// the row space, mu(w)*v for the right words span the column space.
struct MinimalityCertificate {
    std::vector<Word> left_words;
    std::vector<Word> right_words;
};

struct MinimizationResult {
    LinearRep rep;
    MinimalityCertificate certificate;
};

// Representation of the same series with minimal dimension (left reduction,
// then right reduction, then a two-sided span assertion).
MinimizationResult minimize(const LinearRep& r);

// Rank of the finite Hankel section indexed by words of length <= l.
std::size_t hankel_rank(const Alphabet& alphabet, const Field& field,
                        const std::function<Scalar(const Word&)>& coefficient,
                        std::size_t l);

// Coefficient-preserving basis change of a minimal representation with
// dimension >= 1: conjugates by the matrix of right spanning columns
// (first word empty), so the output has v = e_1 and every orbit-row entry
// is a coefficient of the series.
LinearRep good_basis(const LinearRep& r);

} // namespace ratser

#endif // RATSER_MINIMIZE_HPP
