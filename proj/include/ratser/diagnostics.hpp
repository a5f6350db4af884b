#ifndef RATSER_DIAGNOSTICS_HPP
#define RATSER_DIAGNOSTICS_HPP

#include <optional>
#include <set>

#include "ratser/linrep.hpp"

namespace ratser {

// Word-group length of a nonzero rational: sum of absolute prime valuations
// plus one for a negative sign. Satisfies l(1) = 0, l(g) = l(1/g), and
// l(gh) <= l(g) + l(h).
Scalar length_q(const Scalar& g);

// Prefix-distance metric |u| + |v| - 2|lgcd(u, v)|.
std::size_t word_distance(const Word& u, const Word& v);

struct VariationReport {
    std::size_t c = 0;
    std::size_t maxlen = 0;
    Scalar max;
    std::optional<std::pair<Word, Word>> witness;
    [[nodiscard]] std::string to_string(const Alphabet& alphabet) const;
};

// Scans all word pairs u, v with |u|, |v| <= maxlen, nonzero coefficients,
// and d(u, v) <= c; reports the maximum l(S(u)/S(v)) with a witnessing pair
// (lexicographically least among maximizers). Empirical only.
VariationReport variation_report(const LinearRep& r, std::size_t c, std::size_t maxlen);

struct PrimeSupport {
    std::set<BigInt> primes;
    bool has_sign = false; // some coefficient is negative
    [[nodiscard]] std::string to_string() const;
};

// Union of the prime supports of all nonzero coefficients on words of
// length <= maxlen; a necessary-condition probe for the Polya property.
PrimeSupport polya_support(const LinearRep& r, std::size_t maxlen);

} // namespace ratser

#endif // RATSER_DIAGNOSTICS_HPP
