#include "ratser/diagnostics.hpp"

#include <map>

namespace ratser {

namespace {

std::map<BigInt, std::uint64_t> factor(BigInt n) {
    if (n < 0) n = -n;
    std::map<BigInt, std::uint64_t> out;
    for (BigInt d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    if (n > 1) ++out[n];
    return out;
}

} // namespace

Scalar length_q(const Scalar& g) {
    if (!g.field().is_rational()) throw NonRationalField();
    if (g.is_zero()) throw DivideByZero();
    std::uint64_t total = g.is_negative() ? 1 : 0;
    for (const auto& [p, e] : factor(g.numerator())) total += e;
    for (const auto& [p, e] : factor(g.denominator())) total += e;
    return Scalar::rational(BigInt(total), 1);
}

std::size_t word_distance(const Word& u, const Word& v) {
    std::size_t common = 0;
    while (common < u.size() && common < v.size() &&
           u.letters[common] == v.letters[common])
        ++common;
    return u.size() + v.size() - 2 * common;
}

std::string VariationReport::to_string(const Alphabet& alphabet) const {
    std::string out = "variation c=" + std::to_string(c) +
                      " maxlen=" + std::to_string(maxlen) + " max=" + max.to_string();
    if (witness)
        out += " witness " + format_word(alphabet, witness->first) + " " +
               format_word(alphabet, witness->second);
    else
        out += " witness - -";
    return out;
}

VariationReport variation_report(const LinearRep& r, std::size_t c, std::size_t maxlen) {
    if (!r.field().is_rational()) throw NonRationalField();
    const std::vector<Word> words = words_up_to(r.alphabet(), maxlen);
    std::vector<Scalar> coeffs;
    coeffs.reserve(words.size());
    for (const Word& w : words) coeffs.push_back(evaluate(r, w));

    VariationReport report{c, maxlen, Scalar::zero(Field::rationals()), std::nullopt};
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        for (std::size_t j = i; j < words.size(); ++j) {
            if (coeffs[j].is_zero()) continue;
            if (word_distance(words[i], words[j]) > c) continue;
            const Scalar l = length_q(coeffs[i] / coeffs[j]);
            if (report.max < l) {
                report.max = l;
                report.witness = std::make_pair(words[i], words[j]);
            }
        }
    }
    return report;
}

std::string PrimeSupport::to_string() const {
    std::string out = "polya-support";
    if (has_sign) out += " -1";
    for (const BigInt& p : primes) out += " " + p.str();
    return out;
}

PrimeSupport polya_support(const LinearRep& r, std::size_t maxlen) {
    if (!r.field().is_rational()) throw NonRationalField();
    PrimeSupport support;
    for (const Word& w : words_up_to(r.alphabet(), maxlen)) {
        const Scalar s = evaluate(r, w);
        if (s.is_zero()) continue;
        if (s.is_negative()) support.has_sign = true;
        for (const auto& [p, e] : factor(s.numerator())) support.primes.insert(p);
        for (const auto& [p, e] : factor(s.denominator())) support.primes.insert(p);
    }
    return support;
}

} // namespace ratser
