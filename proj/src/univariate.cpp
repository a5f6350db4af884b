#include "ratser/univariate.hpp"

#include <algorithm>
#include <numeric>

#include "ratser/minimize.hpp"

namespace ratser {

namespace {

void trim_trailing_zeros(std::vector<Scalar>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

} // namespace

RationalFunction make_rational_function(std::vector<Scalar> numerator,
                                        std::vector<Scalar> denominator) {
    trim_trailing_zeros(numerator);
    trim_trailing_zeros(denominator);
    if (denominator.empty() || denominator.front().is_zero()) throw QZeroAtOrigin();
    const Scalar q0 = denominator.front();
    if (!q0.is_one()) {
        const Scalar inv = q0.inverse();
        for (auto& c : numerator) c *= inv;
        for (auto& c : denominator) c *= inv;
    }
    return RationalFunction{std::move(numerator), std::move(denominator)};
}

namespace {

struct RatfunLexer {
    std::string text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    [[nodiscard]] char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    char next() {
        skip_space();
        if (pos >= text.size()) throw ParseError("unexpected end of rational function");
        return text[pos++];
    }
    BigInt integer() {
        skip_space();
        const std::size_t begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == begin) throw ParseError("expected an integer");
        return BigInt(text.substr(begin, pos - begin));
    }
};

// polynomial := [sign] monomial (sign monomial)*
// monomial   := int ['*']? ['x' ['^' int]] | 'x' ['^' int]
std::vector<Scalar> parse_polynomial(const std::string& text) {
    RatfunLexer lex{text};
    std::vector<Scalar> coeffs;
    const Field f = Field::rationals();
    const auto bump = [&](std::size_t degree, const Scalar& c) {
        if (coeffs.size() <= degree) coeffs.resize(degree + 1, Scalar::zero(f));
        coeffs[degree] += c;
    };
    bool first = true;
    while (lex.peek() != '\0') {
        BigInt sign = 1;
        char c = lex.peek();
        if (c == '+' || c == '-') {
            lex.next();
            if (c == '-') sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between monomials");
        }
        first = false;

        BigInt coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            coeff = lex.integer();
            saw_coeff = true;
            if (lex.peek() == '*') lex.next();
        }
        std::size_t degree = 0;
        if (lex.peek() == 'x') {
            lex.next();
            degree = 1;
            if (lex.peek() == '^') {
                lex.next();
                degree = static_cast<std::size_t>(lex.integer());
            }
        } else if (!saw_coeff) {
            throw ParseError("expected a coefficient or 'x'");
        }
        bump(degree, Scalar::rational(sign * coeff, 1));
    }
    if (coeffs.empty()) throw ParseError("empty polynomial");
    return coeffs;
}

// Strips one level of parentheses when they wrap the whole string.
std::string strip_outer_parens(std::string s) {
    for (;;) {
        std::size_t b = 0;
        std::size_t e = s.size();
        while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
        s = s.substr(b, e - b);
        if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
        int depth = 0;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0) return s; // outer parens do not match each other
        }
        s = s.substr(1, s.size() - 2);
    }
}

} // namespace

RationalFunction parse_ratfun(const std::string& text) {
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
            if (slash != std::string::npos)
                throw ParseError("more than one top-level '/'");
            slash = i;
        }
    }
    const std::string num_text =
        strip_outer_parens(slash == std::string::npos ? text : text.substr(0, slash));
    const std::string den_text =
        slash == std::string::npos ? "1" : strip_outer_parens(text.substr(slash + 1));
    return make_rational_function(parse_polynomial(num_text), parse_polynomial(den_text));
}

LinearRep companion_rep(const RationalFunction& f) {
    const Field field = Field::rationals();
    const Alphabet alphabet("x");
    const std::size_t deg_q = f.denominator.size() - 1;
    if (f.numerator.empty()) return LinearRep(alphabet, field, 0); // zero series
    const std::size_t deg_p = f.numerator.size() - 1;
    const std::size_t m = std::max(deg_p + 1, deg_q);

    // s(n) = P_n + sum_{i=1..d} q_i s(n-i) with Q = 1 - sum q_i x^i.
    std::vector<Scalar> s;
    s.reserve(m);
    for (std::size_t n = 0; n < m; ++n) {
        Scalar val = n <= deg_p ? f.numerator[n] : Scalar::zero(field);
        for (std::size_t i = 1; i <= std::min(n, deg_q); ++i)
            val -= f.denominator[i] * s[n - i];
        s.push_back(val);
    }

    LinearRep r(alphabet, field, m);
    for (std::size_t i = 0; i < m; ++i) r.u().at(0, i) = s[i];
    r.v().at(0, 0) = Scalar::one(field);
    for (std::size_t j = 0; j + 1 < m; ++j) r.mu(0).at(j + 1, j) = Scalar::one(field);
    for (std::size_t i = 1; i <= deg_q; ++i) r.mu(0).at(m - i, m - 1) = -f.denominator[i];
    return r;
}

Scalar APForm::evaluate(std::uint64_t n) const {
    for (const auto& [index, value] : exceptions)
        if (index == n) return value;
    const std::uint64_t r = n % period;
    const std::uint64_t k = n / period;
    return alpha[r] * beta[r].pow(static_cast<long long>(k));
}

std::string serialize(const APForm& form) {
    std::string out = "apform d=" + std::to_string(form.period) + "\n";
    for (std::uint64_t r = 0; r < form.period; ++r)
        out += "residue " + std::to_string(r) + " alpha " + form.alpha[r].to_string() +
               " beta " + form.beta[r].to_string() + "\n";
    for (const auto& [index, value] : form.exceptions)
        out += "exception " + std::to_string(index) + " " + value.to_string() + "\n";
    return out;
}

namespace {

struct Progression {
    std::uint64_t base;
    std::uint64_t difference;
    Scalar cycle_weight;
};

// Unique path of the given length from q back to q (uniqueness holds in a
// trim unambiguous automaton); returns its weight.
Scalar unique_cycle_weight(const Wfa& a, std::size_t q, std::uint64_t length) {
    const Field& f = a.field();
    std::vector<std::size_t> count(a.state_count(), 0);
    std::vector<Scalar> weight(a.state_count(), Scalar::zero(f));
    count[q] = 1;
    weight[q] = Scalar::one(f);
    for (std::uint64_t step = 0; step < length; ++step) {
        std::vector<std::size_t> next_count(a.state_count(), 0);
        std::vector<Scalar> next_weight(a.state_count(), Scalar::zero(f));
        for (std::size_t p = 0; p < a.state_count(); ++p) {
            if (count[p] == 0) continue;
            for (const auto& e : a.edges_from(p)) {
                next_count[e.dst] += count[p];
                if (next_count[e.dst] > 1)
                    throw Error("duplicate equal-length paths in an unambiguous automaton");
                next_weight[e.dst] = weight[p] * e.weight;
            }
        }
        count = std::move(next_count);
        weight = std::move(next_weight);
    }
    if (count[q] != 1)
        throw Error("expected a unique cycle of length " + std::to_string(length));
    return weight[q];
}

} // namespace

APForm extract_ap_form(const Wfa& input) {
    if (input.alphabet().size() != 1) throw NotUnary();
    if (auto w = ambiguity_witness(input)) throw AmbiguousInput(input.alphabet(), *w);
    const Wfa a = trim(input);
    const Field& f = a.field();
    const std::size_t nq = a.state_count();

    APForm form;
    form.alpha.assign(1, Scalar::zero(f));
    form.beta.assign(1, Scalar::one(f));
    if (nq == 0) return form; // zero series

    const std::uint64_t window = 2 * nq * nq + nq;
    const auto coefficient = [&](std::uint64_t n) {
        return evaluate(a, Word{std::vector<std::uint32_t>(n, 0)});
    };

    // Accepting path lengths per initial-terminal pair, up to the window.
    std::vector<Progression> progressions;
    std::vector<std::pair<std::uint64_t, Scalar>> singletons;
    std::vector<bool> claimed(window + 1, false);
    for (std::size_t p = 0; p < nq; ++p) {
        if (a.initial(p).is_zero()) continue;
        std::vector<bool> reach(nq, false);
        reach[p] = true;
        std::vector<std::vector<bool>> lengths(nq, std::vector<bool>(window + 1, false));
        for (std::uint64_t n = 0;; ++n) {
            for (std::size_t q = 0; q < nq; ++q)
                if (reach[q] && !a.terminal(q).is_zero()) lengths[q][n] = true;
            if (n == window) break;
            std::vector<bool> next(nq, false);
            for (std::size_t s = 0; s < nq; ++s) {
                if (!reach[s]) continue;
                for (const auto& e : a.edges_from(s)) next[e.dst] = true;
            }
            reach = std::move(next);
        }
        for (std::size_t q = 0; q < nq; ++q) {
            if (a.terminal(q).is_zero()) continue;
            std::vector<std::uint64_t> elements;
            for (std::uint64_t n = 0; n <= window; ++n)
                if (lengths[q][n]) elements.push_back(n);
            if (elements.empty()) continue;
            // Unambiguity keeps the pair length sets pairwise disjoint.
            for (const std::uint64_t n : elements) {
                if (claimed[n]) throw Error("accepting length sets are not disjoint");
                claimed[n] = true;
            }
            if (elements.size() == 1) {
                singletons.emplace_back(elements[0], coefficient(elements[0]));
                continue;
            }
            std::uint64_t diff = elements[1] - elements[0];
            for (std::size_t i = 1; i + 1 < elements.size(); ++i)
                diff = std::min(diff, elements[i + 1] - elements[i]);
            // The set must be exactly the progression base + k*diff.
            for (std::uint64_t n = 0; n <= window; ++n) {
                const bool expected =
                    n >= elements[0] && (n - elements[0]) % diff == 0;
                if (lengths[q][n] != expected)
                    throw Error("accepting lengths are not an arithmetic progression");
            }
            progressions.push_back(
                Progression{elements[0], diff, unique_cycle_weight(a, q, diff)});
        }
    }

    // Refine all progressions to the common difference d.
    std::uint64_t d = 1;
    for (const auto& prog : progressions) d = std::lcm(d, prog.difference);
    form.period = d;
    form.alpha.assign(d, Scalar::zero(f));
    form.beta.assign(d, Scalar::one(f));
    std::vector<bool> assigned(d, false);
    std::uint64_t check_limit = d;
    for (const auto& prog : progressions) {
        const std::uint64_t copies = d / prog.difference;
        for (std::uint64_t j = 0; j < copies; ++j) {
            const std::uint64_t base = prog.base + j * prog.difference;
            const std::uint64_t r = base % d;
            if (assigned[r]) throw Error("progressions collide on a residue");
            assigned[r] = true;
            const Scalar beta = prog.cycle_weight.pow(static_cast<long long>(copies));
            const std::uint64_t k_base = base / d;
            form.alpha[r] =
                coefficient(base) * beta.pow(static_cast<long long>(k_base)).inverse();
            form.beta[r] = beta;
            check_limit = std::max(check_limit, base);
        }
    }
    for (const auto& [n, value] : singletons) check_limit = std::max(check_limit, n);

    // Exceptions: indices below the progression bases (or singletons) where
    // the progression formula misses the true coefficient.
    for (std::uint64_t n = 0; n <= check_limit; ++n) {
        const Scalar actual = coefficient(n);
        const std::uint64_t r = n % d;
        const Scalar predicted = form.alpha[r] * form.beta[r].pow(static_cast<long long>(n / d));
        if (actual != predicted) form.exceptions.emplace_back(n, actual);
    }

    // The form must reproduce the series well past every exception.
    std::uint64_t validate_to = check_limit + 4 * d;
    for (std::uint64_t n = 0; n <= validate_to; ++n)
        if (form.evaluate(n) != coefficient(n))
            throw Error("progression form fails to reproduce the series");
    return form;
}

APForm univariate_pipeline(const RationalFunction& f, const TransformOptions& options) {
    const LinearRep rep = companion_rep(f);
    const MinimizationResult minimal = minimize(rep);
    const Wfa unambiguous = disambiguate(minimal.rep, options);
    return extract_ap_form(unambiguous);
}

} // namespace ratser
