#ifndef RATSER_TESTS_FIXTURES_HPP
#define RATSER_TESTS_FIXTURES_HPP

#include <ratser/linrep.hpp>
#include <ratser/wfa.hpp>

namespace fixtures {

using namespace ratser;

inline Scalar q(long long n) { return Scalar::from_int(Field::rationals(), n); }

inline LinearRep rep(const std::string& letters, std::size_t n,
                     const std::vector<long long>& u,
                     const std::vector<std::vector<std::vector<long long>>>& mu,
                     const std::vector<long long>& v) {
    LinearRep r(Alphabet(letters), Field::rationals(), n);
    for (std::size_t i = 0; i < n; ++i) {
        r.u().at(0, i) = q(u[i]);
        r.v().at(i, 0) = q(v[i]);
    }
    for (std::size_t x = 0; x < mu.size(); ++x)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r.mu(x).at(i, j) = q(mu[x][i][j]);
    return r;
}

// S(x^n) = 2^n.
inline LinearRep r1() { return rep("x", 1, {1}, {{{2}}}, {1}); }

// Swap representation: coefficients alternate 3, 2, 3, 2, ... starting at
// S(_) = 2.
inline LinearRep r2() { return rep("x", 2, {1, 0}, {{{0, 1}, {1, 0}}}, {2, 3}); }

// S(x^n) = 2^n + 3^n.
inline LinearRep r4() { return rep("x", 2, {1, 1}, {{{2, 0}, {0, 3}}}, {1, 1}); }

// S(x^n) = Fibonacci: 0, 1, 1, 2, 3, 5, ...
inline LinearRep fibonacci() { return rep("x", 2, {1, 0}, {{{0, 1}, {1, 1}}}, {0, 1}); }

// s(2k) = 2^k, s(2k+1) = 3^k, via the recurrence s(n+4) = 5 s(n+2) - 6 s(n):
// state (s(n), s(n+1), s(n+2), s(n+3)).
inline LinearRep s_mix() {
    return rep("x", 4, {1, 1, 2, 3},
               {{{0, 0, 0, -6}, {1, 0, 0, 0}, {0, 1, 0, 5}, {0, 0, 1, 0}}},
               {1, 0, 0, 0});
}

// Two disjoint 2-cycles with cycle weights 2 and 3, terminals at opposite
// phases; recognizes s_mix and is unambiguous.
inline Wfa u_mix() {
    const Field f = Field::rationals();
    Wfa a(Alphabet("x"), f);
    a.add_state("e0", q(1), q(1));
    a.add_state("e1", Scalar::zero(f), Scalar::zero(f));
    a.add_state("o0", q(1), Scalar::zero(f));
    a.add_state("o1", Scalar::zero(f), q(1));
    a.add_edge(0, 0, 1, q(2));
    a.add_edge(1, 0, 0, q(1));
    a.add_edge(2, 0, 3, q(1));
    a.add_edge(3, 0, 2, q(3));
    return a;
}

inline Word un(std::size_t n) { return Word{std::vector<std::uint32_t>(n, 0)}; }

} // namespace fixtures

#endif // RATSER_TESTS_FIXTURES_HPP
