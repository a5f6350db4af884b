#include <doctest.h>

#include <ratser/elim.hpp>
#include <ratser/io.hpp>

#include "fixtures.hpp"

using namespace ratser;
using fixtures::q;
using fixtures::un;

namespace {

const Field kQ = Field::rationals();

ExprPtr poly1(const Alphabet& alphabet, const std::string& word, long long c) {
    std::map<Word, Scalar> m;
    m.emplace(parse_word(alphabet, word), q(c));
    return RatExpr::poly(alphabet, kQ, std::move(m));
}

// Certified node-level re-checks along the whole tree.
void check_certificates(const RatExpr& e) {
    switch (e.kind()) {
        case ExprKind::Poly:
            return;
        case ExprKind::Sum:
            CHECK(disjoint_languages(e.left()->support(), e.right()->support()));
            check_certificates(*e.left());
            check_certificates(*e.right());
            return;
        case ExprKind::Prod: {
            CHECK(e.unambiguous());
            check_certificates(*e.left());
            check_certificates(*e.right());
            return;
        }
        case ExprKind::Star:
            CHECK(code_check(e.child()->support()).is_code);
            check_certificates(*e.child());
            return;
    }
}

} // namespace

TEST_CASE("expression to representation examples") {
    const Alphabet x("x");
    const Alphabet ab("ab");
    SUBCASE("constant polynomial") {
        const ExprPtr e = poly1(x, "_", 5);
        const LinearRep r = to_linear_rep(*e);
        CHECK(evaluate(r, Word{}) == q(5));
        CHECK(evaluate(r, un(1)).is_zero());
    }
    SUBCASE("geometric star") {
        const ExprPtr e = RatExpr::star(poly1(x, "x", 2));
        const LinearRep r = to_linear_rep(*e);
        for (std::size_t n = 0; n <= 8; ++n) CHECK(evaluate(r, un(n)) == q(1LL << n));
    }
    SUBCASE("product of two stars") {
        const ExprPtr e =
            RatExpr::prod(RatExpr::star(poly1(ab, "a", 2)), RatExpr::star(poly1(ab, "b", 3)));
        const LinearRep r = to_linear_rep(*e);
        CHECK(evaluate(r, parse_word(ab, "aab")) == q(12)); // 2^2 * 3
        CHECK(evaluate(r, parse_word(ab, "ba")).is_zero());
        CHECK(evaluate(r, Word{}) == q(1));
        CHECK(e->fully_unambiguous());
    }
    SUBCASE("star of a series with nonzero constant term is rejected") {
        CHECK_THROWS_AS(RatExpr::star(poly1(x, "_", 1)), StarOnNonproper);
    }
}

TEST_CASE("certification flags reflect the support structure") {
    const Alphabet ab("ab");
    SUBCASE("overlapping sum is flagged ambiguous") {
        const ExprPtr e = RatExpr::sum(poly1(ab, "a", 1), poly1(ab, "a", 2));
        CHECK_FALSE(e->unambiguous());
        CHECK_FALSE(e->fully_unambiguous());
    }
    SUBCASE("disjoint sum is certified") {
        const ExprPtr e = RatExpr::sum(poly1(ab, "a", 1), poly1(ab, "b", 2));
        CHECK(e->unambiguous());
    }
    SUBCASE("product with several split points is flagged ambiguous") {
        // supp = {a, aa} on both sides: aaa splits two ways.
        const ExprPtr base = RatExpr::sum(poly1(ab, "a", 1), poly1(ab, "aa", 1));
        const ExprPtr e = RatExpr::prod(base, base);
        CHECK_FALSE(e->unambiguous());
    }
    SUBCASE("star over a non-code is flagged ambiguous") {
        const ExprPtr base = RatExpr::sum(RatExpr::sum(poly1(ab, "a", 1), poly1(ab, "ab", 1)),
                                          poly1(ab, "ba", 1));
        const ExprPtr e = RatExpr::star(base);
        CHECK_FALSE(e->unambiguous());
    }
}

TEST_CASE("expression text form round-trips") {
    const Alphabet ab("ab");
    const ExprPtr e =
        RatExpr::sum(RatExpr::prod(RatExpr::star(poly1(ab, "a", 2)), poly1(ab, "b", 3)),
                     poly1(ab, "_", 1));
    const std::string text = format_expr(*e);
    const ExprPtr back = parse_expr(ab, kQ, text);
    CHECK(format_expr(*back) == text);
    const LinearRep r1 = to_linear_rep(*e);
    const LinearRep r2 = to_linear_rep(*back);
    for (const Word& w : words_up_to(ab, 6)) CHECK(evaluate(r1, w) == evaluate(r2, w));

    CHECK_THROWS_AS(parse_expr(ab, kQ, "(* (poly (_ 1)))"), StarOnNonproper);
    CHECK_THROWS_AS(parse_expr(ab, kQ, "(poly (a 0))"), ParseError);
    CHECK_THROWS_AS(parse_expr(ab, kQ, "(+ (poly (a 1)))"), ParseError);

    const std::string file_text = serialize_expr_file(*e);
    const ExprPtr from_file = parse_expr_file(file_text);
    CHECK(serialize_expr_file(*from_file) == file_text);
}

TEST_CASE("state elimination examples") {
    SUBCASE("one-state doubling loop") {
        const Wfa a = to_wfa(fixtures::r1());
        const ExprPtr e = state_elimination(a);
        const LinearRep r = to_linear_rep(*e);
        for (std::size_t n = 0; n <= 6; ++n)
            CHECK(evaluate(r, un(n)) == q(1LL << n));
        check_certificates(*e);
    }
    SUBCASE("empty automaton gives the zero polynomial") {
        const Wfa a(Alphabet("x"), kQ);
        const ExprPtr e = state_elimination(a);
        CHECK(e->is_zero_poly());
    }
    SUBCASE("swap automaton agrees with its series") {
        const Wfa a = to_wfa(fixtures::r2());
        const ExprPtr e = state_elimination(a);
        const LinearRep r = to_linear_rep(*e);
        for (const Word& w : words_up_to(a.alphabet(), 8))
            CHECK(evaluate(r, w) == evaluate(a, w));
        check_certificates(*e);
    }
    SUBCASE("interleaved union automaton") {
        const Wfa a = fixtures::u_mix();
        const ExprPtr e = state_elimination(a);
        const LinearRep r = to_linear_rep(*e);
        for (const Word& w : words_up_to(a.alphabet(), 10))
            CHECK(evaluate(r, w) == evaluate(a, w));
        check_certificates(*e);
        CHECK(e->fully_unambiguous());
    }
    SUBCASE("ambiguous input is rejected with a witness") {
        Wfa a(Alphabet("a"), kQ);
        a.add_state("p", q(1), q(0));
        a.add_state("r", q(1), q(0));
        a.add_state("t", q(0), q(1));
        a.add_edge(0, 0, 2, q(1));
        a.add_edge(1, 0, 2, q(1));
        CHECK_THROWS_AS(state_elimination(a), AmbiguousInput);
    }
}

TEST_CASE("hadamard operations") {
    SUBCASE("reciprocal of the doubling loop") {
        const Wfa inv = hadamard_subinverse(to_wfa(fixtures::r1()));
        for (std::size_t n = 0; n <= 8; ++n)
            CHECK(evaluate(inv, un(n)) == q(1) / q(1LL << n));
    }
    SUBCASE("interleaved union automaton inverts cycle weights") {
        const Wfa inv = hadamard_subinverse(fixtures::u_mix());
        const Wfa orig = fixtures::u_mix();
        for (std::size_t n = 0; n <= 10; ++n) {
            const Scalar s = evaluate(orig, un(n));
            const Scalar si = evaluate(inv, un(n));
            if (s.is_zero()) {
                CHECK(si.is_zero());
            } else {
                CHECK(s * si == q(1));
            }
        }
    }
    SUBCASE("product with the sub-inverse is the support indicator") {
        const LinearRep orig = to_linear_rep(fixtures::u_mix());
        const LinearRep inv = to_linear_rep(hadamard_subinverse(fixtures::u_mix()));
        const LinearRep prod = hadamard_product(orig, inv);
        for (const Word& w : words_up_to(orig.alphabet(), 8)) {
            const Scalar expected =
                evaluate(orig, w).is_zero() ? q(0) : q(1);
            CHECK(evaluate(prod, w) == expected);
        }
    }
    SUBCASE("hadamard product basics") {
        const LinearRep r1 = fixtures::r1();
        const LinearRep sq = hadamard_product(r1, r1);
        for (std::size_t n = 0; n <= 6; ++n)
            CHECK(evaluate(sq, un(n)) == q(1LL << (2 * n)));
        const LinearRep zero(Alphabet("x"), kQ, 0);
        const LinearRep z = hadamard_product(r1, zero);
        for (std::size_t n = 0; n <= 4; ++n) CHECK(evaluate(z, un(n)).is_zero());
    }
    SUBCASE("ambiguous automata cannot be sub-inverted") {
        Wfa a(Alphabet("a"), kQ);
        a.add_state("p", q(1), q(1));
        a.add_state("r", q(1), q(1));
        CHECK_THROWS_AS(hadamard_subinverse(a), AmbiguousInput);
    }
}

TEST_CASE("expression from elimination matches the automaton after re-parsing") {
    const Wfa a = fixtures::u_mix();
    const ExprPtr e = state_elimination(a);
    const ExprPtr back = parse_expr_file(serialize_expr_file(*e));
    const LinearRep r = to_linear_rep(*back);
    for (const Word& w : words_up_to(a.alphabet(), 8))
        CHECK(evaluate(r, w) == evaluate(a, w));
}
