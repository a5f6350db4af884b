#include <doctest.h>

#include <random>
#include <ratser/hull.hpp>
#include <ratser/io.hpp>

#include "fixtures.hpp"

using namespace ratser;
using fixtures::q;
using fixtures::un;

namespace {

// Independent oracle: explicit sum over all state sequences.
Scalar path_sum(const Wfa& a, const Word& w) {
    Scalar total = Scalar::zero(a.field());
    std::vector<std::size_t> states(w.size() + 1, 0);
    const std::size_t n = a.state_count();
    if (n == 0) return total;
    for (;;) {
        Scalar term = a.initial(states[0]);
        for (std::size_t i = 0; i < w.size() && !term.is_zero(); ++i) {
            Scalar weight = Scalar::zero(a.field());
            for (const auto& e : a.edges_from(states[i]))
                if (e.letter == w.letters[i] && e.dst == states[i + 1]) weight = e.weight;
            term *= weight;
        }
        if (!term.is_zero()) total += term * a.terminal(states.back());
        std::size_t i = 0;
        while (i < states.size() && ++states[i] == n) states[i++] = 0;
        if (i == states.size()) break;
    }
    return total;
}

// Independent oracle: number of accepting paths labelled by w.
std::size_t accepting_path_count(const Wfa& a, const Word& w) {
    std::size_t count = 0;
    std::vector<std::size_t> states(w.size() + 1, 0);
    const std::size_t n = a.state_count();
    if (n == 0) return 0;
    for (;;) {
        bool ok = !a.initial(states[0]).is_zero() && !a.terminal(states.back()).is_zero();
        for (std::size_t i = 0; i < w.size() && ok; ++i) {
            bool has_edge = false;
            for (const auto& e : a.edges_from(states[i]))
                if (e.letter == w.letters[i] && e.dst == states[i + 1]) has_edge = true;
            ok = has_edge;
        }
        if (ok) ++count;
        std::size_t i = 0;
        while (i < states.size() && ++states[i] == n) states[i++] = 0;
        if (i == states.size()) break;
    }
    return count;
}

Wfa random_wfa(std::mt19937& gen, std::size_t max_states, std::size_t letters,
               const Field& f) {
    std::uniform_int_distribution<std::size_t> nstates(1, max_states);
    std::uniform_int_distribution<int> weight(0, 2);
    const std::size_t n = nstates(gen);
    Wfa a(Alphabet(std::string("ab").substr(0, letters)), f);
    for (std::size_t i = 0; i < n; ++i)
        a.add_state("s" + std::to_string(i), Scalar::from_int(f, weight(gen)),
                    Scalar::from_int(f, weight(gen)));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t x = 0; x < letters; ++x)
            for (std::size_t d = 0; d < n; ++d) {
                const int w = weight(gen);
                if (w != 0) a.add_edge(p, static_cast<std::uint32_t>(x), d,
                                       Scalar::from_int(f, w));
            }
    return a;
}

} // namespace

TEST_CASE("eval_rep examples") {
    CHECK(evaluate(fixtures::r1(), un(3)) == q(8));
    CHECK(evaluate(fixtures::r2(), un(1)) == q(3));
    CHECK(evaluate(fixtures::r2(), un(2)) == q(2));
    CHECK(evaluate(fixtures::r2(), Word{}) == q(2)); // u v
    const LinearRep zero(Alphabet("x"), Field::rationals(), 0);
    CHECK(evaluate(zero, un(4)).is_zero());
}

TEST_CASE("conversion examples") {
    SUBCASE("one-state loop") {
        const Wfa a = to_wfa(fixtures::r1());
        CHECK(a.state_count() == 1);
        CHECK(a.initial(0).is_one());
        CHECK(a.terminal(0).is_one());
        CHECK(a.edges_from(0).size() == 1);
        CHECK(a.edges_from(0)[0].weight == q(2));
    }
    SUBCASE("swap representation: I(k) = u_k, T(k) = v_k, E = mu entries") {
        const Wfa a = to_wfa(fixtures::r2());
        CHECK(a.state_count() == 2);
        CHECK(a.initial(0) == q(1));
        CHECK(a.initial(1) == q(0));
        CHECK(a.terminal(0) == q(2));
        CHECK(a.terminal(1) == q(3));
        CHECK(evaluate(a, un(2)) == q(2));
    }
}

TEST_CASE("round-trip preserves coefficients on random automata") {
    std::mt19937 gen(4242);
    for (int iter = 0; iter < 20; ++iter) {
        const Wfa a = random_wfa(gen, 4, 2, Field::rationals());
        const Wfa back = to_wfa(to_linear_rep(a));
        for (const Word& w : words_up_to(a.alphabet(), 5))
            CHECK(evaluate(a, w) == evaluate(back, w));
    }
}

TEST_CASE("eval_wfa matches the path-sum oracle") {
    std::mt19937 gen(31337);
    for (int iter = 0; iter < 15; ++iter) {
        const Wfa a = random_wfa(gen, 3, 2, Field::rationals());
        for (const Word& w : words_up_to(a.alphabet(), 4))
            CHECK(evaluate(a, w) == path_sum(a, w));
    }
    SUBCASE("no initial state means the zero series") {
        Wfa a(Alphabet("x"), Field::rationals());
        a.add_state("s", q(0), q(1));
        a.add_edge(0, 0, 0, q(2));
        for (std::size_t n = 0; n <= 5; ++n) CHECK(evaluate(a, un(n)).is_zero());
    }
    SUBCASE("one-state loop powers") {
        const Wfa a = to_wfa(fixtures::r1());
        for (std::size_t n = 0; n <= 10; ++n)
            CHECK(evaluate(a, un(n)) == q(1LL << n));
    }
}

TEST_CASE("eval_rep equals eval_wfa through conversion on random reps") {
    std::mt19937 gen(5150);
    std::uniform_int_distribution<long long> entry(-2, 2);
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    for (int iter = 0; iter < 10; ++iter) {
        const std::size_t n = dims(gen);
        LinearRep r(Alphabet("ab"), Field::rationals(), n);
        for (std::size_t i = 0; i < n; ++i) {
            r.u().at(0, i) = q(entry(gen));
            r.v().at(i, 0) = q(entry(gen));
            for (std::size_t x = 0; x < 2; ++x)
                for (std::size_t j = 0; j < n; ++j) r.mu(x).at(i, j) = q(entry(gen));
        }
        const Wfa a = to_wfa(r);
        for (const Word& w : words_up_to(r.alphabet(), 8))
            CHECK(evaluate(r, w) == evaluate(a, w));
    }
}

TEST_CASE("coefficients factor through any split point") {
    const LinearRep r = fixtures::s_mix();
    std::mt19937 gen(8);
    for (const Word& w : words_up_to(r.alphabet(), 8)) {
        for (std::size_t cut = 0; cut <= w.size(); ++cut) {
            Word left{std::vector<std::uint32_t>(w.letters.begin(),
                                                 w.letters.begin() + cut)};
            Word right{std::vector<std::uint32_t>(w.letters.begin() + cut,
                                                  w.letters.end())};
            const Matrix prefix = r.u() * r.mu_word(left);
            const Matrix suffix = r.mu_word(right) * r.v();
            CHECK((prefix * suffix).at(0, 0) == evaluate(r, w));
        }
    }
}

TEST_CASE("trim removes states off accepting paths and preserves the series") {
    Wfa a(Alphabet("x"), Field::rationals());
    a.add_state("live", q(1), q(1));
    a.add_state("unreachable", q(0), q(1));
    a.add_state("dead-end", q(0), q(0));
    a.add_edge(0, 0, 0, q(2));
    a.add_edge(1, 0, 0, q(1));
    a.add_edge(0, 0, 2, q(5));
    const Wfa t = trim(a);
    CHECK(t.state_count() == 1);
    CHECK(t.state_name(0) == "live");

    const Wfa again = trim(t);
    CHECK(again.state_count() == t.state_count());
    CHECK(serialize(again) == serialize(t));

    std::mt19937 gen(64);
    for (int iter = 0; iter < 10; ++iter) {
        const Wfa b = random_wfa(gen, 5, 2, Field::rationals());
        const Wfa tb = trim(b);
        for (const Word& w : words_up_to(b.alphabet(), 6))
            CHECK(evaluate(b, w) == evaluate(tb, w));
    }
}

TEST_CASE("determinism check") {
    CHECK(is_deterministic(to_wfa(fixtures::r1())));
    CHECK(is_deterministic(to_wfa(fixtures::r2()))); // swap rows have one entry
    Wfa two_initial(Alphabet("x"), Field::rationals());
    two_initial.add_state("p", q(1), q(1));
    two_initial.add_state("q", q(1), q(0));
    CHECK_FALSE(is_deterministic(two_initial));
    CHECK_FALSE(is_deterministic(fixtures::u_mix())); // two initial states
}

TEST_CASE("ambiguity witness examples") {
    SUBCASE("deterministic automata are unambiguous") {
        CHECK(is_unambiguous(to_wfa(fixtures::r2())));
    }
    SUBCASE("two parallel one-letter paths") {
        Wfa a(Alphabet("ab"), Field::rationals());
        a.add_state("p", q(1), q(0));
        a.add_state("q", q(1), q(0));
        a.add_state("t", q(0), q(1));
        a.add_edge(0, 0, 2, q(1));
        a.add_edge(1, 0, 2, q(1));
        const auto w = ambiguity_witness(a);
        REQUIRE(w.has_value());
        CHECK(format_word(a.alphabet(), *w) == "a");
    }
    SUBCASE("the interleaved union automaton is unambiguous") {
        CHECK(is_unambiguous(fixtures::u_mix()));
    }
    SUBCASE("two initial-terminal states witness the empty word") {
        Wfa a(Alphabet("x"), Field::rationals());
        a.add_state("p", q(1), q(1));
        a.add_state("q", q(1), q(1));
        const auto w = ambiguity_witness(a);
        REQUIRE(w.has_value());
        CHECK(w->empty());
    }
}

TEST_CASE("ambiguity agrees with brute-force path counting") {
    std::mt19937 gen(161803);
    const std::vector<Word> words = words_up_to(Alphabet("ab"), 6);
    for (int iter = 0; iter < 120; ++iter) {
        const Wfa a = random_wfa(gen, 3, 2, Field::rationals());
        bool brute_ambiguous = false;
        for (const Word& w : words)
            if (accepting_path_count(a, w) >= 2) brute_ambiguous = true;
        const auto witness = ambiguity_witness(a);
        if (witness) {
            CHECK(accepting_path_count(a, *witness) >= 2);
        } else {
            CHECK_FALSE(brute_ambiguous);
        }
    }
}

TEST_CASE("wfa and rep text formats round-trip") {
    const std::string text = "# demo\nwfa\nfield Q\nalphabet a b\n"
                             "state p initial 1 terminal 2/3\nstate r\n"
                             "edge p a r 5\nedge r b p -1/2\n";
    const Wfa a = parse_wfa(text);
    CHECK(a.state_count() == 2);
    CHECK(parse_wfa(serialize(a)).state_count() == 2);
    CHECK(serialize(parse_wfa(serialize(a))) == serialize(a));

    const LinearRep r = fixtures::s_mix();
    CHECK(serialize(parse_linear_rep(serialize(r))) == serialize(r));

    CHECK_THROWS_AS(parse_wfa("wfa\nfield Q\nalphabet a\nstate p\nstate p\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_wfa("wfa\nfield Q\nalphabet a\nstate p\nedge p a p 0\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_wfa("wfa\nfield Q\nalphabet a\nstate p\nedge p c p 1\n"),
                    ParseError);
}

TEST_CASE("witness ties break towards earlier letters") {
    // Ambiguity reachable through both letters at the same length.
    Wfa a(Alphabet("ab"), Field::rationals());
    a.add_state("p", q(1), q(0));
    a.add_state("r", q(1), q(0));
    a.add_state("t", q(0), q(1));
    a.add_edge(0, 1, 2, q(1)); // b-route from p
    a.add_edge(1, 1, 2, q(1)); // b-route from r
    a.add_edge(0, 0, 2, q(1)); // a-route from p
    a.add_edge(1, 0, 2, q(1)); // a-route from r
    const auto w = ambiguity_witness(a);
    REQUIRE(w.has_value());
    CHECK(format_word(a.alphabet(), *w) == "a");
}

TEST_CASE("orbit samples are deduplicated breadth-first orbits") {
    const OrbitSample sample = orbit_sample(fixtures::s_mix(), 5, 1000);
    REQUIRE(!sample.entries.empty());
    CHECK(sample.entries.front().first.empty());
    for (std::size_t i = 0; i < sample.entries.size(); ++i) {
        const auto& [word, vec] = sample.entries[i];
        // Vector matches u mu(w).
        const Matrix row = fixtures::s_mix().u() * fixtures::s_mix().mu_word(word);
        for (std::size_t c = 0; c < vec.size(); ++c) CHECK(row.at(0, c) == vec[c]);
        // Breadth-first word order and pairwise distinct vectors.
        if (i > 0) CHECK(sample.entries[i - 1].first.size() <= word.size());
        for (std::size_t j = i + 1; j < sample.entries.size(); ++j)
            CHECK(sample.entries[j].second != vec);
    }
}

TEST_CASE("ambiguity matches path counting exhaustively at the smallest scale") {
    // Every 2-state automaton over one letter with 0/1 weights.
    const Alphabet x("x");
    const Field f = Field::rationals();
    const std::vector<Word> words = words_up_to(x, 6);
    for (int mask = 0; mask < (1 << 8); ++mask) {
        Wfa a(x, f);
        a.add_state("p", q((mask >> 0) & 1), q((mask >> 1) & 1));
        a.add_state("r", q((mask >> 2) & 1), q((mask >> 3) & 1));
        if ((mask >> 4) & 1) a.add_edge(0, 0, 0, q(1));
        if ((mask >> 5) & 1) a.add_edge(0, 0, 1, q(1));
        if ((mask >> 6) & 1) a.add_edge(1, 0, 0, q(1));
        if ((mask >> 7) & 1) a.add_edge(1, 0, 1, q(1));
        bool brute = false;
        for (const Word& w : words)
            if (accepting_path_count(a, w) >= 2) brute = true;
        const auto witness = ambiguity_witness(a);
        if (brute) {
            REQUIRE(witness.has_value());
            CHECK(accepting_path_count(a, *witness) >= 2);
        } else {
            // Length 6 is decisive here: the 4-node self-product pumps any
            // longer witness down below it.
            CHECK_FALSE(witness.has_value());
        }
    }
}
