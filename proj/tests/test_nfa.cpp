#include <doctest.h>

#include <random>
#include <ratser/nfa.hpp>

#include "fixtures.hpp"

using namespace ratser;

namespace {

Nfa language_of(const Alphabet& alphabet, const std::vector<std::string>& words) {
    Nfa out = Nfa::empty_language(alphabet);
    for (const auto& text : words)
        out = union_nfa(out, Nfa::single_word(alphabet, parse_word(alphabet, text)));
    return out;
}

// Brute-force double-factorization search over bounded-length words.
bool has_double_factorization(const Nfa& l, std::size_t maxlen) {
    const Alphabet& alphabet = l.alphabet();
    for (const Word& w : words_up_to(alphabet, maxlen)) {
        if (w.empty()) continue;
        // Count factorizations by dynamic programming over prefixes, but we
        // need distinct factorization *sequences*, so count paths.
        std::vector<std::size_t> ways(w.size() + 1, 0);
        ways[0] = 1;
        for (std::size_t end = 1; end <= w.size(); ++end)
            for (std::size_t begin = 0; begin < end; ++begin) {
                if (ways[begin] == 0) continue;
                Word factor{std::vector<std::uint32_t>(w.letters.begin() + begin,
                                                       w.letters.begin() + end)};
                if (!factor.empty() && l.accepts(factor)) ways[end] += ways[begin];
            }
        if (ways[w.size()] >= 2) return true;
    }
    return false;
}

} // namespace

TEST_CASE("nfa operations agree with word-level semantics") {
    const Alphabet ab("ab");
    const Nfa l1 = language_of(ab, {"a", "ab"});
    const Nfa l2 = language_of(ab, {"b", "ab"});

    SUBCASE("union") {
        const Nfa u = union_nfa(l1, l2);
        for (const Word& w : words_up_to(ab, 4))
            CHECK(u.accepts(w) == (l1.accepts(w) || l2.accepts(w)));
    }
    SUBCASE("intersection") {
        const Nfa m = intersect_nfa(l1, l2);
        for (const Word& w : words_up_to(ab, 4))
            CHECK(m.accepts(w) == (l1.accepts(w) && l2.accepts(w)));
        CHECK_FALSE(disjoint_languages(l1, l2)); // both contain ab
        CHECK(disjoint_languages(language_of(ab, {"a"}), language_of(ab, {"b"})));
    }
    SUBCASE("concatenation") {
        const Nfa c = concat_nfa(l1, l2);
        for (const Word& w : words_up_to(ab, 5)) {
            bool expect = false;
            for (std::size_t cut = 0; cut <= w.size(); ++cut) {
                Word left{std::vector<std::uint32_t>(w.letters.begin(),
                                                     w.letters.begin() + cut)};
                Word right{std::vector<std::uint32_t>(w.letters.begin() + cut,
                                                      w.letters.end())};
                if (l1.accepts(left) && l2.accepts(right)) expect = true;
            }
            CHECK(c.accepts(w) == expect);
        }
    }
    SUBCASE("star") {
        const Nfa s = star_nfa(language_of(ab, {"a", "bb"}));
        CHECK(s.accepts(parse_word(ab, "_")));
        CHECK(s.accepts(parse_word(ab, "a")));
        CHECK(s.accepts(parse_word(ab, "abba")));
        CHECK_FALSE(s.accepts(parse_word(ab, "b")));
        CHECK_FALSE(s.accepts(parse_word(ab, "bab")));
    }
    SUBCASE("determinization preserves the language") {
        const Nfa u = union_nfa(l1, concat_nfa(l2, l2));
        const Nfa d = u.determinize();
        for (const Word& w : words_up_to(ab, 6)) CHECK(u.accepts(w) == d.accepts(w));
        // Deterministic: single initial, one transition per letter.
        std::size_t initials = 0;
        for (std::size_t q = 0; q < d.state_count(); ++q)
            if (d.is_initial(q)) ++initials;
        CHECK(initials <= 1);
        for (std::size_t q = 0; q < d.state_count(); ++q)
            for (std::size_t i = 1; i < d.edges_from(q).size(); ++i)
                CHECK(d.edges_from(q)[i].first != d.edges_from(q)[i - 1].first);
    }
}

TEST_CASE("code check examples") {
    const Alphabet ab("ab");
    SUBCASE("prefix-suffix mix that is a code") {
        const auto check = code_check(language_of(ab, {"a", "ab", "bb"}));
        CHECK(check.is_code);
        CHECK_FALSE(has_double_factorization(language_of(ab, {"a", "ab", "bb"}), 6));
    }
    SUBCASE("classic non-code with witness aba") {
        const Nfa l = language_of(ab, {"a", "ab", "ba"});
        const auto check = code_check(l);
        CHECK_FALSE(check.is_code);
        REQUIRE(check.witness.has_value());
        CHECK(format_word(ab, *check.witness) == "aba");
    }
    SUBCASE("single letter") {
        const auto check = code_check(language_of(ab, {"a"}));
        CHECK(check.is_code);
    }
    SUBCASE("languages containing the empty word are rejected") {
        CHECK_THROWS_AS(code_check(language_of(ab, {"_", "a"})), EmptyWordInLanguage);
    }
    SUBCASE("infinite regular languages") {
        // a b* is a (suffix) code; words a b^k factor uniquely.
        const Nfa abstar = concat_nfa(language_of(ab, {"a"}),
                                      star_nfa(language_of(ab, {"b"})));
        CHECK(code_check(abstar).is_code);
        // (a + aa) is not a code: already aa = a.a = aa.
        const auto check = code_check(language_of(ab, {"a", "aa"}));
        CHECK_FALSE(check.is_code);
        REQUIRE(check.witness.has_value());
        CHECK(format_word(ab, *check.witness) == "aa");
    }
}

TEST_CASE("Sardinas-Patterson agrees with brute-force factorization search") {
    std::mt19937 gen(777);
    const Alphabet ab("ab");
    const std::vector<Word> pool = words_up_to(ab, 3);
    std::uniform_int_distribution<std::size_t> pick(1, pool.size() - 1); // skip epsilon
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<std::string> words;
        const int count = 1 + static_cast<int>(gen() % 4);
        for (int i = 0; i < count; ++i)
            words.push_back(format_word(ab, pool[pick(gen)]));
        const Nfa l = language_of(ab, words);
        const auto check = code_check(l);
        if (check.is_code) {
            CHECK_FALSE(has_double_factorization(l, 8));
        } else {
            // The witness itself must have two factorizations.
            REQUIRE(check.witness.has_value());
            const Word& w = *check.witness;
            std::vector<std::size_t> dp(w.size() + 1, 0);
            dp[0] = 1;
            for (std::size_t end = 1; end <= w.size(); ++end)
                for (std::size_t begin = 0; begin < end; ++begin) {
                    Word factor{std::vector<std::uint32_t>(w.letters.begin() + begin,
                                                           w.letters.begin() + end)};
                    if (!factor.empty() && l.accepts(factor)) dp[end] += dp[begin];
                }
            CHECK(dp[w.size()] >= 2);
        }
    }
}

TEST_CASE("support automaton of an unambiguous automaton is its support") {
    const Wfa a = fixtures::u_mix();
    const Nfa s = support_nfa(a);
    for (const Word& w : words_up_to(a.alphabet(), 10))
        CHECK(s.accepts(w) == !evaluate(a, w).is_zero());
}

TEST_CASE("factorization counts follow the dynamic programming recurrence") {
    const Alphabet ab("ab");
    const Nfa l = language_of(ab, {"a", "aa"});
    const LinearRep counts = factorization_count_rep(l);
    // Number of compositions of n into parts 1 and 2: Fibonacci.
    const long long expected[] = {1, 1, 2, 3, 5, 8, 13, 21};
    for (std::size_t n = 0; n < 8; ++n) {
        const Word w{std::vector<std::uint32_t>(n, 0)};
        CHECK(evaluate(counts, w) == fixtures::q(expected[n]));
    }
    // Mixed-letter language: counts match a word-level DP.
    const Nfa m = language_of(ab, {"a", "ab", "ba"});
    const LinearRep mcounts = factorization_count_rep(m);
    for (const Word& w : words_up_to(ab, 6)) {
        std::vector<long long> dp(w.size() + 1, 0);
        dp[0] = 1;
        for (std::size_t end = 1; end <= w.size(); ++end)
            for (std::size_t begin = 0; begin < end; ++begin) {
                Word factor{std::vector<std::uint32_t>(w.letters.begin() + begin,
                                                       w.letters.begin() + end)};
                if (m.accepts(factor)) dp[end] += dp[begin];
            }
        CHECK(evaluate(mcounts, w) == fixtures::q(dp[w.size()]));
    }
}
