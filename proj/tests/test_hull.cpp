#include <doctest.h>

#include <functional>
#include <random>
#include <ratser/hull.hpp>
#include <ratser/minimize.hpp>

#include "fixtures.hpp"

using namespace ratser;
using fixtures::q;

namespace {

RowVec vec(const Field& f, std::vector<long long> entries) {
    RowVec v;
    for (const long long e : entries) v.push_back(Scalar::from_int(f, e));
    return v;
}

} // namespace

TEST_CASE("containment bound values") {
    CHECK(containment_bound(2, 1, 2, 1'000'000) == 3);
    CHECK(containment_bound(1, 3, 1, 1'000'000) == 2);
    CHECK(containment_bound(3, 2, 3, kUnlimitedBudget) == 82);
    CHECK_THROWS_AS(containment_bound(3, 2, 3, 1'000'000), BudgetExceeded);
    CHECK_THROWS_AS(containment_bound(10, 2, 6, 1'000'000), BudgetExceeded);
}

TEST_CASE("containment certification examples") {
    const Field f = Field::rationals();
    SUBCASE("swap orbit lies on the two axes") {
        const auto axes = UnionOfSubspaces::normalize(
            f, 2,
            {Subspace::span_of(f, 2, {vec(f, {1, 0})}),
             Subspace::span_of(f, 2, {vec(f, {0, 1})})});
        CHECK(certify_containment(fixtures::r2(), axes, 1'000'000));
    }
    SUBCASE("diagonal orbit escapes two fixed lines") {
        const auto lines = UnionOfSubspaces::normalize(
            f, 2,
            {Subspace::span_of(f, 2, {vec(f, {1, 1})}),
             Subspace::span_of(f, 2, {vec(f, {2, 3})})});
        CHECK_FALSE(certify_containment(fixtures::r4(), lines, 1'000'000));
    }
    SUBCASE("the full space always certifies") {
        const auto full =
            UnionOfSubspaces::normalize(f, 2, {Subspace::full(f, 2)});
        CHECK(certify_containment(fixtures::r4(), full, 1'000'000));
        CHECK(certify_containment(fixtures::r2(), full, 1'000'000));
    }
}

TEST_CASE("linear hull examples") {
    const Field f = Field::rationals();
    SUBCASE("doubling loop fills the line") {
        const auto h = linear_hull(fixtures::r1());
        CHECK(h.hull.dim() == 1);
        CHECK(h.hull.size() == 1);
        CHECK(verify_hull_certificate(fixtures::r1(), h));
    }
    SUBCASE("swap orbit closes into the two axes") {
        const auto h = linear_hull(fixtures::r2());
        CHECK(h.hull.dim() == 1);
        CHECK(h.hull.size() == 2);
        CHECK(h.hull.components()[0] == Subspace::span_of(f, 2, {vec(f, {0, 1})}));
        CHECK(h.hull.components()[1] == Subspace::span_of(f, 2, {vec(f, {1, 0})}));
        CHECK(verify_hull_certificate(fixtures::r2(), h));
    }
    SUBCASE("two distinct geometric rates fill the plane") {
        // Orbit directions (1, (3/2)^n) are pairwise distinct, so no finite
        // union of lines is invariant and contains the orbit.
        const OrbitSample sample = orbit_sample(fixtures::r4(), 5, 1000);
        for (std::size_t i = 0; i < sample.entries.size(); ++i)
            for (std::size_t j = i + 1; j < sample.entries.size(); ++j) {
                const auto& a = sample.entries[i].second;
                const auto& b = sample.entries[j].second;
                CHECK_FALSE(a[0] * b[1] == a[1] * b[0]); // non-proportional
            }
        const auto h = linear_hull(fixtures::r4());
        CHECK(h.hull.dim() == 2);
        CHECK(h.hull.size() == 1);
        CHECK(verify_hull_certificate(fixtures::r4(), h));
    }
    SUBCASE("interleaved rates close into two planes") {
        const LinearRep m = minimize(fixtures::s_mix()).rep;
        const auto h = linear_hull(m);
        CHECK(h.hull.dim() == 2);
        CHECK(h.hull.size() == 2);
        CHECK(verify_hull_certificate(m, h));
    }
    SUBCASE("zero representation yields the empty union") {
        const LinearRep zero(Alphabet("x"), f, 0);
        const auto h = linear_hull(zero);
        CHECK(h.hull.empty());
        CHECK(verify_hull_certificate(zero, h));
    }
}

TEST_CASE("hull certificates carry a valid target map") {
    for (const LinearRep& r : {fixtures::r1(), fixtures::r2(), fixtures::r4(),
                               minimize(fixtures::s_mix()).rep,
                               minimize(fixtures::fibonacci()).rep}) {
        const auto h = linear_hull(r);
        REQUIRE(h.certificate.target.size() == h.hull.size());
        for (std::size_t i = 0; i < h.hull.size(); ++i)
            for (std::uint32_t x = 0; x < r.alphabet().size(); ++x) {
                const Subspace image = h.hull.components()[i].image(r.mu(x));
                CHECK(h.hull.components()[h.certificate.target[i][x]].contains(image));
            }
        CHECK(h.hull.contains_vector(r.u_row()));
        CHECK(certify_containment(r, h.hull, 1'000'000));
    }
}

namespace {

// Exhaustive minimality oracle: every union of spans of orbit-direction
// subsets that is strictly below the hull in the search order fails to be
// invariant-and-containing.
bool exhaustive_minimality(const LinearRep& r, const UnionOfSubspaces& hull,
                           std::size_t depth) {
    const OrbitSample sample = orbit_sample(r, depth, 100000);
    std::vector<RowVec> dirs;
    for (const auto& [w, v] : sample.entries) {
        if (is_zero_vec(v)) continue;
        const Subspace line = Subspace::span_of(r.field(), r.dim(), {v});
        bool fresh = true;
        for (const RowVec& d : dirs)
            if (line.contains(d)) fresh = false;
        if (fresh) dirs.push_back(line.basis().row(0));
    }
    if (dirs.size() > 12) return true; // out of oracle range
    const std::size_t n = dirs.size();
    // Partition enumeration via restricted growth strings.
    std::vector<std::size_t> assign(n, 0);
    const std::function<bool(std::size_t, std::size_t)> recurse =
        [&](std::size_t i, std::size_t used) -> bool {
        if (i == n) {
            std::vector<std::vector<RowVec>> groups(used);
            for (std::size_t d = 0; d < n; ++d) groups[assign[d]].push_back(dirs[d]);
            std::vector<Subspace> comps;
            for (const auto& g : groups)
                comps.push_back(Subspace::span_of(r.field(), r.dim(), g));
            const auto y =
                UnionOfSubspaces::normalize(r.field(), r.dim(), std::move(comps));
            const bool below =
                y.dim() < hull.dim() ||
                (y.dim() == hull.dim() && y.size() < hull.size());
            if (!below) return true;
            // A strictly smaller candidate must fail validity.
            if (!y.contains_vector(r.u_row())) return true;
            for (std::size_t ci = 0; ci < y.size(); ++ci)
                for (std::uint32_t x = 0; x < r.alphabet().size(); ++x) {
                    const Subspace image = y.components()[ci].image(r.mu(x));
                    if (!y.contains(image)) return true;
                }
            return !certify_containment(r, y, 1'000'000);
        }
        for (std::size_t g = 0; g <= used && g < n; ++g) {
            assign[i] = g;
            if (!recurse(i + 1, std::max(used, g + 1))) return false;
        }
        return true;
    };
    return recurse(0, 0);
}

} // namespace

TEST_CASE("no strictly smaller valid union exists at desk scale") {
    for (const LinearRep& r :
         {fixtures::r1(), fixtures::r2(), fixtures::r4(),
          minimize(fixtures::fibonacci()).rep}) {
        const auto h = linear_hull(r);
        CHECK(exhaustive_minimality(r, h.hull, 4));
    }
}

TEST_CASE("hull components are spanned by their exclusive orbit vectors") {
    const LinearRep m = minimize(fixtures::s_mix()).rep;
    const auto h = linear_hull(m);
    const OrbitSample sample = orbit_sample(m, 8, 100000);
    for (std::size_t i = 0; i < h.hull.size(); ++i) {
        std::vector<RowVec> exclusive;
        for (const auto& [w, v] : sample.entries) {
            if (is_zero_vec(v) || !h.hull.components()[i].contains(v)) continue;
            bool shared = false;
            for (std::size_t j = 0; j < h.hull.size(); ++j)
                if (j != i && h.hull.components()[j].contains(v)) shared = true;
            if (!shared) exclusive.push_back(v);
        }
        CHECK(Subspace::span_of(m.field(), m.dim(), exclusive) ==
              h.hull.components()[i]);
    }
}

TEST_CASE("hulls over prime fields come from the finite reachable set") {
    const Field f5 = Field::prime(5);
    LinearRep r(Alphabet("x"), f5, 2);
    r.u().at(0, 0) = Scalar::from_int(f5, 1);
    r.v().at(0, 0) = Scalar::from_int(f5, 1);
    r.mu(0).at(0, 0) = Scalar::from_int(f5, 2);
    r.mu(0).at(1, 1) = Scalar::from_int(f5, 3);
    const auto h = linear_hull(r);
    CHECK(h.hull.dim() <= 1);
    CHECK(verify_hull_certificate(r, h));

    // The hull must equal the union of lines through the reachable vectors.
    const OrbitSample sample = orbit_sample(r, 100, 100000);
    CHECK(sample.saturated);
    for (const auto& [w, v] : sample.entries) CHECK(h.hull.contains_vector(v));
    for (std::size_t i = 0; i < h.hull.size(); ++i) {
        bool witnessed = false;
        for (const auto& [w, v] : sample.entries)
            if (!is_zero_vec(v) && h.hull.components()[i] ==
                                       Subspace::span_of(f5, 2, {v}))
                witnessed = true;
        CHECK(witnessed);
    }
}

TEST_CASE("series with finitely many coefficient values have flat hulls") {
    // Characteristic-series style representation over Q: coefficients in
    // {0, 1} via a permutation action.
    LinearRep r(Alphabet("ab"), Field::rationals(), 3);
    r.u().at(0, 0) = q(1);
    r.v().at(0, 0) = q(1);
    r.v().at(2, 0) = q(1);
    // a cycles the three coordinates, b swaps the first two.
    r.mu(0).at(0, 1) = q(1);
    r.mu(0).at(1, 2) = q(1);
    r.mu(0).at(2, 0) = q(1);
    r.mu(1).at(0, 1) = q(1);
    r.mu(1).at(1, 0) = q(1);
    r.mu(1).at(2, 2) = q(1);
    const auto minimal = minimize(r).rep;
    const auto h = linear_hull(minimal);
    CHECK(h.hull.dim() <= 1);
}

TEST_CASE("hull report format") {
    const auto h = linear_hull(fixtures::r2());
    const std::string report = hull_report(h.hull);
    CHECK(report == "hull dim 1 components 2\n"
                    "component dim 1 0 1\n"
                    "component dim 1 1 0\n");
}
