#ifndef RATSER_HULL_HPP
#define RATSER_HULL_HPP

#include <cstdint>
#include <utility>

#include "ratser/linrep.hpp"
#include "ratser/subspace.hpp"

namespace ratser {

// Orbit vectors u*mu(w) for all words up to a length bound, deduplicated by
// vector equality, in breadth-first word order.
struct OrbitSample {
    std::vector<std::pair<Word, RowVec>> entries;
    bool saturated = false; // no new vectors appear beyond the sampled depth
};

OrbitSample orbit_sample(const LinearRep& r, std::size_t depth,
                         std::uint64_t vector_budget);

// Certificate data for a computed hull: the word-length bound used for the
// certified containment check and the per-component, per-letter target map
// f with component_i * mu(x) contained in component_{f(i,x)}.
struct HullCertificate {
    std::uint64_t bound = 0;
    std::vector<std::vector<std::size_t>> target;
};

struct HullResult {
    UnionOfSubspaces hull;
    HullCertificate certificate;
};

struct HullOptions {
    std::uint64_t budget = 1'000'000; // enumeration budget in vectors
};

// Disables the budget check (the bound must still fit a 64-bit count).
inline constexpr std::uint64_t kUnlimitedBudget = ~std::uint64_t{0};

// N = k^(alpha*(m-1)) + 1, exact in big integers. Throws BudgetExceeded when
// N * alpha^N exceeds the budget.
std::uint64_t containment_bound(std::uint64_t k, std::uint64_t alpha, std::uint64_t m,
                                std::uint64_t budget);

// True iff every orbit vector of word length <= N lies in y, where N is the
// bound for y's component count and dimension; a true answer certifies that
// the whole orbit lies in y.
bool certify_containment(const LinearRep& r, const UnionOfSubspaces& y,
                         std::uint64_t budget);

// Least union of subspaces containing u and invariant under every mu(x);
// equals the closure of the orbit in the union-of-subspaces topology.
HullResult linear_hull(const LinearRep& r, const HullOptions& options = {});

// Re-checks a certificate: u lies in the hull, the target map is valid, and
// the orbit up to the stored bound stays inside the hull.
bool verify_hull_certificate(const LinearRep& r, const HullResult& h,
                             std::uint64_t budget = HullOptions{}.budget);

// Text report: "hull dim <d> components <k>" plus one component line per
// subspace with its RREF basis rows.
std::string hull_report(const UnionOfSubspaces& y);

// Structured failure evidence for non-determinizable inputs.
class HullDimensionExceeded : public Error {
public:
    explicit HullDimensionExceeded(UnionOfSubspaces hull)
        : Error("linear hull has dimension " + std::to_string(hull.dim())),
          hull_(std::move(hull)) {}
    [[nodiscard]] const UnionOfSubspaces& hull() const { return hull_; }

private:
    UnionOfSubspaces hull_;
};

} // namespace ratser

#endif // RATSER_HULL_HPP
