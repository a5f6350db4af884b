#include "ratser/hull.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace ratser {

namespace {

BigInt bigint_pow(const BigInt& base, std::uint64_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// First nonzero coordinate scaled to one; canonical representative of the
// line through v. Requires v != 0.
RowVec canonical_direction(const RowVec& v) {
    std::size_t pivot = 0;
    while (v[pivot].is_zero()) ++pivot;
    const Scalar inv = v[pivot].inverse();
    RowVec out = v;
    for (auto& s : out) s *= inv;
    return out;
}

struct VecLess {
    bool operator()(const RowVec& a, const RowVec& b) const { return lex_less(a, b); }
};

} // namespace

OrbitSample orbit_sample(const LinearRep& r, std::size_t depth,
                         std::uint64_t vector_budget) {
    OrbitSample sample;
    if (r.dim() == 0) {
        sample.saturated = true;
        return sample;
    }
    std::set<RowVec, VecLess> seen;
    std::vector<std::size_t> level;
    const RowVec u = r.u_row();
    seen.insert(u);
    sample.entries.emplace_back(Word{}, u);
    level.push_back(0);
    for (std::size_t d = 0; d < depth && !level.empty(); ++d) {
        std::vector<std::size_t> next;
        for (const std::size_t i : level) {
            for (std::uint32_t x = 0; x < r.alphabet().size(); ++x) {
                RowVec child = row_times_matrix(sample.entries[i].second, r.mu(x));
                if (seen.contains(child)) continue;
                if (sample.entries.size() >= vector_budget)
                    throw BudgetExceeded("orbit enumeration passed " +
                                         std::to_string(vector_budget) + " vectors");
                seen.insert(child);
                sample.entries.emplace_back(sample.entries[i].first.append(x),
                                            std::move(child));
                next.push_back(sample.entries.size() - 1);
            }
        }
        level = std::move(next);
    }
    sample.saturated = level.empty();
    return sample;
}

std::uint64_t containment_bound(std::uint64_t k, std::uint64_t alpha, std::uint64_t m,
                                std::uint64_t budget) {
    if (k < 1 || alpha < 1 || m < 1)
        throw DimensionMismatch("containment bound needs k, alpha, m >= 1");
    const BigInt n_big = bigint_pow(BigInt(k), alpha * (m - 1)) + 1;
    if (n_big > kUnlimitedBudget)
        throw BudgetExceeded("containment bound N = " + n_big.str());
    if (budget != kUnlimitedBudget) {
        if (alpha == 1) {
            if (n_big > budget)
                throw BudgetExceeded("containment bound N = " + n_big.str());
        } else if (n_big > 64) {
            // N * alpha^N certainly exceeds a 64-bit budget once N > 64.
            throw BudgetExceeded("containment bound N = " + n_big.str());
        } else {
            const auto n_small = static_cast<std::uint64_t>(n_big);
            const BigInt cost = n_big * bigint_pow(BigInt(alpha), n_small);
            if (cost > budget)
                throw BudgetExceeded("containment check needs " + cost.str() +
                                     " words");
        }
    }
    return static_cast<std::uint64_t>(n_big);
}

bool certify_containment(const LinearRep& r, const UnionOfSubspaces& y,
                         std::uint64_t budget) {
    if (r.dim() == 0) return true; // zero representation, empty-ambient orbit
    if (y.ambient() != r.dim()) throw DimensionMismatch("hull ambient dimension");
    if (y.empty()) return false;  // the orbit always contains u
    const int m = y.dim();
    if (m <= 0) return y.contains_vector(r.u_row()); // orbit of u = 0 stays {0}
    const std::uint64_t n = containment_bound(y.size(), r.alphabet().size(),
                                              static_cast<std::uint64_t>(m), budget);
    const std::uint64_t vector_budget =
        budget == kUnlimitedBudget ? kUnlimitedBudget : budget + 2;
    const OrbitSample sample = orbit_sample(r, n, vector_budget);
    for (const auto& [word, vec] : sample.entries)
        if (!y.contains_vector(vec)) return false;
    return true;
}

namespace {

// ---- candidate search over sampled orbit directions ----------------------

struct SearchContext {
    const LinearRep& rep;
    std::vector<RowVec> dirs;              // canonical line representatives
    std::map<RowVec, std::size_t, VecLess> dir_index;
    // image_of[d][x]: index of the sampled direction of dirs[d]*mu(x);
    // npos when the image is zero or leaves the sample.
    std::vector<std::vector<std::size_t>> image_of;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

SearchContext make_context(const LinearRep& r, const OrbitSample& sample) {
    SearchContext ctx{r, {}, {}, {}};
    for (const auto& [word, vec] : sample.entries) {
        if (is_zero_vec(vec)) continue;
        RowVec canon = canonical_direction(vec);
        if (ctx.dir_index.contains(canon)) continue;
        ctx.dir_index.emplace(canon, ctx.dirs.size());
        ctx.dirs.push_back(std::move(canon));
    }
    ctx.image_of.resize(ctx.dirs.size(),
                        std::vector<std::size_t>(r.alphabet().size(), SearchContext::npos));
    for (std::size_t d = 0; d < ctx.dirs.size(); ++d)
        for (std::uint32_t x = 0; x < r.alphabet().size(); ++x) {
            RowVec img = row_times_matrix(ctx.dirs[d], r.mu(x));
            if (is_zero_vec(img)) continue;
            const auto it = ctx.dir_index.find(canonical_direction(img));
            if (it != ctx.dir_index.end()) ctx.image_of[d][x] = it->second;
        }
    return ctx;
}

using Partition = std::vector<std::size_t>; // dir -> part id, ids normalized

Partition normalize_partition(const Partition& p) {
    Partition out(p.size(), SearchContext::npos);
    std::map<std::size_t, std::size_t> remap;
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto [it, fresh] = remap.emplace(p[i], remap.size());
        out[i] = it->second;
    }
    return out;
}

// Merge parts until, for every part and letter, the sampled images of the
// part lie within one part.
Partition congruence_closure(Partition p, const SearchContext& ctx) {
    if (p.empty()) return p;
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t parts = *std::max_element(p.begin(), p.end()) + 1;
        for (std::size_t part = 0; part < parts && !changed; ++part)
            for (std::uint32_t x = 0; x < ctx.rep.alphabet().size() && !changed; ++x) {
                std::size_t target = SearchContext::npos;
                for (std::size_t d = 0; d < p.size(); ++d) {
                    if (p[d] != part) continue;
                    const std::size_t img = ctx.image_of[d][x];
                    if (img == SearchContext::npos) continue;
                    if (target == SearchContext::npos) {
                        target = p[img];
                    } else if (p[img] != target) {
                        const std::size_t from = p[img];
                        for (auto& q : p)
                            if (q == from) q = target;
                        changed = true;
                        break;
                    }
                }
            }
    }
    return normalize_partition(p);
}

UnionOfSubspaces partition_to_union(const Partition& p, const SearchContext& ctx) {
    const std::size_t parts =
        p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
    std::vector<Subspace> comps;
    for (std::size_t part = 0; part < parts; ++part) {
        std::vector<RowVec> members;
        for (std::size_t d = 0; d < p.size(); ++d)
            if (p[d] == part) members.push_back(ctx.dirs[d]);
        comps.push_back(Subspace::span_of(ctx.rep.field(), ctx.rep.dim(), members));
    }
    return UnionOfSubspaces::normalize(ctx.rep.field(), ctx.rep.dim(), std::move(comps));
}

std::string union_key(const UnionOfSubspaces& y) {
    std::string key;
    for (const Subspace& s : y.components()) {
        key += std::to_string(s.dim()) + ":";
        for (std::size_t r = 0; r < s.basis().rows(); ++r)
            for (std::size_t c = 0; c < s.basis().cols(); ++c)
                key += s.basis().at(r, c).to_string() + ",";
        key += ";";
    }
    return key;
}

// Candidate unions generated from congruence-closed partitions of the
// sampled directions (finest closure first, then breadth-first coarsenings),
// plus the single-span candidate. For small direction counts, all set
// partitions are added as a completeness fallback.
std::vector<UnionOfSubspaces> candidate_unions(const SearchContext& ctx) {
    std::map<std::string, UnionOfSubspaces> found;
    const auto add = [&](const UnionOfSubspaces& y) { found.emplace(union_key(y), y); };

    const std::size_t nd = ctx.dirs.size();
    Partition singletons(nd);
    for (std::size_t i = 0; i < nd; ++i) singletons[i] = i;

    std::set<Partition> visited;
    std::vector<Partition> queue;
    const Partition finest = congruence_closure(singletons, ctx);
    visited.insert(finest);
    queue.push_back(finest);
    constexpr std::size_t kMaxVisited = 20000;
    for (std::size_t qi = 0; qi < queue.size() && visited.size() < kMaxVisited; ++qi) {
        const Partition p = queue[qi];
        add(partition_to_union(p, ctx));
        const std::size_t parts = *std::max_element(p.begin(), p.end()) + 1;
        for (std::size_t a = 0; a + 1 < parts; ++a)
            for (std::size_t b = a + 1; b < parts; ++b) {
                Partition merged = p;
                for (auto& q : merged)
                    if (q == b) q = a;
                merged = congruence_closure(std::move(merged), ctx);
                if (visited.insert(merged).second) queue.push_back(merged);
            }
    }

    add(partition_to_union(Partition(nd, 0), ctx)); // single span of everything

    if (nd >= 2 && nd <= 9) {
        // Exhaustive set partitions (restricted growth strings).
        Partition p(nd, 0);
        std::vector<std::size_t> maxid(nd, 0);
        std::size_t i = 1;
        while (true) {
            if (i == nd) {
                add(partition_to_union(p, ctx));
                // backtrack
                while (i > 1 && p[i - 1] == maxid[i - 1] + 1) --i;
                if (i == 1) break;
                --i;
                ++p[i];
                ++i;
                continue;
            }
            maxid[i] = std::max(maxid[i - 1], p[i - 1]);
            p[i] = 0;
            ++i;
        }
    }

    std::vector<UnionOfSubspaces> out;
    out.reserve(found.size());
    for (auto& [key, y] : found) out.push_back(std::move(y));
    std::sort(out.begin(), out.end(),
              [](const UnionOfSubspaces& a, const UnionOfSubspaces& b) {
                  if (a.dim() != b.dim()) return a.dim() < b.dim();
                  if (a.size() != b.size()) return a.size() < b.size();
                  return union_key(a) < union_key(b);
              });
    return out;
}

// Target map f with component_i * mu(x) inside component_{f(i,x)}; nullopt
// when some image escapes every single component.
std::optional<std::vector<std::vector<std::size_t>>> target_map(
    const LinearRep& r, const UnionOfSubspaces& y) {
    std::vector<std::vector<std::size_t>> f(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        f[i].resize(r.alphabet().size());
        for (std::uint32_t x = 0; x < r.alphabet().size(); ++x) {
            const Subspace image = y.components()[i].image(r.mu(x));
            const std::size_t j = y.component_containing(image);
            if (j == UnionOfSubspaces::npos) return std::nullopt;
            f[i][x] = j;
        }
    }
    return f;
}

// Union containment as point sets: every component of a inside some
// component of b.
bool union_subset(const UnionOfSubspaces& a, const UnionOfSubspaces& b) {
    for (const Subspace& s : a.components())
        if (!b.contains(s)) return false;
    return true;
}

// Each component must be spanned by the sampled directions lying in it and
// in no other component (density at the sampled depth).
bool exclusive_spans(const UnionOfSubspaces& y, const SearchContext& ctx) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        const Subspace& comp = y.components()[i];
        std::vector<RowVec> exclusive;
        for (const RowVec& d : ctx.dirs) {
            if (!comp.contains(d)) continue;
            bool shared = false;
            for (std::size_t j = 0; j < y.size() && !shared; ++j)
                if (j != i && y.components()[j].contains(d)) shared = true;
            if (!shared) exclusive.push_back(d);
        }
        if (Subspace::span_of(y.field(), y.ambient(), exclusive) != comp) return false;
    }
    return true;
}

HullResult hull_from_finite_orbit(const LinearRep& r, const OrbitSample& sample,
                                  std::uint64_t budget) {
    // The closure of a finite set of vectors is the union of the lines
    // through its nonzero points (or the zero space alone).
    std::vector<Subspace> comps;
    std::map<RowVec, bool, VecLess> dirs;
    for (const auto& [word, vec] : sample.entries) {
        if (is_zero_vec(vec)) continue;
        const RowVec canon = canonical_direction(vec);
        if (!dirs.emplace(canon, true).second) continue;
        comps.push_back(Subspace::span_of(r.field(), r.dim(), {canon}));
    }
    if (comps.empty())
        comps.push_back(Subspace(r.field(), r.dim())); // orbit is {0}
    UnionOfSubspaces hull =
        UnionOfSubspaces::normalize(r.field(), r.dim(), std::move(comps));
    auto f = target_map(r, hull);
    if (!f) throw Error("finite orbit closure is not invariant");
    std::uint64_t bound = 0;
    if (hull.dim() >= 1)
        bound = containment_bound(hull.size(), r.alphabet().size(),
                                  static_cast<std::uint64_t>(hull.dim()), budget);
    if (!certify_containment(r, hull, budget))
        throw Error("finite orbit closure failed certification");
    return HullResult{std::move(hull), HullCertificate{bound, std::move(*f)}};
}

} // namespace

HullResult linear_hull(const LinearRep& r, const HullOptions& options) {
    const std::size_t n = r.dim();
    if (n == 0)
        return HullResult{UnionOfSubspaces(r.field(), 0), HullCertificate{0, {}}};

    const std::size_t depth_step = std::max<std::size_t>(n, 1);
    for (std::size_t depth = depth_step;; depth += depth_step) {
        OrbitSample sample = orbit_sample(r, depth, options.budget);

        // A saturated orbit is finite; its closure is computed exactly.
        // Over F_p the orbit always saturates, so this is the only path
        // taken there.
        if (sample.saturated) return hull_from_finite_orbit(r, sample, options.budget);
        if (!r.field().is_rational())
            continue; // keep enumerating, the reachable set is finite

        const SearchContext ctx = make_context(r, sample);
        const std::vector<UnionOfSubspaces> candidates = candidate_unions(ctx);

        // Buckets in (max dimension, component count) order; within the
        // first bucket holding valid candidates, return the least one.
        std::size_t bucket_begin = 0;
        while (bucket_begin < candidates.size()) {
            const int dim = candidates[bucket_begin].dim();
            const std::size_t count = candidates[bucket_begin].size();
            std::size_t bucket_end = bucket_begin;
            while (bucket_end < candidates.size() &&
                   candidates[bucket_end].dim() == dim &&
                   candidates[bucket_end].size() == count)
                ++bucket_end;

            std::vector<std::pair<UnionOfSubspaces, HullCertificate>> valid;
            for (std::size_t i = bucket_begin; i < bucket_end; ++i) {
                const UnionOfSubspaces& y = candidates[i];
                if (!y.contains_vector(r.u_row())) continue;
                if (!exclusive_spans(y, ctx)) continue;
                auto f = target_map(r, y);
                if (!f) continue;
                std::uint64_t bound = 0;
                if (y.dim() >= 1)
                    bound = containment_bound(y.size(), r.alphabet().size(),
                                              static_cast<std::uint64_t>(y.dim()),
                                              options.budget);
                if (!certify_containment(r, y, options.budget)) continue;
                valid.emplace_back(y, HullCertificate{bound, std::move(*f)});
            }
            if (!valid.empty()) {
                std::size_t least = valid.size();
                for (std::size_t i = 0; i < valid.size(); ++i) {
                    bool below_all = true;
                    for (std::size_t j = 0; j < valid.size() && below_all; ++j)
                        if (i != j && !union_subset(valid[i].first, valid[j].first))
                            below_all = false;
                    if (below_all) {
                        least = i;
                        break;
                    }
                }
                if (least < valid.size())
                    return HullResult{std::move(valid[least].first),
                                      std::move(valid[least].second)};
                break; // incomparable ties: the sample is too shallow
            }
            bucket_begin = bucket_end;
        }

        if (depth > 64 * depth_step)
            throw BudgetExceeded("hull search exceeded the depth cap");
    }
}

bool verify_hull_certificate(const LinearRep& r, const HullResult& h,
                             std::uint64_t budget) {
    if (r.dim() == 0) return h.hull.empty();
    if (!h.hull.contains_vector(r.u_row())) return false;
    if (h.certificate.target.size() != h.hull.size()) return false;
    for (std::size_t i = 0; i < h.hull.size(); ++i) {
        if (h.certificate.target[i].size() != r.alphabet().size()) return false;
        for (std::uint32_t x = 0; x < r.alphabet().size(); ++x) {
            const std::size_t j = h.certificate.target[i][x];
            if (j >= h.hull.size()) return false;
            const Subspace image = h.hull.components()[i].image(r.mu(x));
            if (!h.hull.components()[j].contains(image)) return false;
        }
    }
    const std::uint64_t vector_budget =
        budget == kUnlimitedBudget ? kUnlimitedBudget : budget + 2;
    const OrbitSample sample = orbit_sample(r, h.certificate.bound, vector_budget);
    for (const auto& [word, vec] : sample.entries)
        if (!h.hull.contains_vector(vec)) return false;
    return true;
}

std::string hull_report(const UnionOfSubspaces& y) {
    std::string out = "hull dim " + std::to_string(y.dim()) + " components " +
                      std::to_string(y.size()) + "\n";
    for (const Subspace& s : y.components()) {
        out += "component dim " + std::to_string(s.dim());
        for (std::size_t r = 0; r < s.basis().rows(); ++r)
            for (std::size_t c = 0; c < s.basis().cols(); ++c)
                out += " " + s.basis().at(r, c).to_string();
        out += "\n";
    }
    return out;
}

} // namespace ratser
