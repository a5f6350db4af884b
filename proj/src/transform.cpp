#include "ratser/transform.hpp"

#include "ratser/minimize.hpp"

namespace ratser {

std::size_t BlockStructure::block_of(std::size_t index) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (index >= blocks[i].begin && index < blocks[i].end) return i;
    throw DimensionMismatch("index outside every block");
}

std::string CoverViolation::to_string(const Alphabet& alphabet) const {
    std::string out = "cover-violation cond=" + std::to_string(condition) +
                      " block=" + std::to_string(block + 1);
    if (letter) {
        out += " letter=";
        out += alphabet.letter(*letter);
    }
    if (column) out += " column=" + std::to_string(*column + 1);
    return out;
}

ExpandResult expand_rep(const LinearRep& r, const HullResult& hull) {
    if (!verify_hull_certificate(r, hull))
        throw Error("invalid hull certificate");
    const Field& f = r.field();
    const std::size_t k = hull.hull.size();

    // Order components so that the one containing u comes first.
    const std::size_t u_comp = hull.hull.component_containing(r.u_row());
    if (u_comp == UnionOfSubspaces::npos) throw Error("u lies in no hull component");
    std::vector<std::size_t> order;
    order.push_back(u_comp);
    for (std::size_t i = 0; i < k; ++i)
        if (i != u_comp) order.push_back(i);
    std::vector<std::size_t> position(k);
    for (std::size_t i = 0; i < k; ++i) position[order[i]] = i;

    BlockStructure blocks;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const Subspace& comp = hull.hull.components()[order[i]];
        blocks.blocks.push_back({offset, offset + comp.dim(), comp.basis()});
        offset += comp.dim();
    }
    const std::size_t m = offset;

    LinearRep out(r.alphabet(), f, m);
    const RowVec u_coords = hull.hull.components()[u_comp].coordinates(r.u_row());
    for (std::size_t j = 0; j < u_coords.size(); ++j) out.u().at(0, j) = u_coords[j];

    for (std::size_t i = 0; i < k; ++i) {
        const auto& block = blocks.blocks[i];
        const Subspace& src = hull.hull.components()[order[i]];
        for (std::size_t s = 0; s < src.dim(); ++s) {
            const RowVec basis_row = src.basis().row(s);
            // v' is the block-wise application of v.
            out.v().at(block.begin + s, 0) = dot(basis_row, r.v_col());
            for (std::uint32_t x = 0; x < r.alphabet().size(); ++x) {
                const std::size_t tgt = position[hull.certificate.target[order[i]][x]];
                const auto& tgt_block = blocks.blocks[tgt];
                const Subspace& tgt_comp = hull.hull.components()[order[tgt]];
                const RowVec image = row_times_matrix(basis_row, r.mu(x));
                const RowVec coords = tgt_comp.coordinates(image);
                for (std::size_t t = 0; t < coords.size(); ++t)
                    out.mu(x).at(block.begin + s, tgt_block.begin + t) = coords[t];
            }
        }
    }
    return ExpandResult{std::move(out), std::move(blocks)};
}

std::optional<CoverViolation> check_cover_conditions(const LinearRep& r,
                                                     const BlockStructure& blocks) {
    if (blocks.total_dim() != r.dim())
        throw DimensionMismatch("blocks do not partition the coordinates");
    const std::size_t k = blocks.blocks.size();

    // (1) u supported in a single block.
    {
        std::size_t support_block = k;
        for (std::size_t j = 0; j < r.dim(); ++j) {
            if (r.u().at(0, j).is_zero()) continue;
            const std::size_t b = blocks.block_of(j);
            if (support_block == k) {
                support_block = b;
            } else if (b != support_block) {
                return CoverViolation{1, b, std::nullopt, std::nullopt};
            }
        }
    }
    // (2) each block's image under each letter meets a single block.
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint32_t x = 0; x < r.alphabet().size(); ++x) {
            std::size_t target = k;
            for (std::size_t row = blocks.blocks[i].begin; row < blocks.blocks[i].end; ++row)
                for (std::size_t col = 0; col < r.dim(); ++col) {
                    if (r.mu(x).at(row, col).is_zero()) continue;
                    const std::size_t b = blocks.block_of(col);
                    if (target == k) {
                        target = b;
                    } else if (b != target) {
                        return CoverViolation{2, i, x, std::nullopt};
                    }
                }
        }
    // (3) per block, letter, and column: at most one nonzero row in the block.
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint32_t x = 0; x < r.alphabet().size(); ++x)
            for (std::size_t col = 0; col < r.dim(); ++col) {
                std::size_t nonzero = 0;
                for (std::size_t row = blocks.blocks[i].begin; row < blocks.blocks[i].end;
                     ++row)
                    if (!r.mu(x).at(row, col).is_zero()) ++nonzero;
                if (nonzero > 1) return CoverViolation{3, i, x, col};
            }
    // (4) per block: at most one nonzero coordinate of v.
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t nonzero = 0;
        for (std::size_t row = blocks.blocks[i].begin; row < blocks.blocks[i].end; ++row)
            if (!r.v().at(row, 0).is_zero()) ++nonzero;
        if (nonzero > 1) return CoverViolation{4, i, std::nullopt, std::nullopt};
    }
    return std::nullopt;
}

Wfa determinize(const LinearRep& r, const TransformOptions& options) {
    const MinimizationResult minimal = minimize(r);
    if (minimal.rep.dim() == 0) return Wfa(r.alphabet(), r.field());
    HullResult hull = linear_hull(minimal.rep, HullOptions{options.budget});
    if (hull.hull.dim() >= 2) throw HullDimensionExceeded(std::move(hull.hull));
    const ExpandResult expanded = expand_rep(minimal.rep, hull);
    Wfa out = to_wfa(expanded.rep);
    if (!is_deterministic(out))
        throw Error("expanded automaton failed the determinism check");
    return out;
}

Wfa disambiguate(const LinearRep& r, const TransformOptions& options) {
    const MinimizationResult minimal = minimize(r);
    if (minimal.rep.dim() == 0) return Wfa(r.alphabet(), r.field());
    const LinearRep based = good_basis(minimal.rep);
    const HullResult hull = linear_hull(based, HullOptions{options.budget});
    const ExpandResult expanded = expand_rep(based, hull);
    if (auto violation = check_cover_conditions(expanded.rep, expanded.blocks))
        throw CoverConditionViolated(r.alphabet(), *violation);
    Wfa out = to_wfa(expanded.rep);
    if (auto witness = ambiguity_witness(out)) throw AmbiguousInput(r.alphabet(), *witness);
    return out;
}

} // namespace ratser
