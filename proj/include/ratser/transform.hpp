#ifndef RATSER_TRANSFORM_HPP
#define RATSER_TRANSFORM_HPP

#include <optional>

#include "ratser/hull.hpp"
#include "ratser/wfa.hpp"

namespace ratser {

// Coordinate blocks of an expanded representation: block i occupies the
// index range [begin, end) and carries the chosen (echelon-compatible) basis
// of the hull component it came from.
struct BlockStructure {
    struct Block {
        std::size_t begin;
        std::size_t end;
        Matrix basis; // rows span the component, RREF
    };
    std::vector<Block> blocks;

    [[nodiscard]] std::size_t total_dim() const {
        return blocks.empty() ? 0 : blocks.back().end;
    }
    [[nodiscard]] std::size_t block_of(std::size_t index) const;
};

struct ExpandResult {
    LinearRep rep;
    BlockStructure blocks;
};

// Direct-sum expansion along the hull components: one coordinate block per
// component, mu' maps block i into block f(i,x), the component containing u
// comes first. Recognizes the same series.
ExpandResult expand_rep(const LinearRep& r, const HullResult& hull);

// First violated cover condition for the block family, or nullopt:
//   1: u supported in more than one block
//   2: some block's image under a letter meets two blocks
//   3: some block, letter, and column with two nonzero rows in the block
//   4: some block with two nonzero coordinates of v
struct CoverViolation {
    int condition;                       // 1..4
    std::size_t block;
    std::optional<std::uint32_t> letter; // conditions 2, 3
    std::optional<std::size_t> column;   // condition 3
    [[nodiscard]] std::string to_string(const Alphabet& alphabet) const;
};

std::optional<CoverViolation> check_cover_conditions(const LinearRep& r,
                                                     const BlockStructure& blocks);

class CoverConditionViolated : public Error {
public:
    CoverConditionViolated(const Alphabet& alphabet, const CoverViolation& violation)
        : Error(violation.to_string(alphabet)), violation_(violation) {}
    [[nodiscard]] const CoverViolation& violation() const { return violation_; }

private:
    CoverViolation violation_;
};

struct TransformOptions {
    std::uint64_t budget = 1'000'000;
};

// Deterministic automaton recognizing the same series; throws
// HullDimensionExceeded when the minimal representation's hull has
// dimension >= 2 (then no deterministic automaton exists).
Wfa determinize(const LinearRep& r, const TransformOptions& options = {});

// Unambiguous automaton recognizing the same series, built by the
// minimize -> good-basis -> hull -> expand -> cover-check pipeline; throws
// CoverConditionViolated with the violated condition when the construction
// fails (evidence of a non-Polya input).
Wfa disambiguate(const LinearRep& r, const TransformOptions& options = {});

} // namespace ratser

#endif // RATSER_TRANSFORM_HPP
