#ifndef RATSER_SUBSPACE_HPP
#define RATSER_SUBSPACE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ratser/matrix.hpp"

namespace ratser {

// Row-space subspace of K^{1xn} stored as a canonical RREF basis.
// Two Subspace values are equal as sets iff their storage is identical.
class Subspace {
public:
    Subspace(const Field& f, std::size_t ambient)
        : ambient_(ambient), basis_(f, 0, ambient), pivots_() {}

    static Subspace row_space(const Matrix& m);
    static Subspace span_of(const Field& f, std::size_t ambient,
                            const std::vector<RowVec>& vectors);
    static Subspace full(const Field& f, std::size_t ambient);

    [[nodiscard]] const Field& field() const { return basis_.field(); }
    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] const Matrix& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    [[nodiscard]] bool contains(const RowVec& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;

    // Coordinates of v in the stored basis; throws DimensionMismatch when v
    // is not in the subspace. For an RREF basis these are the pivot entries.
    [[nodiscard]] RowVec coordinates(const RowVec& v) const;

    // Canonical image { a * m : a in this } of the subspace.
    [[nodiscard]] Subspace image(const Matrix& m) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    // Canonical total order: dimension first, then row-major lexicographic
    // comparison of basis entries.
    [[nodiscard]] int compare(const Subspace& other) const;

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// Irredundant finite union of subspaces, components sorted by
// (dimension descending, lexicographic basis order). Equal unions have
// identical storage.
class UnionOfSubspaces {
public:
    UnionOfSubspaces(const Field& f, std::size_t ambient)
        : field_(f), ambient_(ambient) {}

    static UnionOfSubspaces normalize(const Field& f, std::size_t ambient,
                                      std::vector<Subspace> components);

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] const std::vector<Subspace>& components() const { return components_; }
    [[nodiscard]] std::size_t size() const { return components_.size(); }
    [[nodiscard]] bool empty() const { return components_.empty(); }

    // Max component dimension; -1 for the empty union.
    [[nodiscard]] int dim() const;

    // Point membership: v lies in some component.
    [[nodiscard]] bool contains_vector(const RowVec& v) const;

    // Subspace membership: s lies in a single component. Exact over an
    // infinite field; over F_p callers restrict to dim(s) <= 1.
    [[nodiscard]] bool contains(const Subspace& s) const;

    // Index of the first component containing s; npos when none.
    [[nodiscard]] std::size_t component_containing(const Subspace& s) const;
    [[nodiscard]] std::size_t component_containing(const RowVec& v) const;

    friend bool operator==(const UnionOfSubspaces& a, const UnionOfSubspaces& b);
    friend bool operator!=(const UnionOfSubspaces& a, const UnionOfSubspaces& b) {
        return !(a == b);
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    Field field_;
    std::size_t ambient_;
    std::vector<Subspace> components_;
};

} // namespace ratser

#endif // RATSER_SUBSPACE_HPP
