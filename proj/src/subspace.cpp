#include "ratser/subspace.hpp"

#include <algorithm>

namespace ratser {

Subspace Subspace::row_space(const Matrix& m) {
    RrefResult r = rref(m);
    return Subspace(m.cols(), std::move(r.echelon), std::move(r.pivots));
}

Subspace Subspace::span_of(const Field& f, std::size_t ambient,
                           const std::vector<RowVec>& vectors) {
    Matrix m(f, vectors.size(), ambient);
    for (std::size_t r = 0; r < vectors.size(); ++r) m.set_row(r, vectors[r]);
    return row_space(m);
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
    return row_space(Matrix::identity(f, ambient));
}

bool Subspace::contains(const RowVec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("subspace membership");
    // Reduce v against the RREF basis; contained iff the residue vanishes.
    RowVec residue = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        const Scalar coeff = residue[pivots_[r]]; // by value: the loop mutates it
        if (coeff.is_zero()) continue;
        for (std::size_t c = pivots_[r]; c < ambient_; ++c)
            residue[c] -= coeff * basis_.at(r, c);
    }
    return is_zero_vec(residue);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace containment");
    if (other.dim() > dim()) return false;
    for (std::size_t r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

RowVec Subspace::coordinates(const RowVec& v) const {
    RowVec coords;
    coords.reserve(dim());
    for (std::size_t r = 0; r < basis_.rows(); ++r) coords.push_back(v[pivots_[r]]);
    // Verify the reconstruction; pivot entries determine membership.
    RowVec rebuilt(ambient_, Scalar::zero(field()));
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c)
            rebuilt[c] += coords[r] * basis_.at(r, c);
    if (rebuilt != v) throw DimensionMismatch("vector not in subspace");
    return coords;
}

Subspace Subspace::image(const Matrix& m) const {
    if (ambient_ != m.rows()) throw DimensionMismatch("subspace image");
    return row_space(basis_ * m);
}

int Subspace::compare(const Subspace& other) const {
    if (dim() != other.dim()) return dim() < other.dim() ? -1 : 1;
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c) {
            const Scalar& a = basis_.at(r, c);
            const Scalar& b = other.basis_.at(r, c);
            if (a < b) return -1;
            if (b < a) return 1;
        }
    return 0;
}

UnionOfSubspaces UnionOfSubspaces::normalize(const Field& f, std::size_t ambient,
                                             std::vector<Subspace> components) {
    for (const Subspace& s : components)
        if (s.ambient() != ambient) throw DimensionMismatch("union components");
    // Drop components contained in another one (keeps the covered point set).
    std::vector<Subspace> kept;
    for (std::size_t i = 0; i < components.size(); ++i) {
        bool absorbed = false;
        for (std::size_t j = 0; j < components.size() && !absorbed; ++j) {
            if (i == j) continue;
            if (components[j].contains(components[i])) {
                // Break equality ties by index so exactly one copy survives.
                if (components[i] != components[j] || j < i) absorbed = true;
            }
        }
        if (!absorbed) kept.push_back(components[i]);
    }
    std::sort(kept.begin(), kept.end(), [](const Subspace& a, const Subspace& b) {
        if (a.dim() != b.dim()) return a.dim() > b.dim();
        return a.compare(b) < 0;
    });
    UnionOfSubspaces u(f, ambient);
    u.components_ = std::move(kept);
    return u;
}

int UnionOfSubspaces::dim() const {
    int d = -1;
    for (const Subspace& s : components_) d = std::max(d, static_cast<int>(s.dim()));
    return d;
}

bool UnionOfSubspaces::contains_vector(const RowVec& v) const {
    return component_containing(v) != npos;
}

bool UnionOfSubspaces::contains(const Subspace& s) const {
    return component_containing(s) != npos;
}

std::size_t UnionOfSubspaces::component_containing(const Subspace& s) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i].contains(s)) return i;
    return npos;
}

std::size_t UnionOfSubspaces::component_containing(const RowVec& v) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i].contains(v)) return i;
    return npos;
}

bool operator==(const UnionOfSubspaces& a, const UnionOfSubspaces& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ &&
           a.components_ == b.components_;
}

} // namespace ratser
