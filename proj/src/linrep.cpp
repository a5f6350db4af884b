#include "ratser/linrep.hpp"

namespace ratser {

Matrix LinearRep::mu_word(const Word& w) const {
    Matrix m = Matrix::identity(field_, dim_);
    for (const auto letter : w.letters) m = m * mu_[letter];
    return m;
}

Scalar evaluate(const LinearRep& r, const Word& w) {
    for (const auto letter : w.letters)
        if (letter >= r.alphabet().size())
            throw DimensionMismatch("word letter outside the representation alphabet");
    if (r.dim() == 0) return Scalar::zero(r.field());
    RowVec row = r.u_row();
    for (const auto letter : w.letters) row = row_times_matrix(row, r.mu(letter));
    return dot(row, r.v_col());
}

LinearRep hadamard_product(const LinearRep& a, const LinearRep& b) {
    if (a.alphabet() != b.alphabet() || a.field() != b.field())
        throw DimensionMismatch("hadamard product of incompatible representations");
    LinearRep out(a.alphabet(), a.field(), a.dim() * b.dim());
    out.u() = a.u().kronecker(b.u());
    out.v() = a.v().kronecker(b.v());
    for (std::size_t x = 0; x < a.alphabet().size(); ++x)
        out.mu(x) = a.mu(x).kronecker(b.mu(x));
    return out;
}

} // namespace ratser
