#include "ratser/matrix.hpp"

namespace ratser {

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

RowVec Matrix::row(std::size_t r) const {
    RowVec v;
    v.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

void Matrix::set_row(std::size_t r, const RowVec& v) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix addition");
    Matrix m(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        m.entries_[i] = a.entries_[i] + b.entries_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                m.at(i, j) += aik * bkj;
            }
        }
    }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Matrix Matrix::kronecker(const Matrix& other) const {
    Matrix m(field_, rows_ * other.rows_, cols_ * other.cols_);
    for (std::size_t r1 = 0; r1 < rows_; ++r1)
        for (std::size_t c1 = 0; c1 < cols_; ++c1) {
            const Scalar& a = at(r1, c1);
            if (a.is_zero()) continue;
            for (std::size_t r2 = 0; r2 < other.rows_; ++r2)
                for (std::size_t c2 = 0; c2 < other.cols_; ++c2) {
                    const Scalar& b = other.at(r2, c2);
                    if (b.is_zero()) continue;
                    m.at(r1 * other.rows_ + r2, c1 * other.cols_ + c2) = a * b;
                }
        }
    return m;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, n + r) = Scalar::one(field_);
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && aug.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < 2 * n; ++c) std::swap(aug.at(pivot, c), aug.at(row, c));
        const Scalar inv = aug.at(row, col).inverse();
        for (std::size_t c = 0; c < 2 * n; ++c) aug.at(row, c) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || aug.at(r, col).is_zero()) continue;
            const Scalar factor = aug.at(r, col);
            for (std::size_t c = 0; c < 2 * n; ++c)
                aug.at(r, c) -= factor * aug.at(row, c);
        }
        ++row;
    }
    if (row != n) throw DimensionMismatch("singular matrix");
    Matrix inv(field_, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

RowVec row_times_matrix(const RowVec& v, const Matrix& m) {
    if (v.size() != m.rows()) throw DimensionMismatch("row-vector by matrix");
    RowVec out(m.cols(), Scalar::zero(m.field()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r].is_zero()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Scalar& e = m.at(r, c);
            if (!e.is_zero()) out[c] += v[r] * e;
        }
    }
    return out;
}

Scalar dot(const RowVec& a, const RowVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product");
    if (a.empty()) throw DimensionMismatch("dot product of empty vectors");
    Scalar s = Scalar::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const RowVec& v) {
    for (const Scalar& s : v)
        if (!s.is_zero()) return false;
    return true;
}

bool lex_less(const RowVec& a, const RowVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

RrefResult rref(const Matrix& m) {
    Matrix work = m;
    const std::size_t rows = work.rows();
    const std::size_t cols = work.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < cols; ++c) std::swap(work.at(pivot, c), work.at(row, c));
        const Scalar inv = work.at(row, col).inverse();
        for (std::size_t c = col; c < cols; ++c) work.at(row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || work.at(r, col).is_zero()) continue;
            const Scalar factor = work.at(r, col);
            for (std::size_t c = col; c < cols; ++c)
                work.at(r, c) -= factor * work.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    Matrix echelon(m.field(), pivots.size(), cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) echelon.at(r, c) = work.at(r, c);
    return RrefResult{std::move(echelon), std::move(pivots)};
}

} // namespace ratser
