#ifndef RATSER_MATRIX_HPP
#define RATSER_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "ratser/scalar.hpp"

namespace ratser {

using RowVec = std::vector<Scalar>;

// Dense matrix with exact entries, all in one field.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const Field& f, std::size_t n);

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    [[nodiscard]] const Scalar& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    [[nodiscard]] RowVec row(std::size_t r) const;
    void set_row(std::size_t r, const RowVec& v);

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Matrix kronecker(const Matrix& other) const;

    // Inverse via Gauss-Jordan; throws DimensionMismatch on a singular or
    // non-square input.
    [[nodiscard]] Matrix inverse() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

// Row-vector helpers used by orbit enumeration and representation evaluation.
RowVec row_times_matrix(const RowVec& v, const Matrix& m);
Scalar dot(const RowVec& a, const RowVec& b);
bool is_zero_vec(const RowVec& v);
bool lex_less(const RowVec& a, const RowVec& b);

struct RrefResult {
    Matrix echelon;                 // nonzero rows only, canonical RREF
    std::vector<std::size_t> pivots; // pivot column per row
};

// Reduced row echelon form: pivots are 1, pivot columns otherwise zero,
// pivot columns strictly increasing, zero rows dropped.
RrefResult rref(const Matrix& m);

} // namespace ratser

#endif // RATSER_MATRIX_HPP
