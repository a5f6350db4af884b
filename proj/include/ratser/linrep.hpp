#ifndef RATSER_LINREP_HPP
#define RATSER_LINREP_HPP

#include <vector>

#include "ratser/matrix.hpp"
#include "ratser/words.hpp"

namespace ratser {

// Linear representation (u, mu, v): 1xn row, one nxn matrix per letter, nx1
// column. Dimension 0 denotes the zero series and is accepted everywhere.
class LinearRep {
public:
    LinearRep(Alphabet alphabet, const Field& f, std::size_t n)
        : alphabet_(std::move(alphabet)),
          field_(f),
          dim_(n),
          u_(f, 1, n),
          v_(f, n, 1),
          mu_(alphabet_.size(), Matrix(f, n, n)) {}

    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }

    [[nodiscard]] const Matrix& u() const { return u_; }
    [[nodiscard]] const Matrix& v() const { return v_; }
    [[nodiscard]] const Matrix& mu(std::size_t letter) const { return mu_[letter]; }

    Matrix& u() { return u_; }
    Matrix& v() { return v_; }
    Matrix& mu(std::size_t letter) { return mu_[letter]; }

    [[nodiscard]] RowVec u_row() const { return u_.row(0); }
    [[nodiscard]] RowVec v_col() const { return v_.transpose().row(0); }

    [[nodiscard]] Matrix mu_word(const Word& w) const;

private:
    Alphabet alphabet_;
    Field field_;
    std::size_t dim_;
    Matrix u_;
    Matrix v_;
    std::vector<Matrix> mu_;
};

// Coefficient of w: u * mu(w_1) ... mu(w_l) * v; 0 when the dimension is 0.
Scalar evaluate(const LinearRep& r, const Word& w);

// Pointwise product of the two recognized series (Kronecker construction).
LinearRep hadamard_product(const LinearRep& a, const LinearRep& b);

} // namespace ratser

#endif // RATSER_LINREP_HPP
