#ifndef RATSER_RATEXPR_HPP
#define RATSER_RATEXPR_HPP

#include <map>
#include <memory>

#include "ratser/nfa.hpp"

namespace ratser {

class RatExpr;
using ExprPtr = std::shared_ptr<const RatExpr>;

enum class ExprKind { Poly, Sum, Prod, Star };

// Expression tree over noncommutative polynomials with sum, product, and
// star nodes. Operation nodes carry an `unambiguous` flag certified at
// construction time via regular-language decisions on the support automata:
// disjoint supports for sums, unique split points for products, the code
// property (Sardinas-Patterson) for stars. Nodes are immutable.
class RatExpr {
public:
    static ExprPtr poly(const Alphabet& alphabet, const Field& field,
                        std::map<Word, Scalar> coefficients);
    static ExprPtr sum(ExprPtr left, ExprPtr right);
    static ExprPtr prod(ExprPtr left, ExprPtr right);
    static ExprPtr star(ExprPtr child); // throws StarOnNonproper

    [[nodiscard]] ExprKind kind() const { return kind_; }
    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] const std::map<Word, Scalar>& coefficients() const { return poly_; }
    [[nodiscard]] const ExprPtr& left() const { return left_; }
    [[nodiscard]] const ExprPtr& right() const { return right_; }
    [[nodiscard]] const ExprPtr& child() const { return left_; }
    [[nodiscard]] bool unambiguous() const { return unambiguous_; }
    [[nodiscard]] const Nfa& support() const { return support_; }

    [[nodiscard]] Scalar constant_coefficient() const;
    [[nodiscard]] bool is_zero_poly() const {
        return kind_ == ExprKind::Poly && poly_.empty();
    }

    // True when every Sum/Prod/Star node in the tree is flagged unambiguous.
    [[nodiscard]] bool fully_unambiguous() const;

private:
    RatExpr(ExprKind kind, Alphabet alphabet, Field field, Nfa support)
        : kind_(kind),
          alphabet_(std::move(alphabet)),
          field_(field),
          support_(std::move(support)) {}

    ExprKind kind_;
    Alphabet alphabet_;
    Field field_;
    std::map<Word, Scalar> poly_; // Poly nodes; no zero values
    ExprPtr left_;
    ExprPtr right_;
    bool unambiguous_ = false;
    Nfa support_;
};

// Prefix text form: (poly (<word> <scalar>) ...), (+ e1 e2), (. e1 e2),
// (* e); "_" denotes the empty word.
std::string format_expr(const RatExpr& e);
ExprPtr parse_expr(const Alphabet& alphabet, const Field& field, const std::string& text);

// Expression file: "expr" header, field and alphabet lines, then the prefix
// expression (possibly spanning lines).
ExprPtr parse_expr_file(const std::string& text);
std::string serialize_expr_file(const RatExpr& e);

// Representation recognizing the denoted series (sum/product/star
// constructions on representations).
LinearRep to_linear_rep(const RatExpr& e);

// Representation combinators underlying to_linear_rep; also used to build
// the integer exponent series of extract_formula.
LinearRep poly_rep(const Alphabet& alphabet, const Field& f,
                   const std::map<Word, Scalar>& coefficients);
LinearRep sum_rep(const LinearRep& a, const LinearRep& b);
LinearRep prod_rep(const LinearRep& a, const LinearRep& b);
LinearRep star_rep(const LinearRep& a); // requires zero constant coefficient
LinearRep scale_rep(const Scalar& c, const LinearRep& a);

} // namespace ratser

#endif // RATSER_RATEXPR_HPP
