#ifndef RATSER_SCALAR_HPP
#define RATSER_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "ratser/errors.hpp"

namespace ratser {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rational, Prime };

// Field descriptor: the rationals, or F_p for an explicitly given prime p.
class Field {
public:
    static Field rationals() { return Field(FieldKind::Rational, 0); }
    static Field prime(std::uint64_t p); // checks primality by trial division

    [[nodiscard]] FieldKind kind() const { return kind_; }
    [[nodiscard]] bool is_rational() const { return kind_ == FieldKind::Rational; }
    [[nodiscard]] std::uint64_t characteristic() const { return p_; }

    friend bool operator==(const Field& a, const Field& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    [[nodiscard]] std::string to_string() const; // "Q" or "F<p>"

private:
    Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint64_t p_;
};

// Exact field element: a reduced fraction over Q, or a residue in F_p.
// Immutable after construction; arithmetic never mixes fields.
class Scalar {
public:
    Scalar() : field_(Field::rationals()), rat_(0), res_(0) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long long n);
    static Scalar rational(BigInt num, BigInt den); // reduced, den >= 1
    static Scalar residue(const Field& f, std::uint64_t r);

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] bool is_negative() const; // over Q; false in F_p

    // Rational accessors (Q only).
    [[nodiscard]] BigInt numerator() const;
    [[nodiscard]] BigInt denominator() const;
    [[nodiscard]] const BigRat& rat() const;
    [[nodiscard]] std::uint64_t res() const { return res_; }

    Scalar operator-() const;
    [[nodiscard]] Scalar inverse() const; // throws DivideByZero on zero
    [[nodiscard]] Scalar pow(long long e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order within one field (numeric over Q, residue order in F_p).
    // Used for canonical sorting of bases and unions.
    friend bool operator<(const Scalar& a, const Scalar& b);

    [[nodiscard]] std::string to_string() const;

    // Text syntax: optional '-', decimal integer, optional '/' and positive
    // decimal integer. F_p scalars are bare residues in [0, p-1].
    static Scalar parse(const Field& f, const std::string& text);

private:
    explicit Scalar(const Field& f) : field_(f), rat_(0), res_(0) {}
    static void require_same(const Scalar& a, const Scalar& b);

    Field field_;
    BigRat rat_;        // value when rational
    std::uint64_t res_; // value when F_p
};

} // namespace ratser

#endif // RATSER_SCALAR_HPP
