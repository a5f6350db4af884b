#include "ratser/scalar.hpp"

#include <cctype>

namespace ratser {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d <= p / d; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrime(p);
    return Field(FieldKind::Prime, p);
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::one(const Field& f) {
    Scalar s(f);
    if (f.is_rational()) {
        s.rat_ = 1;
    } else {
        s.res_ = 1 % f.characteristic();
    }
    return s;
}

Scalar Scalar::from_int(const Field& f, long long n) {
    Scalar s(f);
    if (f.is_rational()) {
        s.rat_ = n;
    } else {
        const auto p = static_cast<long long>(f.characteristic());
        long long r = n % p;
        if (r < 0) r += p;
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::rational(BigInt num, BigInt den) {
    if (den == 0) throw DivideByZero();
    Scalar s(Field::rationals());
    s.rat_ = BigRat(std::move(num)) / BigRat(std::move(den)); // reduced, den > 0
    return s;
}

Scalar Scalar::residue(const Field& f, std::uint64_t r) {
    if (f.is_rational()) throw FieldMismatch();
    Scalar s(f);
    s.res_ = r % f.characteristic();
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1 % field_.characteristic();
}

bool Scalar::is_negative() const {
    return field_.is_rational() && rat_ < 0;
}

BigInt Scalar::numerator() const {
    if (!field_.is_rational()) throw FieldMismatch();
    return boost::multiprecision::numerator(rat_);
}

BigInt Scalar::denominator() const {
    if (!field_.is_rational()) throw FieldMismatch();
    return boost::multiprecision::denominator(rat_);
}

const BigRat& Scalar::rat() const {
    if (!field_.is_rational()) throw FieldMismatch();
    return rat_;
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) throw FieldMismatch();
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = -rat_;
    } else {
        s.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivideByZero();
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = 1 / rat_;
    } else {
        const auto p = field_.characteristic();
        s.res_ = mod_pow(res_, p - 2, p);
    }
    return s;
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = Scalar::one(field_);
    Scalar base = *this;
    auto n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same(a, b);
    Scalar s(a.field_);
    if (a.field_.is_rational()) {
        s.rat_ = a.rat_ + b.rat_;
    } else {
        const auto p = a.field_.characteristic();
        s.res_ = (a.res_ + b.res_) % p;
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same(a, b);
    Scalar s(a.field_);
    if (a.field_.is_rational()) {
        s.rat_ = a.rat_ * b.rat_;
    } else {
        s.res_ = mod_mul(a.res_, b.res_, a.field_.characteristic());
    }
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar::require_same(a, b);
    return a.field_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

bool operator<(const Scalar& a, const Scalar& b) {
    Scalar::require_same(a, b);
    return a.field_.is_rational() ? a.rat_ < b.rat_ : a.res_ < b.res_;
}

std::string Scalar::to_string() const {
    if (!field_.is_rational()) return std::to_string(res_);
    const BigInt num = boost::multiprecision::numerator(rat_);
    const BigInt den = boost::multiprecision::denominator(rat_);
    std::string out = num.str();
    if (den != 1) out += "/" + den.str();
    return out;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-') {
        neg = true;
        ++i;
    }
    const std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw ParseError("bad scalar '" + text + "'");
    const std::string num_digits = text.substr(num_begin, i - num_begin);

    std::string den_digits;
    if (i < text.size() && text[i] == '/') {
        ++i;
        const std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin) throw ParseError("bad scalar '" + text + "'");
        den_digits = text.substr(den_begin, i - den_begin);
    }
    if (i != text.size()) throw ParseError("bad scalar '" + text + "'");

    if (!f.is_rational()) {
        if (neg || !den_digits.empty())
            throw ParseError("F_p scalars are bare residues, got '" + text + "'");
        BigInt r(num_digits);
        const BigInt p(f.characteristic());
        return Scalar::residue(f, static_cast<std::uint64_t>(r % p));
    }

    BigInt num(num_digits);
    if (neg) num = -num;
    BigInt den = den_digits.empty() ? BigInt(1) : BigInt(den_digits);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Scalar::rational(std::move(num), std::move(den));
}

} // namespace ratser
