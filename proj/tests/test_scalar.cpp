#include <doctest.h>

#include <random>
#include <ratser/scalar.hpp>

using namespace ratser;

TEST_CASE("rational scalars stay reduced with positive denominators") {
    const Scalar a = Scalar::rational(4, -6);
    CHECK(a.numerator() == -2);
    CHECK(a.denominator() == 3);
    CHECK(a.to_string() == "-2/3");
    CHECK(Scalar::rational(10, 5).to_string() == "2");
}

TEST_CASE("scalar text syntax round-trips") {
    const Field q = Field::rationals();
    CHECK(Scalar::parse(q, "-7/3").to_string() == "-7/3");
    CHECK(Scalar::parse(q, "5").to_string() == "5");
    CHECK(Scalar::parse(q, "0").is_zero());
    CHECK_THROWS_AS(Scalar::parse(q, "7/-3"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);

    const Field f5 = Field::prime(5);
    CHECK(Scalar::parse(f5, "7").res() == 2);
    CHECK_THROWS_AS(Scalar::parse(f5, "-1"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(f5, "1/2"), ParseError);
}

TEST_CASE("prime field construction checks primality") {
    CHECK_THROWS_AS(Field::prime(1), NotPrime);
    CHECK_THROWS_AS(Field::prime(4), NotPrime);
    CHECK_THROWS_AS(Field::prime(91), NotPrime); // 7 * 13
    CHECK(Field::prime(2).characteristic() == 2);
    CHECK(Field::prime(97).characteristic() == 97);
}

TEST_CASE("fields never mix") {
    const Scalar a = Scalar::from_int(Field::rationals(), 1);
    const Scalar b = Scalar::from_int(Field::prime(5), 1);
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS((void)(a == b), FieldMismatch);
}

namespace {

// Field axioms on randomized triples over Q and F_p.
template <typename Gen>
Scalar random_scalar(const Field& f, Gen& gen) {
    std::uniform_int_distribution<long long> num(-20, 20);
    if (f.is_rational()) {
        std::uniform_int_distribution<long long> den(1, 9);
        return Scalar::rational(num(gen), den(gen));
    }
    return Scalar::from_int(f, num(gen));
}

void check_axioms(const Field& f, unsigned seed) {
    std::mt19937 gen(seed);
    for (int iter = 0; iter < 200; ++iter) {
        const Scalar a = random_scalar(f, gen);
        const Scalar b = random_scalar(f, gen);
        const Scalar c = random_scalar(f, gen);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + Scalar::zero(f) == a);
        CHECK(a * Scalar::one(f) == a);
        CHECK(a - a == Scalar::zero(f));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar::one(f));
            CHECK(a / a == Scalar::one(f));
        }
    }
}

} // namespace

TEST_CASE("field axioms hold on random triples") {
    check_axioms(Field::rationals(), 12345);
    check_axioms(Field::prime(5), 777);
    check_axioms(Field::prime(2), 31);
}

TEST_CASE("powers including negative exponents") {
    const Scalar two = Scalar::from_int(Field::rationals(), 2);
    CHECK(two.pow(10).to_string() == "1024");
    CHECK(two.pow(-3).to_string() == "1/8");
    CHECK(two.pow(0).is_one());
    const Scalar three = Scalar::from_int(Field::prime(7), 3);
    CHECK(three.pow(6).res() == 1); // Fermat
}
