#include "doctest.h"

#include <random>

#include "so3five/qsqrt3.hpp"

using namespace so3five;

namespace {

QSqrt3 rq(long na, long da, long nb, long db) {
    return QSqrt3(make_rational(na, da), make_rational(nb, db));
}

QSqrt3 random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 5);
    return rq(num(rng), den(rng), num(rng), den(rng));
}

} // namespace

TEST_CASE("rationals stay in canonical form") {
    const Rational r = make_rational(Int(4), Int(-6));
    CHECK(rat_num(r) == -2);
    CHECK(rat_den(r) == 3);
    const Rational z = make_rational(Int(0), Int(7));
    CHECK(rat_num(z) == 0);
    CHECK(rat_den(z) == 1);
    CHECK_THROWS_AS(make_rational(Int(1), Int(0)), DomainError);
}

TEST_CASE("componentwise equality and zero test") {
    CHECK(QSqrt3::zero().is_zero());
    CHECK_FALSE(rq(0, 1, 1, 3).is_zero());
    CHECK(rq(1, 2, -1, 3) == rq(1, 2, -1, 3));
    CHECK(rq(1, 2, 0, 1) != rq(1, 2, 1, 1));
}

TEST_CASE("inverse matches the conjugate-over-norm closed form") {
    // (1 + s3)^-1 = (1 - s3)/(1 - 3) = (-1 + s3)/2
    const QSqrt3 x(Rational(1), Rational(1));
    const QSqrt3 inv = x.inverse();
    CHECK(inv == rq(-1, 2, 1, 2));
    CHECK(x * inv == QSqrt3::one());
}

TEST_CASE("every nonzero element has an exact inverse") {
    std::mt19937_64 rng(11);
    int tested = 0;
    while (tested < 200) {
        const QSqrt3 x = random_scalar(rng);
        if (x.is_zero()) {
            continue;
        }
        CHECK(x * x.inverse() == QSqrt3::one());
        ++tested;
    }
    CHECK_THROWS_AS(QSqrt3::zero().inverse(), DomainError);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const QSqrt3 x = random_scalar(rng);
        const QSqrt3 y = random_scalar(rng);
        const QSqrt3 z = random_scalar(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("exact sign of a + b sqrt(3)") {
    CHECK(QSqrt3::zero().sign() == 0);
    CHECK(rq(5, 1, 0, 1).sign() == 1);
    CHECK(rq(-5, 1, 0, 1).sign() == -1);
    CHECK(rq(0, 1, 2, 1).sign() == 1);
    // 7 - 4 sqrt(3) = 7 - 6.92... > 0, but 2 - 4 sqrt(3) < 0
    CHECK(rq(7, 1, -4, 1).sign() == 1);
    CHECK(rq(2, 1, -4, 1).sign() == -1);
    CHECK(rq(-7, 1, 4, 1).sign() == -1);
    CHECK(rq(-2, 1, 4, 1).sign() == 1);
}

TEST_CASE("lexicographic positivity picks one of each +/- pair") {
    CHECK(rq(1, 1, -9, 1).lex_positive());
    CHECK_FALSE(rq(-1, 1, 9, 1).lex_positive());
    CHECK(rq(0, 1, 1, 2).lex_positive());
    CHECK_FALSE(rq(0, 1, -1, 2).lex_positive());
}

TEST_CASE("square roots inside the field") {
    const auto r1 = qsqrt3_sqrt(rq(9, 4, 0, 1));
    REQUIRE(r1.has_value());
    CHECK(*r1 == rq(3, 2, 0, 1));

    // 3/4 = (s3/2)^2: rational part square-free in Q but divisible by 3
    const auto r2 = qsqrt3_sqrt(rq(3, 4, 0, 1));
    REQUIRE(r2.has_value());
    CHECK(*r2 == rq(0, 1, 1, 2));

    // 7 + 4 s3 = (2 + s3)^2
    const auto r3 = qsqrt3_sqrt(rq(7, 1, 4, 1));
    REQUIRE(r3.has_value());
    CHECK(*r3 == rq(2, 1, 1, 1));

    CHECK_FALSE(qsqrt3_sqrt(rq(2, 1, 0, 1)).has_value());
    CHECK_FALSE(qsqrt3_sqrt(rq(-1, 1, 0, 1)).has_value());
    CHECK_FALSE(qsqrt3_sqrt(rq(1, 1, 1, 1)).has_value());

    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const QSqrt3 x = random_scalar(rng);
        const auto root = qsqrt3_sqrt(x * x);
        REQUIRE(root.has_value());
        CHECK(*root * *root == x * x);
    }
}

TEST_CASE("scalar text form") {
    CHECK(QSqrt3::zero().to_string() == "0");
    CHECK(rq(5, 1, 0, 1).to_string() == "5");
    CHECK(rq(-1, 2, 0, 1).to_string() == "-1/2");
    CHECK(rq(0, 1, 1, 1).to_string() == "s3");
    CHECK(rq(0, 1, -1, 1).to_string() == "-s3");
    CHECK(rq(0, 1, 1, 2).to_string() == "1/2*s3");
    CHECK(rq(1, 1, 1, 1).to_string() == "1+s3");
    CHECK(rq(1, 1, -2, 3).to_string() == "1-2/3*s3");
    CHECK(rq(-1, 1, 1, 1).to_string() == "-1+s3");
}
