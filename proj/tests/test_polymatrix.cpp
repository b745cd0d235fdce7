#include "doctest.h"

#include <random>

#include "so3five/polymatrix.hpp"

using namespace so3five;

namespace {

PolyMatrix random_const_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    PolyMatrix m(n, n, const_env());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, j,
                  MultiPoly::constant(
                      const_env(),
                      QSqrt3(Rational(coeff(rng)), Rational(coeff(rng)))));
        }
    }
    return m;
}

} // namespace

TEST_CASE("identity determinant") {
    CHECK(PolyMatrix::identity(5, const_env()).det() ==
          MultiPoly::constant(const_env(), QSqrt3::one()));
}

TEST_CASE("diagonal determinant with conjugate surds") {
    const PolyMatrix m = PolyMatrix::from_scalars(2, 2,
        {QSqrt3(Rational(1), Rational(1)), QSqrt3(0L),
         QSqrt3(0L), QSqrt3(Rational(1), Rational(-1))});
    // (1 + s3)(1 - s3) = -2
    CHECK(m.det() == MultiPoly::constant(const_env(), QSqrt3(-2)));
}

TEST_CASE("determinant is multiplicative on constant matrices") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 8; ++rep) {
            const PolyMatrix a = random_const_matrix(rng, n);
            const PolyMatrix b = random_const_matrix(rng, n);
            CHECK((a * b).det() == a.det() * b.det());
        }
    }
}

TEST_CASE("commutator of a matrix with itself vanishes") {
    std::mt19937_64 rng(17);
    const PolyMatrix a = random_const_matrix(rng, 4);
    CHECK(commutator(a, a).is_zero());
}

TEST_CASE("shape errors") {
    const PolyMatrix a(2, 3, const_env());
    const PolyMatrix b(2, 3, const_env());
    CHECK_THROWS_AS(a * b, ShapeError);
    CHECK_THROWS_AS(a.det(), ShapeError);
    CHECK_THROWS_AS(a + PolyMatrix(3, 2, const_env()), ShapeError);
    CHECK_THROWS_AS(PolyMatrix(9, 9, const_env()).det(), ShapeError);
}

TEST_CASE("environment mismatch is an error") {
    const EnvPtr env = VarEnv::create({"x"});
    const PolyMatrix a(2, 2, const_env());
    const PolyMatrix b(2, 2, env);
    CHECK_THROWS_AS(a * b, EnvError);
}

TEST_CASE("symbolic determinant expands exactly") {
    const EnvPtr env = VarEnv::create({"x", "y"});
    PolyMatrix m(2, 2, env);
    m.set(0, 0, MultiPoly::variable(env, "x"));
    m.set(0, 1, MultiPoly::constant(env, 1L));
    m.set(1, 0, MultiPoly::constant(env, 1L));
    m.set(1, 1, MultiPoly::variable(env, "y"));
    CHECK(m.det() == MultiPoly::parse(env, "x*y - 1"));
}

TEST_CASE("trace and transpose") {
    std::mt19937_64 rng(29);
    const PolyMatrix a = random_const_matrix(rng, 3);
    const PolyMatrix b = random_const_matrix(rng, 3);
    CHECK((a * b).trace() == (b * a).trace());
    CHECK(a.transpose().transpose() == a);
}
