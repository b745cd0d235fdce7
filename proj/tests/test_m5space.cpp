#include "doctest.h"

#include <random>

#include "so3five/m5space.hpp"

using namespace so3five;

namespace {

const M5Basis& basis() {
    static const M5Basis b = derive_m5_basis();
    return b;
}

std::array<MultiPoly, 5> const_vector(const std::array<long, 5>& v) {
    std::array<MultiPoly, 5> out = {
        MultiPoly::constant(const_env(), v[0]), MultiPoly::constant(const_env(), v[1]),
        MultiPoly::constant(const_env(), v[2]), MultiPoly::constant(const_env(), v[3]),
        MultiPoly::constant(const_env(), v[4])};
    return out;
}

} // namespace

TEST_CASE("basis elements are symmetric and trace-free") {
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK_NOTHROW(SymTraceless3(basis().element(i)));
    }
}

TEST_CASE("trace Gram matrix is twice the identity") {
    CHECK(basis().gram_scale() == QSqrt3(2));
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            const auto t = (basis().element(i) * basis().element(j)).trace();
            const QSqrt3 want = i == j ? QSqrt3(2) : QSqrt3::zero();
            CHECK(t == MultiPoly::constant(const_env(), want));
        }
    }
}

TEST_CASE("induced action reproduces all three dimension-5 generators") {
    const Representation rho3 = make_rho3();
    const Representation rho5 = make_rho5();
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(induced_action_matrix(rho3, static_cast<Gen>(k), basis()) ==
              rho5.generators[k]);
    }
}

TEST_CASE("coordinate round trip on random rational vectors") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int rep = 0; rep < 25; ++rep) {
        const std::array<long, 5> v = {coeff(rng), coeff(rng), coeff(rng),
                                       coeff(rng), coeff(rng)};
        const auto vec = const_vector(v);
        const SymTraceless3 a = coordinates_to_matrix(vec, basis());
        const auto back = matrix_to_coordinates(a, basis());
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(back[i] == vec[i]);
        }
    }
}

TEST_CASE("zero coordinates give the zero matrix") {
    const auto zero = const_vector({0, 0, 0, 0, 0});
    CHECK(coordinates_to_matrix(zero, basis()).matrix().is_zero());
}

TEST_CASE("basis vectors map to unit coordinates") {
    const SymTraceless3 a2(basis().element(1));
    const auto v = matrix_to_coordinates(a2, basis());
    for (std::size_t i = 0; i < 5; ++i) {
        const QSqrt3 want = i == 1 ? QSqrt3(1) : QSqrt3::zero();
        CHECK(v[i] == MultiPoly::constant(const_env(), want));
    }
}

TEST_CASE("squared trace of A_v is twice the coordinate norm") {
    // tr(A_v^2) = gram_scale * (v1^2 + ... + v5^2); the quadratic form on
    // coordinates (the metric) is the identity, the trace form is 2x it.
    const EnvPtr env = VarEnv::create({"v1", "v2", "v3", "v4", "v5"});
    const std::array<MultiPoly, 5> v = {
        MultiPoly::variable(env, "v1"), MultiPoly::variable(env, "v2"),
        MultiPoly::variable(env, "v3"), MultiPoly::variable(env, "v4"),
        MultiPoly::variable(env, "v5")};
    const SymTraceless3 a = coordinates_to_matrix(v, basis());
    const MultiPoly tr2 = (a.matrix() * a.matrix()).trace();
    const MultiPoly want = MultiPoly::parse(
        env, "2*v1^2 + 2*v2^2 + 2*v3^2 + 2*v4^2 + 2*v5^2");
    CHECK(tr2 == want);
}

TEST_CASE("symbolic coordinates round trip") {
    const EnvPtr env = VarEnv::create({"v1", "v2", "v3", "v4", "v5"});
    std::array<MultiPoly, 5> v = {
        MultiPoly::variable(env, "v1"), MultiPoly::variable(env, "v2"),
        MultiPoly::variable(env, "v3"), MultiPoly::variable(env, "v4"),
        MultiPoly::variable(env, "v5")};
    const auto back = matrix_to_coordinates(coordinates_to_matrix(v, basis()), basis());
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(back[i] == v[i]);
    }
}

TEST_CASE("SymTraceless3 rejects invalid matrices") {
    PolyMatrix not_symmetric(3, 3, const_env());
    not_symmetric.set(0, 1, MultiPoly::constant(const_env(), 1L));
    CHECK_THROWS_AS(SymTraceless3{not_symmetric}, StructureError);

    CHECK_THROWS_AS(SymTraceless3{PolyMatrix::identity(3, const_env())},
                    StructureError);
    CHECK_THROWS_AS(SymTraceless3{PolyMatrix::identity(2, const_env())},
                    ShapeError);
}
