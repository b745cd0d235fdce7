#include "so3five/rotation.hpp"

namespace so3five {

namespace {

QSqrt3 const_entry(const PolyMatrix& m, std::size_t r, std::size_t c) {
    const auto v = m.at(r, c).as_constant();
    if (!v) {
        throw InconsistencyError("expected constant matrix entry");
    }
    return *v;
}

} // namespace

Rotation3::Rotation3(PolyMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != 3 || mat_.cols() != 3) {
        throw ShapeError("rotation requires a 3x3 matrix");
    }
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            const QSqrt3 e = const_entry(mat_, r, c);
            if (e.b != 0) {
                throw StructureError("rotation entries must be rational");
            }
        }
    }
    if (mat_.transpose() * mat_ != PolyMatrix::identity(3, mat_.env())) {
        throw StructureError("matrix is not orthogonal");
    }
    if (mat_.det() != MultiPoly::constant(mat_.env(), QSqrt3::one())) {
        throw StructureError("matrix does not have determinant 1");
    }
}

Rotation3 rotation_from_quaternion(const RationalQuaternion& q) {
    if (q.is_zero()) {
        throw DomainError("zero quaternion has no rotation");
    }
    const Rational n = q.norm_sq();
    auto e = [&](const Rational& r) { return QSqrt3(r); };
    const PolyMatrix k = PolyMatrix::from_scalars(3, 3,
        {e(0), e(-q.q3), e(q.q2),
         e(q.q3), e(0), e(-q.q1),
         e(-q.q2), e(q.q1), e(0)});
    const PolyMatrix h = PolyMatrix::identity(3, const_env()) +
                         (k.scaled(QSqrt3(q.q0)) + k * k).scaled(QSqrt3(2 / n));
    return Rotation3(h);
}

PolyMatrix rho5_of_rotation(const Rotation3& h, const M5Basis& basis) {
    const PolyMatrix& hm = h.matrix();
    const PolyMatrix ht = hm.transpose();
    const QSqrt3 inv_scale = basis.gram_scale().inverse();
    PolyMatrix out = PolyMatrix::zero(5, 5, const_env());
    for (std::size_t j = 0; j < 5; ++j) {
        const PolyMatrix image = hm * basis.element(j) * ht;
        for (std::size_t i = 0; i < 5; ++i) {
            const auto t = (image * basis.element(i)).trace().as_constant();
            if (!t) {
                throw InconsistencyError("expected constant trace");
            }
            out.set(i, j, MultiPoly::constant(const_env(), *t * inv_scale));
        }
    }
    if (out.transpose() * out != PolyMatrix::identity(5, const_env())) {
        throw InconsistencyError("conjugation action is not orthogonal");
    }
    if (out.det() != MultiPoly::constant(const_env(), QSqrt3::one())) {
        throw InconsistencyError("conjugation action has determinant != 1");
    }
    return out;
}

RationalQuaternion random_quaternion(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-9, 9);
    while (true) {
        RationalQuaternion q{Rational(dist(rng)), Rational(dist(rng)),
                             Rational(dist(rng)), Rational(dist(rng))};
        if (!q.is_zero()) {
            return q;
        }
    }
}

} // namespace so3five
