#ifndef SO3FIVE_ROTATION_HPP
#define SO3FIVE_ROTATION_HPP

#include <random>

#include "so3five/m5space.hpp"
#include "so3five/polymatrix.hpp"
#include "so3five/rational.hpp"

namespace so3five {

// Nonzero quaternion with rational components. Normalization is never
// needed explicitly: the rotation formula divides by the norm square,
// which keeps every entry rational.
struct RationalQuaternion {
    Rational q0, q1, q2, q3;

    bool is_zero() const { return q0 == 0 && q1 == 0 && q2 == 0 && q3 == 0; }
    Rational norm_sq() const { return q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3; }

    friend RationalQuaternion operator*(const RationalQuaternion& p,
                                        const RationalQuaternion& q) {
        return RationalQuaternion{
            p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3,
            p.q0 * q.q1 + p.q1 * q.q0 + p.q2 * q.q3 - p.q3 * q.q2,
            p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1,
            p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0};
    }
};

// Exact 3x3 rotation: rational entries, h^T h = I and det h = 1, both
// verified on construction.
class Rotation3 {
public:
    explicit Rotation3(PolyMatrix m);

    const PolyMatrix& matrix() const { return mat_; }

    friend Rotation3 operator*(const Rotation3& g, const Rotation3& h) {
        return Rotation3(g.mat_ * h.mat_);
    }
    friend bool operator==(const Rotation3& g, const Rotation3& h) {
        return g.mat_ == h.mat_;
    }

private:
    PolyMatrix mat_;
};

// Euler-Rodrigues map: h = I + (2/N)(q0 K + K^2) with K the cross-product
// matrix of (q1, q2, q3) and N the quaternion norm square. Covers all of
// SO(3) over the rationals. Throws DomainError on the zero quaternion.
Rotation3 rotation_from_quaternion(const RationalQuaternion& q);

// Matrix of A -> h A h^T on coordinates: R_ij = tr(h Aj h^T Ai) / scale.
// Exactly orthogonal with determinant 1, and multiplicative in h; both
// properties are verified on every call.
PolyMatrix rho5_of_rotation(const Rotation3& h, const M5Basis& basis);

// Deterministic sampler with small integer components, never zero.
RationalQuaternion random_quaternion(std::mt19937_64& rng);

} // namespace so3five

#endif
