#ifndef SO3FIVE_UPSILON_HPP
#define SO3FIVE_UPSILON_HPP

#include <array>

#include "so3five/m5space.hpp"
#include "so3five/rotation.hpp"

namespace so3five {

// The canonical coordinate environment (v1..v5) for identities in a
// symbolic vector.
EnvPtr vector_env();

// Totally symmetric, trace-free rank-3 tensor on R^5 with components in
// Q(sqrt 3), together with the normalization constant it was built with.
// Construction via build_upsilon verifies total symmetry and
// trace-freeness; they are asserted, never assumed.
class UpsilonTensor {
public:
    UpsilonTensor(std::array<QSqrt3, 125> components, QSqrt3 normalization);

    const QSqrt3& at(std::size_t i, std::size_t j, std::size_t k) const {
        return components_[(i * 5 + j) * 5 + k];
    }
    const QSqrt3& normalization() const { return normalization_; }

    // Componentwise rescaling by s (also rescales the stored constant).
    UpsilonTensor scaled(const QSqrt3& s) const;

    bool totally_symmetric() const;
    bool trace_free() const;

private:
    std::array<QSqrt3, 125> components_;
    QSqrt3 normalization_;
};

// Symmetric positive-definite Gram matrix of the quadratic form read off
// from the tensor identity; the canonical construction yields exactly
// the identity matrix.
class Metric5 {
public:
    explicit Metric5(PolyMatrix gram);

    const PolyMatrix& gram() const { return gram_; }
    bool is_identity() const {
        return gram_ == PolyMatrix::identity(5, gram_.env());
    }

private:
    PolyMatrix gram_;
};

// Components c * tr(Ai Aj Ak): the polarization of the determinant cubic
// on the matrix model, which is totally symmetric by trace cyclicity.
// Throws DomainError for c = 0.
UpsilonTensor build_upsilon(const M5Basis& basis, const QSqrt3& c);

// Finds the constant c > 0 (lexicographically positive) for which
//     Y_v(Y_v v) = (v1^2 + ... + v5^2) v
// holds identically. The residual with symbolic c is quadratic in c; the
// solve demands that every coefficient of every v-monomial vanish, which
// pins c^2 as an exact field ratio. Throws InconsistencyError when no
// field solution exists.
QSqrt3 solve_normalization(const M5Basis& basis);

// Endomorphism matrix (Y_v)_jk = sum_i v_i Y_ijk for a symbolic or
// concrete coordinate vector.
PolyMatrix upsilon_endomorphism(const UpsilonTensor& t,
                                const std::array<MultiPoly, 5>& v);

// Residual vector Y_v(Y_v v) - (sum_i v_i^2) v over symbolic v1..v5.
// All five components are the zero polynomial iff the defining identity
// holds.
std::array<MultiPoly, 5> defining_identity_residual(const UpsilonTensor& t);

// True iff R Y_v R^T = Y_{Rv} identically in v for a constant 5x5 matrix R.
bool equivariant_under(const UpsilonTensor& t, const PolyMatrix& r5);

// Specialization to R = rho5_of_rotation(h).
bool verify_equivariance(const UpsilonTensor& t, const Rotation3& h,
                         const M5Basis& basis);

// Reads the metric back out of the tensor: computes Y_v(Y_v v), checks
// that component k equals v_k times one common quadratic form, and
// returns that form's Gram matrix after an exact positive-definiteness
// check (leading principal minors). Throws StructureError when the input
// does not carry such a structure.
Metric5 recover_metric(const UpsilonTensor& t);

} // namespace so3five

#endif
