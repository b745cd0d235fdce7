#ifndef SO3FIVE_M5SPACE_HPP
#define SO3FIVE_M5SPACE_HPP

#include <array>

#include "so3five/polymatrix.hpp"
#include "so3five/representation.hpp"

namespace so3five {

// Symmetric trace-free 3x3 matrix (entries may be symbolic). The five
// independent entries determine the sixth through the trace relation;
// construction validates both relations exactly.
class SymTraceless3 {
public:
    explicit SymTraceless3(PolyMatrix m);

    const PolyMatrix& matrix() const { return mat_; }
    const EnvPtr& env() const { return mat_.env(); }

    friend bool operator==(const SymTraceless3& x, const SymTraceless3& y) {
        return x.mat_ == y.mat_;
    }

private:
    PolyMatrix mat_;
};

// Basis A1..A5 of the symmetric trace-free 3x3 matrices, chosen so that
// the so(3) action A -> [rho3(Ek), A] has exactly the rho5 generator
// matrices as its coordinate expression. Over Q(sqrt 3) such a basis
// cannot have unit trace norms; the canonical normalization here is
//     tr(Ai Aj) = 2 delta_ij,
// the smallest trace scale the field admits. Coordinates are recovered
// as v_i = tr(A Ai) / 2, and the induced quadratic form on coordinates
// is the identity.
class M5Basis {
public:
    M5Basis(std::array<PolyMatrix, 5> elements, QSqrt3 gram_scale);

    const PolyMatrix& element(std::size_t i) const { return elements_.at(i); }
    const QSqrt3& gram_scale() const { return gram_scale_; }

private:
    std::array<PolyMatrix, 5> elements_;
    QSqrt3 gram_scale_;
};

// Solves the intertwining system [rho3(Ek), Aj] = sum_i rho5(Ek)_ij Ai
// for the basis, normalizes the trace Gram matrix to 2 I, fixes the
// remaining global sign deterministically (first nonzero entry of A1
// positive), and verifies everything before returning. Throws
// InconsistencyError when the system is inconsistent, not 1-dimensional,
// or the normalization does not exist in the field.
M5Basis derive_m5_basis();

// A_v = sum_i v_i A_i over the environment of the coordinates.
SymTraceless3 coordinates_to_matrix(const std::array<MultiPoly, 5>& v,
                                    const M5Basis& basis);

// Inverse of coordinates_to_matrix: v_i = tr(A Ai) / gram_scale.
std::array<MultiPoly, 5> matrix_to_coordinates(const SymTraceless3& a,
                                               const M5Basis& basis);

// Coordinate matrix of A -> [rho3(Ek), A] in the given basis; equals the
// corresponding rho5 generator when the basis is the derived one.
PolyMatrix induced_action_matrix(const Representation& rho3, Gen k,
                                 const M5Basis& basis);

} // namespace so3five

#endif
