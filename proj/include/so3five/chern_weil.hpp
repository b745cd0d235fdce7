#ifndef SO3FIVE_CHERN_WEIL_HPP
#define SO3FIVE_CHERN_WEIL_HPP

#include <optional>
#include <string>

#include "so3five/polymatrix.hpp"
#include "so3five/representation.hpp"

namespace so3five {

// Environment {lambda, r1, r2, r3}: the curvature coefficients r1..r3
// are degree-1 generators of a commutative ring. Only even-degree forms
// enter the first Pontryagin coefficient, so commuting polynomial
// generators model the 2-form coefficients faithfully.
EnvPtr curvature_env();

// Characteristic polynomial data of det(lambda I + r1 rho(E1) +
// r2 rho(E2) + r3 rho(E3)). p1_form is the coefficient of
// lambda^(dim - 2), a quadratic form in r; ratio_to_base is its exact
// integer ratio to the dimension-3 form r1^2 + r2^2 + r3^2, or nullopt
// when not proportional.
struct CharPolyReport {
    std::size_t rep_dim;
    MultiPoly full;
    MultiPoly p1_form;
    std::optional<long> ratio_to_base;
};

// r1 rho(E1) + r2 rho(E2) + r3 rho(E3) over the curvature environment.
PolyMatrix curvature_matrix(const Representation& rep);

CharPolyReport char_poly(const Representation& rep);

// The exact integer with p1(dim 5) = ratio * p1(dim 3). The value is 5;
// a non-proportional pair signals a transcription bug and throws
// InconsistencyError.
long pontryagin_ratio();

// Coefficient of lambda^1 in the dimension-5 characteristic polynomial,
// a homogeneous quartic form in r. Produced by exact expansion and kept
// as a golden artifact; no closed form is assumed anywhere.
MultiPoly lambda_coefficient_rho5();

std::string char_poly_report_json(const CharPolyReport& report);

} // namespace so3five

#endif
