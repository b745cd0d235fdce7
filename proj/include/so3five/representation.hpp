#ifndef SO3FIVE_REPRESENTATION_HPP
#define SO3FIVE_REPRESENTATION_HPP

#include <array>

#include "so3five/polymatrix.hpp"

namespace so3five {

// Basis index into the standard so(3) generators E1, E2, E3 with
// [E1, E2] = E3 and cyclic permutations.
enum class Gen : std::size_t { E1 = 0, E2 = 1, E3 = 2 };

// A representation of so(3): the common dimension plus the three images
// of E1, E2, E3 as constant antisymmetric matrices over Q(sqrt 3).
struct Representation {
    std::size_t dim;
    std::array<PolyMatrix, 3> generators;

    const PolyMatrix& gen(Gen g) const {
        return generators[static_cast<std::size_t>(g)];
    }
};

// The vector representation on R^3.
Representation make_rho3();

// The irreducible representation on R^5; entries involve +/- sqrt(3).
Representation make_rho5();

// True iff all three generators are antisymmetric.
bool generators_antisymmetric(const Representation& rep);

// True iff [rho(E1), rho(E2)] = rho(E3) and both cyclic variants hold.
bool commutation_relations_hold(const Representation& rep);

} // namespace so3five

#endif
