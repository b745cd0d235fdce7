#include "so3five/representation.hpp"

namespace so3five {

namespace {

QSqrt3 q(long n) { return QSqrt3(n); }
QSqrt3 s3() { return QSqrt3::sqrt3(); }

} // namespace

Representation make_rho3() {
    auto e1 = PolyMatrix::from_scalars(3, 3,
        {q(0), q(0), q(0),
         q(0), q(0), q(1),
         q(0), q(-1), q(0)});
    auto e2 = PolyMatrix::from_scalars(3, 3,
        {q(0), q(0), q(1),
         q(0), q(0), q(0),
         q(-1), q(0), q(0)});
    auto e3 = PolyMatrix::from_scalars(3, 3,
        {q(0), q(1), q(0),
         q(-1), q(0), q(0),
         q(0), q(0), q(0)});
    return Representation{3, {std::move(e1), std::move(e2), std::move(e3)}};
}

Representation make_rho5() {
    auto e1 = PolyMatrix::from_scalars(5, 5,
        {q(0),   q(0),  q(0), q(0),  s3(),
         q(0),   q(0),  q(1), q(0),  q(0),
         q(0),   q(-1), q(0), q(0),  q(0),
         q(0),   q(0),  q(0), q(0),  q(1),
         -s3(),  q(0),  q(0), q(-1), q(0)});
    auto e2 = PolyMatrix::from_scalars(5, 5,
        {q(0),  q(0),  s3(),  q(0), q(0),
         q(0),  q(0),  q(0),  q(0), q(1),
         -s3(), q(0),  q(0),  q(1), q(0),
         q(0),  q(0),  q(-1), q(0), q(0),
         q(0),  q(-1), q(0),  q(0), q(0)});
    auto e3 = PolyMatrix::from_scalars(5, 5,
        {q(0), q(0),  q(0),  q(0), q(0),
         q(0), q(0),  q(0),  q(2), q(0),
         q(0), q(0),  q(0),  q(0), q(1),
         q(0), q(-2), q(0),  q(0), q(0),
         q(0), q(0),  q(-1), q(0), q(0)});
    return Representation{5, {std::move(e1), std::move(e2), std::move(e3)}};
}

bool generators_antisymmetric(const Representation& rep) {
    for (const auto& g : rep.generators) {
        if (!(g + g.transpose()).is_zero()) {
            return false;
        }
    }
    return true;
}

bool commutation_relations_hold(const Representation& rep) {
    const auto& e1 = rep.gen(Gen::E1);
    const auto& e2 = rep.gen(Gen::E2);
    const auto& e3 = rep.gen(Gen::E3);
    return commutator(e1, e2) == e3 && commutator(e2, e3) == e1 &&
           commutator(e3, e1) == e2;
}

} // namespace so3five
