#include "so3five/m5space.hpp"

#include <vector>

namespace so3five {

namespace {

QSqrt3 q(long n) { return QSqrt3(n); }

// Fixed working basis of the symmetric trace-free 3x3 matrices, used
// only inside the solver. Trace-orthogonal with norms (6, 2, 2, 2, 2).
std::array<PolyMatrix, 5> working_basis() {
    return {
        PolyMatrix::from_scalars(3, 3,
            {q(1), q(0), q(0), q(0), q(1), q(0), q(0), q(0), q(-2)}),
        PolyMatrix::from_scalars(3, 3,
            {q(1), q(0), q(0), q(0), q(-1), q(0), q(0), q(0), q(0)}),
        PolyMatrix::from_scalars(3, 3,
            {q(0), q(1), q(0), q(1), q(0), q(0), q(0), q(0), q(0)}),
        PolyMatrix::from_scalars(3, 3,
            {q(0), q(0), q(1), q(0), q(0), q(0), q(1), q(0), q(0)}),
        PolyMatrix::from_scalars(3, 3,
            {q(0), q(0), q(0), q(0), q(0), q(1), q(0), q(1), q(0)}),
    };
}

QSqrt3 const_entry(const PolyMatrix& m, std::size_t r, std::size_t c) {
    const auto v = m.at(r, c).as_constant();
    if (!v) {
        throw InconsistencyError("expected constant matrix entry");
    }
    return *v;
}

QSqrt3 const_trace_product(const PolyMatrix& x, const PolyMatrix& y) {
    const auto t = (x * y).trace().as_constant();
    if (!t) {
        throw InconsistencyError("expected constant trace");
    }
    return *t;
}

// Null space of a dense QSqrt3 matrix by Gauss-Jordan elimination.
// Returns one basis vector per free column.
std::vector<std::vector<QSqrt3>> null_space(std::vector<std::vector<QSqrt3>> m,
                                            std::size_t cols) {
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) {
            ++sel;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[row], m[sel]);
        const QSqrt3 inv = m[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) {
            m[row][j] *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) {
                continue;
            }
            const QSqrt3 f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                m[i][j] -= f * m[row][j];
            }
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<QSqrt3>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<QSqrt3> v(cols, QSqrt3::zero());
        v[free] = QSqrt3::one();
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            v[pivot_col[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

SymTraceless3 ::SymTraceless3(PolyMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != 3 || mat_.cols() != 3) {
        throw ShapeError("SymTraceless3 requires a 3x3 matrix");
    }
    if (!(mat_ - mat_.transpose()).is_zero()) {
        throw StructureError("matrix is not symmetric");
    }
    if (!mat_.trace().is_zero()) {
        throw StructureError("matrix is not trace-free");
    }
}

M5Basis::M5Basis(std::array<PolyMatrix, 5> elements, QSqrt3 gram_scale)
    : elements_(std::move(elements)), gram_scale_(std::move(gram_scale)) {
    for (const auto& e : elements_) {
        SymTraceless3 check(e); // validates shape, symmetry, trace
    }
    if (gram_scale_.is_zero()) {
        throw DomainError("zero Gram scale");
    }
}

M5Basis derive_m5_basis() {
    const auto rho3 = make_rho3();
    const auto rho5 = make_rho5();
    const auto u = working_basis();

    // Coordinates of [rho3(Ek), u_m] in the working basis give the
    // action matrices ad_k; the intertwiner T (columns = coordinates of
    // the sought A_j) must satisfy ad_k T = T rho5(Ek) for k = 1, 2, 3.
    std::array<std::array<std::array<QSqrt3, 5>, 5>, 3> ad;
    std::array<QSqrt3, 5> unorm;
    for (std::size_t l = 0; l < 5; ++l) {
        unorm[l] = const_trace_product(u[l], u[l]);
    }
    for (std::size_t k = 0; k < 3; ++k) {
        const auto& gen = rho3.generators[k];
        for (std::size_t m = 0; m < 5; ++m) {
            const PolyMatrix c = commutator(gen, u[m]);
            for (std::size_t l = 0; l < 5; ++l) {
                ad[k][l][m] = const_trace_product(c, u[l]) / unorm[l];
            }
        }
    }

    // Unknowns x[m*5 + j] = T[m][j]; 75 equations in 25 unknowns.
    std::vector<std::vector<QSqrt3>> system;
    system.reserve(75);
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t l = 0; l < 5; ++l) {
            for (std::size_t j = 0; j < 5; ++j) {
                std::vector<QSqrt3> eq(25, QSqrt3::zero());
                for (std::size_t m = 0; m < 5; ++m) {
                    eq[m * 5 + j] += ad[k][l][m];
                }
                for (std::size_t i = 0; i < 5; ++i) {
                    eq[l * 5 + i] -= const_entry(rho5.generators[k], i, j);
                }
                system.push_back(std::move(eq));
            }
        }
    }

    const auto kernel = null_space(std::move(system), 25);
    if (kernel.size() != 1) {
        throw InconsistencyError(
            "intertwiner space has dimension " + std::to_string(kernel.size()) +
            ", expected 1");
    }
    const auto& t = kernel.front();

    std::array<PolyMatrix, 5> raw = {
        PolyMatrix::zero(3, 3, const_env()), PolyMatrix::zero(3, 3, const_env()),
        PolyMatrix::zero(3, 3, const_env()), PolyMatrix::zero(3, 3, const_env()),
        PolyMatrix::zero(3, 3, const_env())};
    for (std::size_t j = 0; j < 5; ++j) {
        PolyMatrix a = PolyMatrix::zero(3, 3, const_env());
        for (std::size_t m = 0; m < 5; ++m) {
            a = a + u[m].scaled(t[m * 5 + j]);
        }
        raw[j] = std::move(a);
    }

    // The trace Gram matrix of any solution is a multiple of the
    // identity; scale it to 2 I, the smallest value reachable within
    // Q(sqrt 3) (unit norms would need 1/sqrt(6)).
    const QSqrt3 g0 = const_trace_product(raw[0], raw[0]);
    if (g0.is_zero()) {
        throw InconsistencyError("degenerate intertwiner");
    }
    const QSqrt3 target(Rational(2));
    const auto scale = qsqrt3_sqrt(target / g0);
    if (!scale) {
        throw InconsistencyError("Gram normalization not solvable in Q(sqrt 3)");
    }
    std::array<PolyMatrix, 5> elements = raw;
    for (auto& e : elements) {
        e = e.scaled(*scale);
    }

    // Global sign: make the first nonzero entry of A1 lexicographically
    // positive. (The intertwiner is unique up to one overall scalar, so
    // this is the only remaining freedom.)
    bool flip = false;
    bool found = false;
    for (std::size_t r = 0; r < 3 && !found; ++r) {
        for (std::size_t c = 0; c < 3 && !found; ++c) {
            const QSqrt3 e = const_entry(elements[0], r, c);
            if (!e.is_zero()) {
                flip = !e.lex_positive();
                found = true;
            }
        }
    }
    if (flip) {
        for (auto& e : elements) {
            e = -e;
        }
    }

    M5Basis basis(elements, target);

    // Hard verification of everything the construction promises.
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            const QSqrt3 want = i == j ? target : QSqrt3::zero();
            if (const_trace_product(elements[i], elements[j]) != want) {
                throw InconsistencyError("trace Gram matrix is not 2 I");
            }
        }
    }
    for (std::size_t k = 0; k < 3; ++k) {
        if (induced_action_matrix(rho3, static_cast<Gen>(k), basis) !=
            rho5.generators[k]) {
            throw InconsistencyError(
                "induced action does not match the dimension-5 generators");
        }
    }
    return basis;
}

SymTraceless3 coordinates_to_matrix(const std::array<MultiPoly, 5>& v,
                                    const M5Basis& basis) {
    const EnvPtr& env = v[0].env();
    PolyMatrix acc = PolyMatrix::zero(3, 3, env);
    for (std::size_t i = 0; i < 5; ++i) {
        if (!same_env(v[i].env(), env)) {
            throw EnvError("coordinate environments differ");
        }
        acc = acc + basis.element(i).with_env(env).scaled(v[i]);
    }
    return SymTraceless3(std::move(acc));
}

std::array<MultiPoly, 5> matrix_to_coordinates(const SymTraceless3& a,
                                               const M5Basis& basis) {
    const EnvPtr& env = a.env();
    const QSqrt3 inv_scale = basis.gram_scale().inverse();
    std::array<MultiPoly, 5> v = {
        MultiPoly::zero(env), MultiPoly::zero(env), MultiPoly::zero(env),
        MultiPoly::zero(env), MultiPoly::zero(env)};
    for (std::size_t i = 0; i < 5; ++i) {
        v[i] = (a.matrix() * basis.element(i).with_env(env)).trace().scaled(inv_scale);
    }
    return v;
}

PolyMatrix induced_action_matrix(const Representation& rho3, Gen k,
                                 const M5Basis& basis) {
    const auto& gen = rho3.gen(k);
    const QSqrt3 inv_scale = basis.gram_scale().inverse();
    PolyMatrix out = PolyMatrix::zero(5, 5, const_env());
    for (std::size_t j = 0; j < 5; ++j) {
        const PolyMatrix image = commutator(gen, basis.element(j));
        for (std::size_t i = 0; i < 5; ++i) {
            const QSqrt3 coeff =
                const_trace_product(image, basis.element(i)) * inv_scale;
            out.set(i, j, MultiPoly::constant(const_env(), coeff));
        }
    }
    return out;
}

} // namespace so3five
