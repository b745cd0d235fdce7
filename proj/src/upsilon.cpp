#include "so3five/upsilon.hpp"

#include <algorithm>

namespace so3five {

EnvPtr vector_env() {
    static const EnvPtr env = VarEnv::create({"v1", "v2", "v3", "v4", "v5"});
    return env;
}

namespace {

std::array<MultiPoly, 5> symbolic_vector(const EnvPtr& env) {
    return {MultiPoly::variable(env, "v1"), MultiPoly::variable(env, "v2"),
            MultiPoly::variable(env, "v3"), MultiPoly::variable(env, "v4"),
            MultiPoly::variable(env, "v5")};
}

std::array<MultiPoly, 5> apply_matrix(const PolyMatrix& m,
                                      const std::array<MultiPoly, 5>& v) {
    const EnvPtr& env = v[0].env();
    std::array<MultiPoly, 5> out = {
        MultiPoly::zero(env), MultiPoly::zero(env), MultiPoly::zero(env),
        MultiPoly::zero(env), MultiPoly::zero(env)};
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            out[i] += m.at(i, j) * v[j];
        }
    }
    return out;
}

MultiPoly squared_norm(const std::array<MultiPoly, 5>& v) {
    MultiPoly q = MultiPoly::zero(v[0].env());
    for (const auto& vi : v) {
        q += vi * vi;
    }
    return q;
}

std::array<QSqrt3, 125> raw_components(const M5Basis& basis, const QSqrt3& c) {
    std::array<QSqrt3, 125> comp;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            const PolyMatrix prod = basis.element(i) * basis.element(j);
            for (std::size_t k = 0; k < 5; ++k) {
                const auto t = (prod * basis.element(k)).trace().as_constant();
                if (!t) {
                    throw InconsistencyError("expected constant trace");
                }
                comp[(i * 5 + j) * 5 + k] = c * *t;
            }
        }
    }
    return comp;
}

} // namespace

UpsilonTensor::UpsilonTensor(std::array<QSqrt3, 125> components,
                             QSqrt3 normalization)
    : components_(std::move(components)), normalization_(std::move(normalization)) {}

UpsilonTensor UpsilonTensor::scaled(const QSqrt3& s) const {
    std::array<QSqrt3, 125> comp = components_;
    for (auto& x : comp) {
        x *= s;
    }
    return UpsilonTensor(std::move(comp), normalization_ * s);
}

bool UpsilonTensor::totally_symmetric() const {
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            for (std::size_t k = 0; k < 5; ++k) {
                const QSqrt3& x = at(i, j, k);
                if (x != at(i, k, j) || x != at(j, i, k) || x != at(j, k, i) ||
                    x != at(k, i, j) || x != at(k, j, i)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool UpsilonTensor::trace_free() const {
    for (std::size_t k = 0; k < 5; ++k) {
        QSqrt3 sum = QSqrt3::zero();
        for (std::size_t i = 0; i < 5; ++i) {
            sum += at(i, i, k);
        }
        if (!sum.is_zero()) {
            return false;
        }
    }
    return true;
}

Metric5::Metric5(PolyMatrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != 5 || gram_.cols() != 5) {
        throw ShapeError("metric requires a 5x5 matrix");
    }
    if (!(gram_ - gram_.transpose()).is_zero()) {
        throw StructureError("metric must be symmetric");
    }
}

UpsilonTensor build_upsilon(const M5Basis& basis, const QSqrt3& c) {
    if (c.is_zero()) {
        throw DomainError("normalization constant must be nonzero");
    }
    UpsilonTensor t(raw_components(basis, c), c);
    if (!t.totally_symmetric()) {
        throw InconsistencyError("tensor is not totally symmetric");
    }
    if (!t.trace_free()) {
        throw InconsistencyError("tensor is not trace-free");
    }
    return t;
}

QSqrt3 solve_normalization(const M5Basis& basis) {
    // With c = 1 the residual of the defining identity is
    //     c^2 * z_k(v) - |v|^2 v_k,
    // so the identity holds iff c^2 * z_k = |v|^2 v_k for every k and
    // every monomial.
    const UpsilonTensor unit(raw_components(basis, QSqrt3::one()), QSqrt3::one());
    const EnvPtr env = vector_env();
    const auto v = symbolic_vector(env);
    const PolyMatrix endo = upsilon_endomorphism(unit, v);
    const auto z = apply_matrix(endo, apply_matrix(endo, v));
    const MultiPoly norm2 = squared_norm(v);

    QSqrt3 ratio = QSqrt3::zero();
    bool have_ratio = false;
    for (std::size_t k = 0; k < 5; ++k) {
        const MultiPoly target = norm2 * v[k];
        if (!have_ratio) {
            for (const auto& [mono, coeff] : z[k].terms()) {
                const QSqrt3 want = target.coefficient(mono);
                if (!want.is_zero()) {
                    ratio = want / coeff;
                    have_ratio = true;
                    break;
                }
            }
        }
        if (have_ratio) {
            if (z[k].scaled(ratio) != target) {
                throw InconsistencyError(
                    "tensor identity residual is not proportional to the "
                    "metric term");
            }
        } else if (!target.is_zero()) {
            throw InconsistencyError("tensor identity degenerate");
        }
    }
    if (!have_ratio) {
        throw InconsistencyError("tensor identity degenerate");
    }
    const auto c = qsqrt3_sqrt(ratio);
    if (!c) {
        throw InconsistencyError("normalization is not solvable in Q(sqrt 3)");
    }
    return c->lex_positive() ? *c : -*c;
}

PolyMatrix upsilon_endomorphism(const UpsilonTensor& t,
                                const std::array<MultiPoly, 5>& v) {
    const EnvPtr& env = v[0].env();
    PolyMatrix out = PolyMatrix::zero(5, 5, env);
    for (std::size_t j = 0; j < 5; ++j) {
        for (std::size_t k = 0; k < 5; ++k) {
            MultiPoly e = MultiPoly::zero(env);
            for (std::size_t i = 0; i < 5; ++i) {
                const QSqrt3& coeff = t.at(i, j, k);
                if (!coeff.is_zero()) {
                    e += v[i].scaled(coeff);
                }
            }
            out.set(j, k, std::move(e));
        }
    }
    return out;
}

std::array<MultiPoly, 5> defining_identity_residual(const UpsilonTensor& t) {
    const EnvPtr env = vector_env();
    const auto v = symbolic_vector(env);
    const PolyMatrix endo = upsilon_endomorphism(t, v);
    auto z = apply_matrix(endo, apply_matrix(endo, v));
    const MultiPoly norm2 = squared_norm(v);
    for (std::size_t k = 0; k < 5; ++k) {
        z[k] -= norm2 * v[k];
    }
    return z;
}

bool equivariant_under(const UpsilonTensor& t, const PolyMatrix& r5) {
    const EnvPtr env = vector_env();
    const auto v = symbolic_vector(env);
    const PolyMatrix r = r5.with_env(env);
    const PolyMatrix lhs = r * upsilon_endomorphism(t, v) * r.transpose();
    const PolyMatrix rhs = upsilon_endomorphism(t, apply_matrix(r, v));
    return lhs == rhs;
}

bool verify_equivariance(const UpsilonTensor& t, const Rotation3& h,
                         const M5Basis& basis) {
    return equivariant_under(t, rho5_of_rotation(h, basis));
}

Metric5 recover_metric(const UpsilonTensor& t) {
    const EnvPtr env = vector_env();
    const auto v = symbolic_vector(env);
    const PolyMatrix endo = upsilon_endomorphism(t, v);
    const auto z = apply_matrix(endo, apply_matrix(endo, v));

    // Component k must be v_k times one common quadratic form q(v).
    MultiPoly q = MultiPoly::zero(env);
    bool have_q = false;
    for (std::size_t k = 0; k < 5; ++k) {
        MultiPoly qk = MultiPoly::zero(env);
        for (const auto& [mono, coeff] : z[k].terms()) {
            if (mono[k] == 0) {
                throw StructureError(
                    "eigenvector identity fails: component not divisible by "
                    "its coordinate");
            }
            Monomial reduced = mono;
            reduced[k] -= 1;
            if (monomial_degree(reduced) != 2) {
                throw StructureError("eigenvalue form is not quadratic");
            }
            qk.add_term(reduced, coeff);
        }
        if (!have_q) {
            q = qk;
            have_q = true;
        } else if (qk != q) {
            throw StructureError(
                "eigenvalue form differs between components");
        }
    }

    PolyMatrix gram = PolyMatrix::zero(5, 5, const_env());
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            Monomial mono(5, 0);
            mono[i] += 1;
            mono[j] += 1;
            QSqrt3 coeff = q.coefficient(mono);
            if (i != j) {
                coeff = coeff * QSqrt3(Rational(1, 2));
            }
            gram.set(i, j, MultiPoly::constant(const_env(), coeff));
        }
    }

    // Exact positive definiteness via leading principal minors.
    for (std::size_t n = 1; n <= 5; ++n) {
        PolyMatrix sub(n, n, const_env());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                sub.set(i, j, gram.at(i, j));
            }
        }
        const auto minor = sub.det().as_constant();
        if (!minor || minor->sign() <= 0) {
            throw StructureError("recovered form is not positive definite");
        }
    }
    return Metric5(std::move(gram));
}

} // namespace so3five
