#include "so3five/verify_suite.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <random>
#include <sstream>

#include "so3five/chern_weil.hpp"
#include "so3five/m5space.hpp"
#include "so3five/rotation.hpp"
#include "so3five/upsilon.hpp"

namespace so3five {

namespace {

class SuiteRunner {
public:
    explicit SuiteRunner(const VerifyOptions& options)
        : options_(options), rho3_(make_rho3()), rho5_(make_rho5()) {
        if (options_.mutate_rho5) {
            options_.mutate_rho5(rho5_);
        }
    }

    RunReport run() {
        RunReport report;
        report.command = "verify";

        check(report, "rho3 commutation relations", [&] {
            return require(commutation_relations_hold(rho3_),
                           "[E1,E2]=E3 and cyclic variants (dim 3)");
        });
        check(report, "rho5 commutation relations", [&] {
            return require(commutation_relations_hold(rho5_),
                           "[E1,E2]=E3 and cyclic variants (dim 5)");
        });
        check(report, "generators antisymmetric", [&] {
            return require(generators_antisymmetric(rho3_) &&
                               generators_antisymmetric(rho5_),
                           "all six generators land in so(n)");
        });
        check(report, "model basis compatibility", [&] {
            const auto& basis = require_basis();
            for (std::size_t k = 0; k < 3; ++k) {
                if (induced_action_matrix(rho3_, static_cast<Gen>(k), basis) !=
                    rho5_.generators[k]) {
                    return fail("induced action differs from generator " +
                                std::to_string(k + 1));
                }
            }
            return pass("induced so(3) action reproduces all three generators");
        });
        check(report, "model basis trace Gram", [&] {
            const auto& basis = require_basis();
            for (std::size_t i = 0; i < 5; ++i) {
                for (std::size_t j = 0; j < 5; ++j) {
                    const auto t =
                        (basis.element(i) * basis.element(j)).trace().as_constant();
                    const QSqrt3 want =
                        i == j ? basis.gram_scale() : QSqrt3::zero();
                    if (!t || *t != want) {
                        return fail("tr(Ai Aj) != 2 delta_ij");
                    }
                }
            }
            return pass("tr(Ai Aj) = 2 delta_ij");
        });
        check(report, "charpoly dim 3 identity", [&] {
            const auto rep = char_poly(rho3_);
            const MultiPoly want = MultiPoly::parse(
                curvature_env(),
                "lambda^3 + lambda*r1^2 + lambda*r2^2 + lambda*r3^2");
            return require(rep.full == want,
                           "det(lambda I + K) = lambda^3 + lambda (r1^2+r2^2+r3^2)");
        });
        check(report, "charpoly dim 5 lambda^3 coefficient", [&] {
            const auto rep = char_poly(rho5_);
            const MultiPoly want =
                MultiPoly::parse(curvature_env(), "5*r1^2 + 5*r2^2 + 5*r3^2");
            return require(rep.p1_form == want,
                           "coefficient equals 5 (r1^2+r2^2+r3^2)");
        });
        check(report, "charpoly dim 5 lambda^4 coefficient", [&] {
            const auto rep = char_poly(rho5_);
            const auto lambda = curvature_env()->index_of("lambda");
            return require(rep.full.coefficient_of(lambda, 4).is_zero(),
                           "odd trace coefficient vanishes");
        });
        check(report, "pontryagin ratio", [&] {
            const long ratio = pontryagin_ratio_of(rho5_);
            return require(ratio == 5,
                           "p1(dim 5) = " + std::to_string(ratio) + " * p1(dim 3)");
        });
        check(report, "upsilon total symmetry", [&] {
            return require(require_upsilon().totally_symmetric(),
                           "all 6 index permutations agree");
        });
        check(report, "upsilon trace-free", [&] {
            return require(require_upsilon().trace_free(),
                           "sum_i Y_iik = 0 for every k");
        });
        check(report, "upsilon endomorphism symmetric", [&] {
            const auto& t = require_upsilon();
            const EnvPtr env = vector_env();
            const std::array<MultiPoly, 5> v = {
                MultiPoly::variable(env, "v1"), MultiPoly::variable(env, "v2"),
                MultiPoly::variable(env, "v3"), MultiPoly::variable(env, "v4"),
                MultiPoly::variable(env, "v5")};
            const PolyMatrix endo = upsilon_endomorphism(t, v);
            return require((endo - endo.transpose()).is_zero() &&
                               endo.trace().is_zero(),
                           "Y_v symmetric and trace zero for symbolic v");
        });
        check(report, "upsilon defining identity", [&] {
            const auto residual = defining_identity_residual(require_upsilon());
            for (const auto& r : residual) {
                if (!r.is_zero()) {
                    return fail("residual component " + r.to_string());
                }
            }
            return pass("Y_v(Y_v v) = |v|^2 v identically, c = " +
                        require_upsilon().normalization().to_string());
        });
        check(report, "metric recovery", [&] {
            return require(recover_metric(require_upsilon()).is_identity(),
                           "recovered Gram matrix is the identity");
        });
        check(report, "rho5 of rotation orthogonality", [&] {
            // rho5_of_rotation verifies orthogonality and determinant
            // internally and throws on failure.
            std::mt19937_64 rng(options_.seed);
            for (int i = 0; i < options_.equivariance_samples; ++i) {
                rho5_of_rotation(rotation_from_quaternion(random_quaternion(rng)),
                                 require_basis());
            }
            return pass(std::to_string(options_.equivariance_samples) +
                        " sampled rotations, exact");
        });
        check(report, "rho5 of rotation homomorphism", [&] {
            std::mt19937_64 rng(options_.seed + 1);
            const auto& basis = require_basis();
            for (int i = 0; i < options_.homomorphism_samples; ++i) {
                const RationalQuaternion p = random_quaternion(rng);
                const RationalQuaternion q = random_quaternion(rng);
                const Rotation3 hp = rotation_from_quaternion(p);
                const Rotation3 hq = rotation_from_quaternion(q);
                const Rotation3 hpq = rotation_from_quaternion(p * q);
                if (rho5_of_rotation(hpq, basis) !=
                    rho5_of_rotation(hp, basis) * rho5_of_rotation(hq, basis)) {
                    return fail("homomorphism violated at sample " +
                                std::to_string(i));
                }
            }
            return pass(std::to_string(options_.homomorphism_samples) +
                        " sampled pairs, exact");
        });
        check(report, "upsilon equivariance", [&] {
            std::mt19937_64 rng(options_.seed + 2);
            const auto& basis = require_basis();
            const auto& t = require_upsilon();
            for (int i = 0; i < options_.equivariance_samples; ++i) {
                const Rotation3 h =
                    rotation_from_quaternion(random_quaternion(rng));
                if (!verify_equivariance(t, h, basis)) {
                    return fail("equivariance violated at sample " +
                                std::to_string(i));
                }
            }
            return pass(std::to_string(options_.equivariance_samples) +
                        " sampled rotations, exact");
        });

        return report;
    }

private:
    struct Outcome {
        bool pass;
        std::string detail;
    };

    static Outcome pass(std::string detail) { return {true, std::move(detail)}; }
    static Outcome fail(std::string detail) { return {false, std::move(detail)}; }
    static Outcome require(bool ok, std::string detail) {
        return {ok, std::move(detail)};
    }

    template <typename Fn>
    void check(RunReport& report, std::string name, Fn&& fn) {
        CheckResult result;
        result.name = std::move(name);
        try {
            Outcome o = fn();
            result.pass = o.pass;
            result.detail = std::move(o.detail);
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("error: ") + e.what();
        }
        report.checks.push_back(std::move(result));
    }

    const M5Basis& require_basis() {
        if (!basis_) {
            basis_.emplace(derive_basis_against(rho5_));
        }
        return *basis_;
    }

    const UpsilonTensor& require_upsilon() {
        if (!upsilon_) {
            const auto& basis = require_basis();
            upsilon_.emplace(build_upsilon(basis, solve_normalization(basis)));
        }
        return *upsilon_;
    }

    // The public derivation always checks against the pristine
    // generators; under fault injection the suite must test the mutated
    // ones, so the check is re-run here against rho5_.
    M5Basis derive_basis_against(const Representation& rho5) {
        M5Basis basis = derive_m5_basis();
        for (std::size_t k = 0; k < 3; ++k) {
            if (induced_action_matrix(rho3_, static_cast<Gen>(k), basis) !=
                rho5.generators[k]) {
                throw InconsistencyError("basis incompatible with generators");
            }
        }
        return basis;
    }

    long pontryagin_ratio_of(const Representation& rho5) {
        const auto report = char_poly(rho5);
        if (!report.ratio_to_base) {
            throw InconsistencyError("p1 forms not proportional");
        }
        return *report.ratio_to_base;
    }

    VerifyOptions options_;
    Representation rho3_;
    Representation rho5_;
    std::optional<M5Basis> basis_;
    std::optional<UpsilonTensor> upsilon_;
};

} // namespace

RunReport run_verify_suite(const VerifyOptions& options) {
    return SuiteRunner(options).run();
}

std::string run_report_json(const RunReport& report) {
    nlohmann::json j;
    j["command"] = report.command;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"status", c.pass ? "pass" : "fail"},
                          {"detail", c.detail}});
    }
    j["checks"] = std::move(checks);
    j["exit_code"] = report.exit_code();
    return j.dump();
}

} // namespace so3five
