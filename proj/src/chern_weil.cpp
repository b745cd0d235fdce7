#include "so3five/chern_weil.hpp"

#include <nlohmann/json.hpp>

namespace so3five {

EnvPtr curvature_env() {
    static const EnvPtr env = VarEnv::create({"lambda", "r1", "r2", "r3"});
    return env;
}

PolyMatrix curvature_matrix(const Representation& rep) {
    const EnvPtr env = curvature_env();
    PolyMatrix k = PolyMatrix::zero(rep.dim, rep.dim, env);
    const std::array<std::string, 3> names = {"r1", "r2", "r3"};
    for (std::size_t i = 0; i < 3; ++i) {
        const MultiPoly ri = MultiPoly::variable(env, names[i]);
        k = k + rep.generators[i].with_env(env).scaled(ri);
    }
    return k;
}

namespace {

// Exact integer ratio p = ratio * base, when it exists.
std::optional<long> integer_ratio(const MultiPoly& p, const MultiPoly& base) {
    if (base.is_zero()) {
        return std::nullopt;
    }
    const auto& [mono, coeff] = *base.terms().begin();
    const QSqrt3 num = p.coefficient(mono);
    const QSqrt3 q = num / coeff;
    if (q.b != 0 || rat_den(q.a) != 1) {
        return std::nullopt;
    }
    if (base.scaled(q) != p) {
        return std::nullopt;
    }
    return static_cast<long>(rat_num(q.a));
}

} // namespace

CharPolyReport char_poly(const Representation& rep) {
    const EnvPtr env = curvature_env();
    const MultiPoly lambda = MultiPoly::variable(env, "lambda");
    const PolyMatrix m =
        PolyMatrix::identity(rep.dim, env).scaled(lambda) + curvature_matrix(rep);
    MultiPoly full = m.det();
    const std::size_t lambda_idx = env->index_of("lambda");
    MultiPoly p1 = full.coefficient_of(lambda_idx, static_cast<std::uint32_t>(rep.dim - 2));

    // Base form r1^2 + r2^2 + r3^2 from the dimension-3 characteristic
    // polynomial; computing it in place keeps the ratio self-contained.
    const Representation rho3 = make_rho3();
    const PolyMatrix m3 =
        PolyMatrix::identity(3, env).scaled(lambda) + curvature_matrix(rho3);
    const MultiPoly base = m3.det().coefficient_of(lambda_idx, 1);

    CharPolyReport report{rep.dim, std::move(full), std::move(p1), std::nullopt};
    report.ratio_to_base = integer_ratio(report.p1_form, base);
    return report;
}

long pontryagin_ratio() {
    const auto report = char_poly(make_rho5());
    if (!report.ratio_to_base) {
        throw InconsistencyError(
            "dimension-5 p1 form is not proportional to the dimension-3 form");
    }
    return *report.ratio_to_base;
}

MultiPoly lambda_coefficient_rho5() {
    const auto report = char_poly(make_rho5());
    const std::size_t lambda_idx = curvature_env()->index_of("lambda");
    return report.full.coefficient_of(lambda_idx, 1);
}

std::string char_poly_report_json(const CharPolyReport& report) {
    nlohmann::json j;
    j["dim"] = report.rep_dim;
    j["char_poly"] = report.full.to_string();
    j["p1_form"] = report.p1_form.to_string();
    if (report.ratio_to_base) {
        j["ratio_to_base"] = *report.ratio_to_base;
    } else {
        j["ratio_to_base"] = "not proportional";
    }
    return j.dump();
}

} // namespace so3five
