#include "so3five/obstruction.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "so3five/errors.hpp"

namespace so3five {

std::int64_t mod_euclid(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + (m > 0 ? m : -m) : r;
}

std::pair<bool, std::vector<CheckRecord>> standard_exists(const SurfaceInvariants& s) {
    const std::int64_t w4 = mod_euclid(s.euler, 2);
    std::vector<CheckRecord> reasons;
    reasons.push_back({"w4_pairing_chi_mod_2", w4, w4 == 0});
    return {w4 == 0, std::move(reasons)};
}

StructureVerdict irreducible_exists(const SurfaceInvariants& s) {
    auto [standard, reasons] = standard_exists(s);

    const std::int64_t p1 = 3 * s.signature;
    const std::int64_t p1_mod5 = mod_euclid(p1, 5);
    const std::int64_t sigma_mod5 = mod_euclid(s.signature, 5);
    // 3 is invertible mod 5, so the two residues vanish together; check
    // it instead of assuming it.
    if ((p1_mod5 == 0) != (sigma_mod5 == 0)) {
        throw InconsistencyError("3*sigma and sigma disagree mod 5");
    }
    reasons.push_back({"p1_pairing_3_sigma", p1, p1_mod5 == 0});
    reasons.push_back({"p1_pairing_mod_5", p1_mod5, p1_mod5 == 0});
    reasons.push_back({"sigma_mod_5", sigma_mod5, sigma_mod5 == 0});

    StructureVerdict v;
    v.standard_exists = standard;
    v.irreducible_exists = standard && sigma_mod5 == 0;
    v.reasons = std::move(reasons);
    return v;
}

bool theorem_criterion(const BundleData& b) {
    return b.splits_off_trivial_2plane && mod_euclid(b.p1_pairing, 5) == 0;
}

SurfaceInvariants connected_sum(const SurfaceInvariants& a,
                                const SurfaceInvariants& b) {
    return SurfaceInvariants{a.name + "#" + b.name, a.euler + b.euler - 2,
                             a.signature + b.signature};
}

SurfaceInvariants reverse_orientation(const SurfaceInvariants& s) {
    return SurfaceInvariants{"-" + s.name, s.euler, -s.signature};
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw LookupError("cannot open catalog file '" + path + "'");
    }
    std::vector<CatalogEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) {
            continue;
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("catalog line " + std::to_string(lineno) + ": " +
                             e.what());
        }
        if (!j.is_object() || !j.contains("name") || !j.contains("euler") ||
            !j.contains("signature") || !j.contains("provenance") ||
            !j["name"].is_string() || !j["euler"].is_number_integer() ||
            !j["signature"].is_number_integer() || !j["provenance"].is_string()) {
            throw ParseError("catalog line " + std::to_string(lineno) +
                             ": expected {name, euler, signature, provenance}");
        }
        CatalogEntry e;
        e.surface.name = j["name"].get<std::string>();
        e.surface.euler = j["euler"].get<std::int64_t>();
        e.surface.signature = j["signature"].get<std::int64_t>();
        e.provenance = j["provenance"].get<std::string>();
        entries.push_back(std::move(e));
    }
    return entries;
}

namespace {

std::string available_names(const std::vector<CatalogEntry>& catalog) {
    std::string out;
    for (const auto& e : catalog) {
        if (!out.empty()) {
            out += ", ";
        }
        out += e.surface.name;
    }
    return out;
}

SurfaceInvariants lookup_exact(const std::vector<CatalogEntry>& catalog,
                               const std::string& name) {
    for (const auto& e : catalog) {
        if (e.surface.name == name) {
            return e.surface;
        }
    }
    throw LookupError("unknown surface '" + name + "'; available: " +
                      available_names(catalog));
}

} // namespace

SurfaceInvariants resolve_surface(const std::vector<CatalogEntry>& catalog,
                                  const std::string& name) {
    for (const auto& e : catalog) {
        if (e.surface.name == name) {
            return e.surface;
        }
    }
    if (name.find('#') == std::string::npos) {
        return lookup_exact(catalog, name); // throws with the listing
    }
    std::vector<SurfaceInvariants> parts;
    std::stringstream ss(name);
    std::string token;
    while (std::getline(ss, token, '#')) {
        if (token.empty()) {
            throw LookupError("malformed connected-sum name '" + name + "'");
        }
        if (token[0] == '-') {
            parts.push_back(reverse_orientation(
                lookup_exact(catalog, token.substr(1))));
        } else {
            parts.push_back(lookup_exact(catalog, token));
        }
    }
    SurfaceInvariants acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        acc = connected_sum(acc, parts[i]);
    }
    return acc;
}

std::string verdict_json(const SurfaceInvariants& s, const StructureVerdict& v) {
    nlohmann::json j;
    j["surface"] = {{"name", s.name}, {"euler", s.euler}, {"signature", s.signature}};
    j["standard_exists"] = v.standard_exists;
    j["irreducible_exists"] = v.irreducible_exists;
    nlohmann::json reasons = nlohmann::json::array();
    for (const auto& r : v.reasons) {
        reasons.push_back({{"criterion", r.criterion},
                           {"value", r.value},
                           {"pass", r.pass}});
    }
    j["reasons"] = std::move(reasons);
    return j.dump();
}

} // namespace so3five
