#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "so3five/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = so3five::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string catalog_file() {
    return std::string(SO3FIVE_REPO_ROOT) + "/data/catalog.jsonl";
}

} // namespace

TEST_CASE("verify passes and exits 0") {
    const auto r = run_cli({"verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("[PASS]") != std::string::npos);
}

TEST_CASE("verify output is byte-identical across reruns") {
    const auto a = run_cli({"verify", "--seed", "3", "--json"});
    const auto b = run_cli({"verify", "--seed", "3", "--json"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("verify verdicts are seed independent") {
    const auto a = run_cli({"verify", "--seed", "7", "--json"});
    const auto b = run_cli({"verify", "--seed", "8", "--json"});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    const auto ja = nlohmann::json::parse(a.out);
    const auto jb = nlohmann::json::parse(b.out);
    REQUIRE(ja["checks"].size() == jb["checks"].size());
    for (std::size_t i = 0; i < ja["checks"].size(); ++i) {
        CHECK(ja["checks"][i]["name"] == jb["checks"][i]["name"]);
        CHECK(ja["checks"][i]["status"] == jb["checks"][i]["status"]);
    }
}

TEST_CASE("fault injection turns verify red with exit 1") {
    setenv("SO3FIVE_FAULT", "corrupt-rho5", 1);
    const auto r = run_cli({"verify", "--json"});
    unsetenv("SO3FIVE_FAULT");
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    bool commutation_failed = false;
    for (const auto& c : j["checks"]) {
        if (c["name"].get<std::string>().find("rho5 commutation") !=
                std::string::npos &&
            c["status"] == "fail") {
            commutation_failed = true;
        }
    }
    CHECK(commutation_failed);
    CHECK(j["exit_code"] == 1);
}

TEST_CASE("charpoly reports both dimensions") {
    const auto r3 = run_cli({"charpoly", "--dim", "3"});
    CHECK(r3.code == 0);
    CHECK(r3.out.find("r1^2 + r2^2 + r3^2") != std::string::npos);

    const auto r5 = run_cli({"charpoly", "--dim", "5", "--json"});
    CHECK(r5.code == 0);
    const auto j = nlohmann::json::parse(r5.out);
    CHECK(j["dim"] == 5);
    CHECK(j["p1_form"] == "5*r1^2 + 5*r2^2 + 5*r3^2");
    CHECK(j["ratio_to_base"] == 5);
}

TEST_CASE("charpoly rejects other dimensions with exit 2") {
    CHECK(run_cli({"charpoly", "--dim", "4"}).code == 2);
    CHECK(run_cli({"charpoly"}).code == 2);
}

TEST_CASE("check resolves catalog names") {
    const auto r = run_cli({"check", "K3", "--catalog", catalog_file(), "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["standard_exists"] == true);
    CHECK(j["irreducible_exists"] == false);
    bool saw_pairing = false;
    for (const auto& reason : j["reasons"]) {
        if (reason["criterion"] == "p1_pairing_3_sigma") {
            CHECK(reason["value"] == -48);
            saw_pairing = true;
        }
    }
    CHECK(saw_pairing);
}

TEST_CASE("check handles connected-sum names") {
    const auto r =
        run_cli({"check", "CP2#-CP2", "--catalog", catalog_file(), "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["standard_exists"] == true);
    CHECK(j["irreducible_exists"] == true);
}

TEST_CASE("check accepts explicit invariants") {
    const auto r = run_cli({"check", "--chi", "5", "--sigma", "0", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["standard_exists"] == false);
    CHECK(j["irreducible_exists"] == false);
}

TEST_CASE("check exits 2 on unknown names and lists the catalog") {
    const auto r = run_cli({"check", "nope", "--catalog", catalog_file()});
    CHECK(r.code == 2);
    CHECK(r.err.find("K3") != std::string::npos);
}

TEST_CASE("environment variable supplies the catalog path") {
    setenv("SO3FIVE_CATALOG", catalog_file().c_str(), 1);
    const auto r = run_cli({"check", "T4", "--json"});
    unsetenv("SO3FIVE_CATALOG");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["irreducible_exists"] == true);
}

TEST_CASE("upsilon dump is deterministic and permutation closed") {
    const auto a = run_cli({"upsilon"});
    const auto b = run_cli({"upsilon"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("normalization c = 1/2*s3") != std::string::npos);

    const auto j = nlohmann::json::parse(run_cli({"upsilon", "--json"}).out);
    std::map<std::array<int, 3>, std::string> comps;
    for (const auto& c : j["components"]) {
        comps[{c["i"].get<int>(), c["j"].get<int>(), c["k"].get<int>()}] =
            c["value"].get<std::string>();
    }
    CHECK_FALSE(comps.empty());
    for (const auto& [idx, value] : comps) {
        const std::array<int, 3> rev = {idx[2], idx[1], idx[0]};
        REQUIRE(comps.count(rev) == 1);
        CHECK(comps.at(rev) == value);
    }
}

TEST_CASE("usage errors exit 2, help exits 0") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"verify", "--bogus"}).code == 2);
    CHECK(run_cli({}).code == 2);
}
