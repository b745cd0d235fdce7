#include "doctest.h"

#include <random>

#include "so3five/obstruction.hpp"
#include "so3five/errors.hpp"

using namespace so3five;

namespace {

std::string catalog_file() {
    return std::string(SO3FIVE_REPO_ROOT) + "/data/catalog.jsonl";
}

const std::vector<CatalogEntry>& catalog() {
    static const auto entries = load_catalog(catalog_file());
    return entries;
}

SurfaceInvariants surf(const char* name, std::int64_t chi, std::int64_t sigma) {
    return SurfaceInvariants{name, chi, sigma};
}

} // namespace

TEST_CASE("euclidean residues") {
    CHECK(mod_euclid(-48, 5) == 2);
    CHECK(mod_euclid(-16, 5) == 4);
    CHECK(mod_euclid(24, 2) == 0);
    CHECK(mod_euclid(3, 2) == 1);
}

TEST_CASE("standard structure exists iff chi is even") {
    CHECK(standard_exists(surf("K3", 24, -16)).first);
    CHECK_FALSE(standard_exists(surf("CP2", 3, 1)).first);
    CHECK(standard_exists(surf("CP2#CP2bar", 4, 0)).first);
    const auto [ok, reasons] = standard_exists(surf("CP2", 3, 1));
    REQUIRE(reasons.size() == 1);
    CHECK(reasons[0].value == 1); // chi mod 2
    CHECK_FALSE(reasons[0].pass);
    CHECK_FALSE(ok);
}

TEST_CASE("K3 admits the standard but not the irreducible structure") {
    const StructureVerdict v = irreducible_exists(surf("K3", 24, -16));
    CHECK(v.standard_exists);
    CHECK_FALSE(v.irreducible_exists);
    // p1 pairing is 3 sigma = -48, and -48 is not divisible by 5
    bool found = false;
    for (const auto& r : v.reasons) {
        if (r.criterion == "p1_pairing_3_sigma") {
            CHECK(r.value == -48);
            CHECK_FALSE(r.pass);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("the blown-up projective plane admits both structures") {
    const StructureVerdict v = irreducible_exists(surf("CP2#CP2bar", 4, 0));
    CHECK(v.standard_exists);
    CHECK(v.irreducible_exists);
}

TEST_CASE("the four-torus admits both structures") {
    // chi from Betti numbers 1,4,6,4,1 is 0; sigma of the hyperbolic
    // intersection form 3H is 0.
    const StructureVerdict v = irreducible_exists(surf("T4", 0, 0));
    CHECK(v.standard_exists);
    CHECK(v.irreducible_exists);
}

TEST_CASE("verdict implication: irreducible requires standard") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<std::int64_t> chi(-30, 30);
    std::uniform_int_distribution<std::int64_t> sigma(-30, 30);
    for (int i = 0; i < 300; ++i) {
        const StructureVerdict v =
            irreducible_exists(surf("random", chi(rng), sigma(rng)));
        if (v.irreducible_exists) {
            CHECK(v.standard_exists);
        }
    }
}

TEST_CASE("bundle criterion") {
    CHECK_FALSE(theorem_criterion({true, -48}));
    CHECK(theorem_criterion({true, 0}));
    CHECK_FALSE(theorem_criterion({false, 0}));
    CHECK(theorem_criterion({true, -45}));
}

TEST_CASE("bundle criterion agrees with the product verdict") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<std::int64_t> chi(-40, 40);
    std::uniform_int_distribution<std::int64_t> sigma(-40, 40);
    for (int i = 0; i < 500; ++i) {
        const SurfaceInvariants s = surf("random", chi(rng), sigma(rng));
        const StructureVerdict v = irreducible_exists(s);
        const BundleData b{mod_euclid(s.euler, 2) == 0, 3 * s.signature};
        CHECK(theorem_criterion(b) == v.irreducible_exists);
    }
}

TEST_CASE("connected sum arithmetic") {
    const SurfaceInvariants cp2 = surf("CP2", 3, 1);
    const SurfaceInvariants cp2bar = reverse_orientation(cp2);
    CHECK(cp2bar.euler == 3);
    CHECK(cp2bar.signature == -1);

    const SurfaceInvariants blowup = connected_sum(cp2, cp2bar);
    CHECK(blowup.euler == 4);
    CHECK(blowup.signature == 0);
    CHECK(blowup.name == "CP2#-CP2");

    const SurfaceInvariants k3 = surf("K3", 24, -16);
    const SurfaceInvariants twice = connected_sum(k3, k3);
    CHECK(twice.euler == 46);
    CHECK(twice.signature == -32);

    // S4 is the identity element
    const SurfaceInvariants s4 = surf("S4", 2, 0);
    const SurfaceInvariants same = connected_sum(k3, s4);
    CHECK(same.euler == k3.euler);
    CHECK(same.signature == k3.signature);
}

TEST_CASE("connected sum is commutative and associative on invariants") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<std::int64_t> val(-20, 20);
    for (int i = 0; i < 100; ++i) {
        const SurfaceInvariants a = surf("A", val(rng), val(rng));
        const SurfaceInvariants b = surf("B", val(rng), val(rng));
        const SurfaceInvariants c = surf("C", val(rng), val(rng));
        const auto ab = connected_sum(a, b);
        const auto ba = connected_sum(b, a);
        CHECK(ab.euler == ba.euler);
        CHECK(ab.signature == ba.signature);
        const auto l = connected_sum(connected_sum(a, b), c);
        const auto r = connected_sum(a, connected_sum(b, c));
        CHECK(l.euler == r.euler);
        CHECK(l.signature == r.signature);
    }
}

TEST_CASE("residue classes alone decide the verdicts") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<std::int64_t> chi(-40, 40);
    std::uniform_int_distribution<std::int64_t> sigma(-40, 40);
    for (int i = 0; i < 200; ++i) {
        const SurfaceInvariants s = surf("x", chi(rng), sigma(rng));
        const SurfaceInvariants shifted =
            surf("x", s.euler + 2, s.signature + 10);
        const auto v1 = irreducible_exists(s);
        const auto v2 = irreducible_exists(shifted);
        CHECK(v1.standard_exists == v2.standard_exists);
        CHECK(v1.irreducible_exists == v2.irreducible_exists);
    }
}

TEST_CASE("3 sigma and sigma vanish mod 5 together, exhaustively") {
    for (std::int64_t sigma = -100; sigma <= 100; ++sigma) {
        CHECK((mod_euclid(3 * sigma, 5) == 0) == (mod_euclid(sigma, 5) == 0));
    }
}

TEST_CASE("catalog ships the expected entries with provenance") {
    const auto& entries = catalog();
    REQUIRE(entries.size() >= 7);
    auto find = [&](const std::string& name) -> const CatalogEntry* {
        for (const auto& e : entries) {
            if (e.surface.name == name) {
                return &e;
            }
        }
        return nullptr;
    };
    const CatalogEntry* k3 = find("K3");
    REQUIRE(k3 != nullptr);
    CHECK(k3->surface.euler == 24);
    CHECK(k3->surface.signature == -16);

    const CatalogEntry* s2s2 = find("S2xS2");
    REQUIRE(s2s2 != nullptr);
    CHECK(s2s2->surface.euler == 4);
    CHECK(s2s2->surface.signature == 0);

    const CatalogEntry* cp2 = find("CP2");
    REQUIRE(cp2 != nullptr);
    CHECK(cp2->surface.euler == 3);
    CHECK(cp2->surface.signature == 1);

    for (const char* name : {"K3", "CP2", "CP2bar", "CP2#CP2bar", "S4",
                             "S2xS2", "T4"}) {
        const CatalogEntry* e = find(name);
        REQUIRE_MESSAGE(e != nullptr, name);
        CHECK_FALSE(e->provenance.empty());
    }
}

TEST_CASE("name resolution handles sums and orientation reversal") {
    const SurfaceInvariants exact = resolve_surface(catalog(), "CP2#CP2bar");
    CHECK(exact.euler == 4);
    CHECK(exact.signature == 0);

    const SurfaceInvariants parsed = resolve_surface(catalog(), "CP2#-CP2");
    CHECK(parsed.euler == 4);
    CHECK(parsed.signature == 0);

    const SurfaceInvariants sum = resolve_surface(catalog(), "K3#K3");
    CHECK(sum.euler == 46);
    CHECK(sum.signature == -32);

    CHECK_THROWS_AS(resolve_surface(catalog(), "nope"), LookupError);
    CHECK_THROWS_AS(resolve_surface(catalog(), "K3#nope"), LookupError);
    try {
        resolve_surface(catalog(), "nope");
    } catch (const LookupError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("K3") != std::string::npos); // lists what exists
    }
}

TEST_CASE("catalog loader rejects malformed files") {
    CHECK_THROWS_AS(load_catalog("/definitely/missing.jsonl"), LookupError);
}
