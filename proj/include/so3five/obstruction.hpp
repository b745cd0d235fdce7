#ifndef SO3FIVE_OBSTRUCTION_HPP
#define SO3FIVE_OBSTRUCTION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace so3five {

// A closed oriented 4-manifold, reduced to the only data the product
// criterion consumes: Euler characteristic and signature.
struct SurfaceInvariants {
    std::string name;
    std::int64_t euler = 0;
    std::int64_t signature = 0;
};

// Catalog entry: invariants plus a provenance note explaining how the
// numbers were computed (Betti numbers, intersection form).
struct CatalogEntry {
    SurfaceInvariants surface;
    std::string provenance;
};

// Abstract input to the rank-5 bundle criterion: whether the tangent
// bundle splits off a trivial 2-plane, and the pairing of p1 with the
// generating 4-cycle.
struct BundleData {
    bool splits_off_trivial_2plane = false;
    std::int64_t p1_pairing = 0;
};

struct CheckRecord {
    std::string criterion;
    std::int64_t value = 0;
    bool pass = false;
};

struct StructureVerdict {
    bool standard_exists = false;
    bool irreducible_exists = false;
    std::vector<CheckRecord> reasons;
};

// Mathematical (non-negative) residue.
std::int64_t mod_euclid(std::int64_t x, std::int64_t m);

// The product of a surface with a circle carries the standard structure
// iff the Euler characteristic is even (the obstruction is the w4
// pairing, which equals chi mod 2).
std::pair<bool, std::vector<CheckRecord>> standard_exists(const SurfaceInvariants& s);

// Full verdict: standard iff chi even; irreducible additionally needs
// the signature divisible by 5. The p1 pairing is 3 * sigma, and the
// equivalence (3 sigma = 0 mod 5) <=> (sigma = 0 mod 5) is asserted for
// the given input rather than assumed.
StructureVerdict irreducible_exists(const SurfaceInvariants& s);

// The rank-5 bundle criterion: split off a trivial 2-plane and p1
// divisible by 5.
bool theorem_criterion(const BundleData& b);

// chi(A # B) = chi(A) + chi(B) - 2, sigma(A # B) = sigma(A) + sigma(B).
SurfaceInvariants connected_sum(const SurfaceInvariants& a,
                                const SurfaceInvariants& b);

// Orientation reversal: signature flips, Euler characteristic stays.
SurfaceInvariants reverse_orientation(const SurfaceInvariants& s);

// Catalog file: one JSON object per line with fields name, euler,
// signature, provenance. Blank lines are skipped.
std::vector<CatalogEntry> load_catalog(const std::string& path);

// Resolves a name in the catalog. Exact matches win; otherwise the name
// is read as a '#'-separated connected sum whose summands may carry a
// leading '-' for orientation reversal (e.g. "CP2#-CP2"). Throws
// LookupError listing the available entries.
SurfaceInvariants resolve_surface(const std::vector<CatalogEntry>& catalog,
                                  const std::string& name);

std::string verdict_json(const SurfaceInvariants& s, const StructureVerdict& v);

} // namespace so3five

#endif
