#ifndef SO3FIVE_VERIFY_SUITE_HPP
#define SO3FIVE_VERIFY_SUITE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "so3five/representation.hpp"

namespace so3five {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunReport {
    std::string command;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
    // 0 iff every check passed.
    int exit_code() const { return all_pass() ? 0 : 1; }
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int equivariance_samples = 25;
    int homomorphism_samples = 50;
    // Test hook: mutate the dimension-5 representation after
    // construction. Faults must surface as failed checks, never crashes.
    std::function<void(Representation&)> mutate_rho5;
};

// Runs every algebraic identity check across the representations, the
// tensor, and the characteristic polynomials. All verdicts are exact,
// so they do not depend on the seed; the seed only selects which
// rotations witness the sampled group-level properties.
RunReport run_verify_suite(const VerifyOptions& options);

std::string run_report_json(const RunReport& report);

} // namespace so3five

#endif
