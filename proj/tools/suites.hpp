#pragma once

#include <cohann/serialize.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cohann::suites {

struct CheckResult {
    /// Acceptance criterion number, or 0 for property checks.
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    /// Deterministic record of the computed values.
    Json evidence;
};

struct GoldenOptions {
    /// Re-run criteria 1-11 and compare the serialized evidence (criterion 12).
    bool check_determinism = true;
};

// Individual golden checks, numbered like the acceptance criteria.
CheckResult check_an_cohomology_annihilator();
CheckResult check_oracle_equivalence();
CheckResult check_jacobian_containment();
CheckResult check_syzygy_dual_invariance();
CheckResult check_determinantal();
CheckResult check_semigroup_battery();
CheckResult check_milnor_battery();
CheckResult check_cross_route();
CheckResult check_knorrer_lifting();
CheckResult check_suspension_formula();
CheckResult check_torus_ideal_identity();

std::vector<CheckResult> run_golden(const GoldenOptions& options = {});
std::vector<CheckResult> run_properties(std::uint64_t seed);

/// {"suite": .., "passed": bool, "results": [{criterion, name, passed, detail, evidence}]}
Json results_to_json(const std::string& suite, const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cohann::suites
