#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hkdf {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
    size_t failures() const;
};

// Individual suites. Exact suites take no seed; the integral sweep is
// seeded and deterministic.
SuiteReport run_heat();
SuiteReport run_ladder();
SuiteReport run_genfunc();
SuiteReport run_umbral_equiv();
SuiteReport run_sequences();
SuiteReport run_reductions();
SuiteReport run_integral_sweep(std::uint64_t seed, int draws_per_id = 20);
SuiteReport run_orthogonality();
SuiteReport run_bessel_suite();

/// Named suites for the CLI: heat, ladder, genfunc, umbral, reductions,
/// integrals, bessel, all.
std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed);
const std::vector<std::string>& suite_names();

}  // namespace hkdf
