#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "draws.hpp"
#include "hyperzeno/fock_oracle.hpp"
#include "hyperzeno/zeno.hpp"

namespace hz::cli {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

using GeneralFn = std::function<ZenoReport(const SystemParams&, double, ProbeScenario)>;

struct ValidateOptions {
    std::uint64_t seed = kDefaultSeed;
    // Reference evaluator for case consistency; replaceable so a corrupted
    // coefficient table can be shown to fail.
    GeneralFn general = [](const SystemParams& p, double z, ProbeScenario s) { return zeno_general(p, z, s); };
};

// Each check runs one property end to end and reports a one-line verdict.
CheckResult check_phase_matched_value();                            // 1
CheckResult check_transition_point();                               // 2
CheckResult check_conservation(const ValidateOptions& o);           // 3
CheckResult check_case_consistency(const ValidateOptions& o);       // 4
CheckResult check_oracle_agreement(const ValidateOptions& o);       // 5
CheckResult check_sign_laws(const ValidateOptions& o);              // 6
CheckResult check_fig8_signs();                                     // 7
CheckResult check_nulls();                                          // 8
CheckResult check_oracle_self_consistency();                        // 9

// fast: analytic checks; full: adds the oracle checks.
std::vector<CheckResult> run_validation(bool full, const ValidateOptions& o);
void print_table(std::ostream& out, const std::vector<CheckResult>& r);
bool all_pass(const std::vector<CheckResult>& r);

// Agreement test used by the oracle check: |oracle - analytic| within
// max(rel * |analytic|, abs_floor).
inline constexpr double kOracleRel = 0.05;
inline constexpr double kOracleAbs = 1e-8;

// Parameter set used for oracle comparisons of scenario s: amplitudes 0.5,
// assorted phases, small wavevectors; z_top gives max |coupling * z| = strength.
struct OracleCase {
    SystemParams params;
    double z_top = 0.0;
    oracle::FockConfig cfg;
};
OracleCase oracle_case(ProbeScenario s, double strength = 0.005);

}  // namespace hz::cli
