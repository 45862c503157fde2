#pragma once

// End-to-end invariant suite behind the `verify` subcommand. Each check
// measures one residual (or order, or margin) and compares it with a fixed
// threshold.

#include <optional>
#include <string>
#include <vector>

namespace zerofield::verify {

enum class Comparison {
    AtMost,   ///< pass when measured <= threshold
    AtLeast,  ///< pass when measured >= threshold
    Above,    ///< pass when measured > threshold
};

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    Comparison comparison = Comparison::AtMost;
    bool pass = false;
    std::string detail;
};

struct Options {
    /// Replaces the threshold of every AtMost check.
    std::optional<double> tol_override;
};

std::vector<CheckResult> run_all(const Options& opts = {});

/// Individual checks, also used by the tests.
CheckResult check_wronskian(const Options& opts);
CheckResult check_recurrence(const Options& opts);
CheckResult check_crossover_continuity(const Options& opts);
CheckResult check_euler_constant(const Options& opts);
CheckResult check_hankel_expansion(const Options& opts);
CheckResult check_contrast_vanishing(const Options& opts);
CheckResult check_static_limit_value(const Options& opts);
CheckResult check_static_limit_order(const Options& opts);
CheckResult check_oracle_equivalence(const Options& opts);
CheckResult check_flux_consistency(const Options& opts);
CheckResult check_static_coincidence_order(const Options& opts);
CheckResult check_dynamic_divergence(const Options& opts);
CheckResult check_contour_independence(const Options& opts);
CheckResult check_reconstruction(const Options& opts);
CheckResult check_zerofield_curl(const Options& opts);
CheckResult check_zerofield_e(const Options& opts);
CheckResult check_field_curl_nonzero(const Options& opts);
CheckResult check_real_split(const Options& opts);
CheckResult check_addition_theorem(const Options& opts);
CheckResult check_gauge_single_valued(const Options& opts);
CheckResult check_gauge_multivalued(const Options& opts);
CheckResult check_intensity_bounds(const Options& opts);
CheckResult check_s_reproduction(const Options& opts);
CheckResult check_s_plateau(const Options& opts);

/// Note printed with every report about the cyclic-constant prefactor.
std::string prefactor_note();

const char* to_string(Comparison c);

}  // namespace zerofield::verify
