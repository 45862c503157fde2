#include <doctest.h>

#include <cmath>
#include <set>
#include <string>

#include "zerofield/verify.hpp"

using namespace zerofield::verify;

namespace {

// Residuals whose thresholds cannot be met: the static-limit corrections carry
// a (kR)^2 ln(kR) term, and the addition-theorem tail decays only like
// (rho_< / rho_>)^(m+1). Reference values below come from 40-digit
// arithmetic, independent of this code base.
const std::set<std::string> kKnownShortfalls = {
    "potentials.static_limit_value",
    "potentials.static_limit_order",
    "observables.static_coincidence_order",
    "potentials.addition_theorem",
};

}  // namespace

TEST_CASE("suite covers every invariant once") {
    const auto results = run_all();
    CHECK(results.size() >= 12);
    std::set<std::string> names;
    for (const auto& r : results) {
        CHECK(names.insert(r.name).second);
        CHECK(std::isfinite(r.measured));
    }
}

TEST_CASE("all attainable checks pass") {
    for (const auto& r : run_all()) {
        if (kKnownShortfalls.count(r.name)) {
            continue;
        }
        INFO(r.name << ": measured " << r.measured << " " << to_string(r.comparison) << " " << r.threshold << " ["
                    << r.detail << "]");
        CHECK(r.pass);
    }
}

TEST_CASE("static-limit residual matches high-precision reference") {
    const CheckResult v = check_static_limit_value({});
    CHECK(v.measured == doctest::Approx(1.8411261e-7).epsilon(1e-4));
    CHECK_FALSE(v.pass);
    const CheckResult o = check_static_limit_order({});
    // log10 ratios 1.8778 (1e-3 -> 1e-4) and 1.9041 (1e-4 -> 1e-5)
    CHECK(o.measured == doctest::Approx(1.8778017).epsilon(1e-4));
    CHECK_FALSE(o.pass);
}

TEST_CASE("coincidence ratio converges with order below two") {
    const CheckResult o = check_static_coincidence_order({});
    CHECK(o.measured == doctest::Approx(1.8412187).epsilon(1e-4));
    CHECK_FALSE(o.pass);
    const CheckResult d = check_dynamic_divergence({});
    CHECK(d.measured == doctest::Approx(0.1462119943).epsilon(1e-9));
    CHECK(d.pass);
}

TEST_CASE("addition theorem worst case on the full grid") {
    const CheckResult r = check_addition_theorem({});
    CHECK(r.measured == doctest::Approx(1.1910592e-5).epsilon(1e-4));
    CHECK(r.detail.find("k rho = 1, kR = 2, dalpha = 0") != std::string::npos);
}

TEST_CASE("tolerance override tightens residual checks only") {
    Options tight;
    tight.tol_override = 1e-30;
    const CheckResult w = check_wronskian(tight);
    CHECK(w.threshold == 1e-30);
    CHECK_FALSE(w.pass);
    const CheckResult div = check_dynamic_divergence(tight);
    CHECK(div.threshold == 0.01);
    CHECK(div.pass);

    Options loose;
    loose.tol_override = 1e-4;
    CHECK(check_static_limit_value(loose).pass);
    CHECK(check_addition_theorem(loose).pass);
}

TEST_CASE("report strings") {
    CHECK(std::string(to_string(Comparison::AtMost)) == "<=");
    CHECK(std::string(to_string(Comparison::AtLeast)) == ">=");
    CHECK(std::string(to_string(Comparison::Above)) == ">");
    CHECK(prefactor_note().find("8 pi^3") != std::string::npos);
    CHECK(prefactor_note().find("8 pi^2") != std::string::npos);
}
