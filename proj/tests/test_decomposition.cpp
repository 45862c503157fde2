#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "zerofield/decomposition.hpp"

using namespace zerofield;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kR = 5e-4;
constexpr double kI0 = 4.7e8;
const complex kI{0.0, 1.0};

SolenoidConfig config_for_kr(double kr) {
    return SolenoidConfig(kI0, kR, kr / kR * PhysicalConstants::c, 0);
}

double lib_j1(double x) {
    return boost::math::cyl_bessel_j(1, x);
}

complex lib_h2(int n, double x) {
    return {boost::math::cyl_bessel_j(n, x), -boost::math::cyl_neumann(n, x)};
}

std::vector<CylPoint> polygon(double radius, int sides, double offset = 0.1) {
    std::vector<CylPoint> pts;
    for (int i = 0; i < sides; ++i) {
        pts.emplace_back(radius, 2.0 * kPi * i / sides + offset);
    }
    return pts;
}

}  // namespace

TEST_CASE("exterior amplitudes") {
    const SolenoidConfig cfg = config_for_kr(0.7);
    const DecomposedPotential d = decompose_exterior(cfg, CylPoint(2.0 * kR, 0.0));
    const double j1 = lib_j1(0.7);
    const complex q = -2.0 * kI * kPi * kPi * kI0 * kR * j1 / PhysicalConstants::c;
    CHECK(std::abs(d.q - q) < 1e-13 * std::abs(q));
    CHECK(d.w == doctest::Approx(2.0 * kPi * kI0 * kR * j1 / PhysicalConstants::c).epsilon(1e-13));
    CHECK(std::abs(d.q - (-kI * kPi * d.w)) < 1e-14 * std::abs(q));
}

TEST_CASE("zero-field part is the 2i/(pi k rho) term of Q H(2)_1") {
    const SolenoidConfig cfg = config_for_kr(0.7);
    for (double ratio : {1.5, 3.0, 20.0}) {
        const DecomposedPotential d = decompose_exterior(cfg, CylPoint(ratio * kR, 0.0));
        const double x = d.k * d.rho;
        const complex expected_zero = d.q * 2.0 * kI / (kPi * x);
        CHECK(std::abs(d.zerofield_part.a_alpha - expected_zero) < 1e-14 * std::abs(expected_zero));
        // Q * 2i/(pi x) = 2 W / x is real.
        CHECK(std::abs(d.zerofield_part.a_alpha.imag()) < 1e-14 * std::abs(d.zerofield_part.a_alpha));
        const complex total = d.q * lib_h2(1, x);
        CHECK(std::abs(d.total.a_alpha - total) < 1e-12 * std::abs(total));
        CHECK(std::abs(d.field_part.a_alpha + d.zerofield_part.a_alpha - d.total.a_alpha) == 0.0);
    }
}

TEST_CASE("property: field + zero-field reconstructs the closed form") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> log_kr(std::log(1e-3), std::log(5.0));
    std::uniform_real_distribution<double> ratio(1.01, 50.0);
    for (int trial = 0; trial < 200; ++trial) {
        const SolenoidConfig cfg = config_for_kr(std::exp(log_kr(rng)));
        const CylPoint p(ratio(rng) * kR, 1.0);
        const DecomposedPotential d = decompose_exterior(cfg, p);
        const complex closed = potential_closed_form(cfg, p).a_alpha;
        REQUIRE(std::abs(d.total.a_alpha - closed) <= 1e-14 * std::abs(closed));
    }
}

TEST_CASE("real sine/cosine forms equal Re[phasor e^{iwt}]") {
    const SolenoidConfig cfg = config_for_kr(1.1);
    for (double ratio : {1.2, 2.0, 7.0}) {
        const DecomposedPotential d = decompose_exterior(cfg, CylPoint(ratio * kR, 0.0));
        for (int j = 0; j < 16; ++j) {
            const double phase = 2.0 * kPi * j / 16.0;
            const RealSplit s = real_parts(d, phase / cfg.omega());
            const double scale = std::abs(d.total.a_alpha);
            CHECK(std::abs(s.field - real_at_phase(d.field_part.a_alpha, phase)) < 1e-12 * scale);
            CHECK(std::abs(s.zerofield - real_at_phase(d.zerofield_part.a_alpha, phase)) < 1e-12 * scale);
        }
    }
    // cos(wt) = 0 kills the zero-field part
    const DecomposedPotential d = decompose_exterior(cfg, CylPoint(3.0 * kR, 0.0));
    CHECK(std::abs(real_parts(d, 0.5 * kPi / cfg.omega()).zerofield) < 1e-15 * std::abs(d.total.a_alpha));
}

TEST_CASE("zero-field vector potential is curl-free") {
    for (double kr : {0.1, 0.7, 2.0}) {
        const SolenoidConfig cfg = config_for_kr(kr);
        const PotentialField zero = zerofield_potential_field(cfg);
        const double scale = std::abs(decompose_exterior(cfg, CylPoint(2.0 * kR, 0.0)).q) * cfg.wavenumber();
        for (double ratio : {1.5, 3.0, 10.0}) {
            const double rho = ratio * kR;
            const complex curl = curl_z_fd([&](double r) { return zero(r, 0.0).a_alpha; }, rho, kR);
            // rounding floor of the h = 1e-5 rho stencil relative to |A^0| / rho
            const double floor = 1e-10 * std::abs(zero(rho, 0.0).a_alpha) / rho;
            INFO("kR = " << kr << ", rho/R = " << ratio);
            CHECK(std::abs(curl) < std::max(1e-9 * scale, floor));
        }
    }
}

TEST_CASE("field part carries the whole magnetic field Q k H(2)_0(k rho)") {
    const SolenoidConfig cfg = config_for_kr(0.5);
    const PotentialField field = field_potential_field(cfg);
    const complex q = decompose_exterior(cfg, CylPoint(2.0 * kR, 0.0)).q;
    const double k = cfg.wavenumber();
    for (double k_rho : {0.6, 1.0, 2.0, 3.0}) {
        const double rho = k_rho / k;
        const complex curl = curl_z_fd([&](double r) { return field(r, 0.0).a_alpha; }, rho, kR);
        const complex expected = q * k * lib_h2(0, k_rho);
        CHECK(std::abs(curl - expected) < 1e-7 * std::abs(expected));
        CHECK(std::abs(curl) > 1e-8 * std::abs(q) * k);
    }
}

TEST_CASE("zero-field pair produces no electric field") {
    const SolenoidConfig cfg = config_for_kr(0.7);
    const PotentialField zero = zerofield_potential_field(cfg);
    const double period = 2.0 * kPi / cfg.omega();
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ratio(1.2, 20.0);
    std::uniform_real_distribution<double> angle(-7.0, 7.0);
    std::uniform_real_distribution<double> time(0.0, period);
    for (int trial = 0; trial < 50; ++trial) {
        const double rho = ratio(rng) * kR;
        const RealFieldSample e = e_field_fd(zero, SpacetimePoint{rho, angle(rng), 0.0, time(rng)}, cfg.omega(), kR);
        const double scale = cfg.wavenumber() * std::abs(zero(rho, 0.0).a_alpha);
        REQUIRE(std::abs(e.e_rho) <= 1e-10 * scale);
        REQUIRE(std::abs(e.e_alpha) <= 1e-10 * scale);
        REQUIRE(std::abs(e.b_z) <= 1e-8 * scale);
    }
}

TEST_CASE("the field part alone has a nonzero electric field") {
    const SolenoidConfig cfg = config_for_kr(0.7);
    const PotentialField field = field_potential_field(cfg);
    const RealFieldSample e = e_field_fd(field, SpacetimePoint{3.0 * kR, 0.0, 0.0, 0.0}, cfg.omega(), kR);
    const double scale = cfg.wavenumber() * std::abs(field(3.0 * kR, 0.0).a_alpha);
    CHECK(std::abs(e.e_alpha) > 0.1 * scale);
}

TEST_CASE("scalar zero potential") {
    const SolenoidConfig cfg = config_for_kr(0.7);
    const complex slope = -4.0 * kPi * kI * kI0 * kR * lib_j1(0.7) / PhysicalConstants::c;
    CHECK(std::abs(scalar_zero_potential(cfg, CylPoint(2.0 * kR, 1.0)) - slope) < 1e-13 * std::abs(slope));
    CHECK(std::abs(scalar_zero_potential(cfg, CylPoint(2.0 * kR, 1.0), 2) - slope * (1.0 + 4.0 * kPi)) <
          1e-13 * std::abs(slope) * 14.0);
    CHECK(scalar_zero_potential(cfg, CylPoint(0.5 * kR, 1.0)) == complex{});
    CHECK_THROWS_AS(scalar_zero_potential(cfg, CylPoint(kR, 1.0)), WallEvaluationError);
}

TEST_CASE("gauge function generates the zero-field pair") {
    const SolenoidConfig cfg = config_for_kr(0.7);
    const GaugeFunction chi = gauge_function(cfg);
    const double k = cfg.wavenumber();
    CHECK(chi.chi_coefficient.real() ==
          doctest::Approx(4.0 * kPi * kI0 * kR * lib_j1(0.7) / (PhysicalConstants::c * k)).epsilon(1e-13));
    const PotentialField zero = zerofield_potential_field(cfg);
    for (double ratio : {1.5, 4.0}) {
        const double rho = ratio * kR;
        const PotentialPhasor z = zero(rho, 2.0);
        CHECK(std::abs(chi.a_alpha(rho) - z.a_alpha) < 1e-13 * std::abs(z.a_alpha));
        CHECK(std::abs(chi.phi(2.0) - z.phi) < 1e-13 * std::abs(z.phi));
    }
    CHECK(std::abs(chi.circulation(1) - 2.0 * kPi * chi.chi_coefficient) == 0.0);
    CHECK(std::abs(chi.circulation(3) - 3.0 * chi.circulation(1)) < 1e-15 * std::abs(chi.circulation(3)));
}

TEST_CASE("circulation of the zero-field potential does not depend on the contour") {
    const SolenoidConfig cfg = config_for_kr(0.7);
    const PotentialField zero = zerofield_potential_field(cfg);
    const complex expected = gauge_function(cfg).circulation(1);
    for (double radius : {1.5 * kR, 4.0 * kR, 30.0 * kR}) {
        for (int sides : {5, 8, 13}) {
            const Circulation c = polyline_circulation(zero, polygon(radius, sides));
            CHECK(std::abs(c.value - expected) < 1e-12 * std::abs(expected));
        }
    }
    // A contour that does not enclose the solenoid sees nothing.
    const std::vector<CylPoint> off_axis{CylPoint(3.0 * kR, 0.0), CylPoint(5.0 * kR, 0.1), CylPoint(4.0 * kR, 0.4)};
    CHECK(std::abs(polyline_circulation(zero, off_axis).value) < 1e-12 * std::abs(expected));
}

TEST_CASE("gauge equivalence: single-valued vs multivalued gauge functions") {
    const SolenoidConfig cfg = config_for_kr(0.7);
    const PotentialField a = total_exterior_potential_field(cfg);
    const std::vector<CylPoint> contour = polygon(3.0 * kR, 8);

    // grad(lambda sin alpha) = (0, lambda cos(alpha) / rho)
    const complex lambda = a(3.0 * kR, 0.0).a_alpha * (3.0 * kR);
    const PotentialField single = [=](double rho, double alpha) {
        PotentialPhasor p = a(rho, alpha);
        p.a_alpha += lambda * std::cos(alpha) / rho;
        return p;
    };
    const GaugeCheckResult g1 = gauge_equivalence_check(a, single, contour, kR);
    CHECK(g1.local_ok);
    CHECK(g1.global_ok);

    const GaugeFunction chi = gauge_function(cfg);
    const PotentialField multi = [=](double rho, double alpha) {
        PotentialPhasor p = a(rho, alpha);
        p.a_alpha += chi.a_alpha(rho);
        return p;
    };
    const GaugeCheckResult g2 = gauge_equivalence_check(a, multi, contour, kR);
    CHECK(g2.local_ok);
    CHECK_FALSE(g2.global_ok);
    const complex jump = g2.circulation_a_prime - g2.circulation_a;
    CHECK(std::abs(jump - chi.circulation(1)) < 1e-10 * std::abs(chi.circulation(1)));
}

TEST_CASE("split preconditions") {
    const SolenoidConfig cfg = config_for_kr(0.7);
    CHECK_THROWS_AS(decompose_exterior(cfg, CylPoint(0.5 * kR, 0.0)), InteriorPointError);
    CHECK_THROWS_AS(decompose_exterior(cfg, CylPoint(kR, 0.0)), InteriorPointError);
    CHECK_THROWS_AS(decompose_exterior(cfg.with_mode(1), CylPoint(2.0 * kR, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(decompose_exterior(cfg.with_omega(0.0), CylPoint(2.0 * kR, 0.0)), std::domain_error);
    CHECK_THROWS_AS(gauge_function(cfg.with_omega(0.0)), std::domain_error);
}

TEST_CASE("stencils may not cross the wall or the axis") {
    const auto f = [](double r) { return complex(1.0 / r, 0.0); };
    CHECK_THROWS_AS(curl_z_fd(f, kR * (1.0 + 1e-7), kR), StencilError);
    CHECK_THROWS_AS(curl_z_fd(f, 1e-6, 0.0, 2e-6), StencilError);
    CHECK_NOTHROW(curl_z_fd(f, 2.0 * kR, kR));
    // 1/rho is curl-free
    CHECK(std::abs(curl_z_fd(f, 2.0, 0.0)) < 1e-9);
}
