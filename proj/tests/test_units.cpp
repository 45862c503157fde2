#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "zerofield/units.hpp"

using namespace zerofield;

TEST_CASE("constructor enforces the parameter invariants") {
    CHECK_NOTHROW(SolenoidConfig(1.0, 1.0, 0.0, 0));
    CHECK_NOTHROW(SolenoidConfig(0.0, 1.0, 1.0, kMaxMode));
    CHECK_THROWS_AS(SolenoidConfig(-1.0, 1.0, 1.0, 0), ConfigError);
    CHECK_THROWS_AS(SolenoidConfig(1.0, 0.0, 1.0, 0), ConfigError);
    CHECK_THROWS_AS(SolenoidConfig(1.0, -2.0, 1.0, 0), ConfigError);
    CHECK_THROWS_AS(SolenoidConfig(1.0, 1.0, -1.0, 0), ConfigError);
    CHECK_THROWS_AS(SolenoidConfig(1.0, 1.0, 1.0, -1), ConfigError);
    CHECK_THROWS_AS(SolenoidConfig(1.0, 1.0, 1.0, kMaxMode + 1), ConfigError);
    CHECK_THROWS_AS(SolenoidConfig(NAN, 1.0, 1.0, 0), ConfigError);
    CHECK_THROWS_AS(SolenoidConfig(1.0, INFINITY, 1.0, 0), ConfigError);
}

TEST_CASE("derived quantities") {
    const SolenoidConfig cfg(3.0, 2.0, 5.0 * PhysicalConstants::c, 0);
    const DerivedQuantities d = derived(cfg);
    CHECK(d.k == doctest::Approx(5.0));
    CHECK(d.j_total == doctest::Approx(2.0 * std::numbers::pi * 2.0 * 3.0));
    // c h / e in gauss cm^2
    CHECK(d.mu0 == doctest::Approx(4.135667696e-7).epsilon(1e-9));
    CHECK(cfg.wavenumber() * cfg.radius() == doctest::Approx(10.0));
    CHECK_FALSE(cfg.is_static());
    CHECK(cfg.with_omega(0.0).is_static());
}

TEST_CASE("SI ingestion") {
    const SolenoidConfig cfg = from_si(158.0, 5.0, 1e9, 0);
    // 1 mA = 2.99792458e6 statA
    CHECK(cfg.i0() == doctest::Approx(158.0 * 2.99792458e6).epsilon(1e-15));
    CHECK(cfg.radius() == doctest::Approx(5e-4).epsilon(1e-15));
    CHECK(cfg.omega() == doctest::Approx(2.0 * std::numbers::pi * 1e9).epsilon(1e-15));
    CHECK_THROWS_AS(from_si(-1.0, 5.0, 1e9, 0), ConfigError);
    CHECK_THROWS_AS(from_si(1.0, 0.0, 1e9, 0), ConfigError);
    CHECK_THROWS_AS(from_si(1.0, 5.0, NAN, 0), ConfigError);
}

TEST_CASE("property: SI round trip") {
    for (double i0 : {0.0, 1e-3, 158.0, 4e4}) {
        for (double r : {0.1, 5.0, 1e4}) {
            for (double f : {0.0, 1e6, 1e9, 3e12}) {
                const SiParameters back = to_si(from_si(i0, r, f, 2));
                CHECK(back.i0_mA_per_cm == doctest::Approx(i0).epsilon(1e-14));
                CHECK(back.radius_um == doctest::Approx(r).epsilon(1e-14));
                CHECK(back.freq_hz == doctest::Approx(f).epsilon(1e-14));
                CHECK(back.n_mode == 2);
            }
        }
    }
}

TEST_CASE("with_* copies validate") {
    const SolenoidConfig cfg(1.0, 1.0, 1.0, 0);
    CHECK(cfg.with_i0(2.0).i0() == 2.0);
    CHECK(cfg.with_radius(3.0).radius() == 3.0);
    CHECK(cfg.with_mode(4).n_mode() == 4);
    CHECK_THROWS_AS(cfg.with_radius(-1.0), ConfigError);
}

TEST_CASE("config file parsing") {
    std::istringstream in(
        "# example\n"
        "i0_mA_per_cm = 158   # surface current\n"
        "\n"
        "radius_um=5\n"
        "  freq_hz = 1e9\n"
        "n_mode = 1\n");
    const ConfigFileValues v = parse_config(in);
    CHECK(*v.i0_mA_per_cm == 158.0);
    CHECK(*v.radius_um == 5.0);
    CHECK(*v.freq_hz == 1e9);
    CHECK(*v.n_mode == 1);

    std::istringstream partial("radius_um = 2.5\n");
    const ConfigFileValues p = parse_config(partial);
    CHECK_FALSE(p.i0_mA_per_cm.has_value());
    CHECK(*p.radius_um == 2.5);
}

TEST_CASE("config file errors") {
    std::istringstream unknown("colour = blue\n");
    CHECK_THROWS_AS(parse_config(unknown), ConfigError);
    std::istringstream malformed("radius_um = 5um\n");
    CHECK_THROWS_AS(parse_config(malformed), ConfigError);
    std::istringstream no_equals("radius_um 5\n");
    CHECK_THROWS_AS(parse_config(no_equals), ConfigError);
    std::istringstream fractional_mode("n_mode = 1.5\n");
    CHECK_THROWS_AS(parse_config(fractional_mode), ConfigError);
    CHECK_THROWS_AS(load_config_file("/nonexistent/zerofield.cfg"), std::ios_base::failure);
}
