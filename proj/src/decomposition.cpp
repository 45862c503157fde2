#include "zerofield/decomposition.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zerofield/specfun.hpp"

namespace zerofield {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr complex kI{0.0, 1.0};

void require_split_config(const SolenoidConfig& cfg, const char* who) {
    if (cfg.n_mode() != 0) {
        throw std::invalid_argument(std::string(who) + ": the field/zero-field split is defined for n = 0 only");
    }
    if (!(cfg.omega() > 0.0)) {
        throw std::domain_error(std::string(who) + ": requires omega > 0");
    }
}

// Q = -2 i pi^2 I0 R J_1(kR) / c
complex exterior_amplitude(const SolenoidConfig& cfg) {
    const double kr = cfg.wavenumber() * cfg.radius();
    return -2.0 * kI * kPi * kPi * cfg.i0() * cfg.radius() * specfun::bessel_j(1, kr) / PhysicalConstants::c;
}

// phi^0 per radian of azimuth outside: -(4 pi i I0 R / c) J_1(kR)
complex scalar_slope(const SolenoidConfig& cfg) {
    const double kr = cfg.wavenumber() * cfg.radius();
    return -4.0 * kPi * kI * cfg.i0() * cfg.radius() * specfun::bessel_j(1, kr) / PhysicalConstants::c;
}

complex zerofield_a_alpha(complex q, double k, double rho) {
    return q * 2.0 * kI / (kPi * k * rho);
}

template <typename F>
auto richardson_central(F&& f, double x, double h) {
    const auto coarse = (f(x + h) - f(x - h)) / (2.0 * h);
    const double half = 0.5 * h;
    const auto fine = (f(x + half) - f(x - half)) / (2.0 * half);
    return (4.0 * fine - coarse) / 3.0;
}

double radial_step(double rho, double h) {
    return h > 0.0 ? h : kRadialStepRel * rho;
}

void check_stencil(double rho, double h, double wall_radius) {
    if (!(rho - h > 0.0)) {
        throw StencilError("finite-difference stencil reaches the axis");
    }
    if (wall_radius > 0.0 && rho - h <= wall_radius && wall_radius <= rho + h) {
        throw StencilError("finite-difference stencil crosses the solenoid wall");
    }
}

}  // namespace

DecomposedPotential decompose_exterior(const SolenoidConfig& cfg, const CylPoint& p) {
    require_split_config(cfg, "decompose_exterior");
    if (region_of(p.rho(), cfg.radius()) != Region::Outside) {
        throw InteriorPointError("decompose_exterior: point is not outside the solenoid");
    }
    DecomposedPotential d;
    d.rho = p.rho();
    d.k = cfg.wavenumber();
    d.omega = cfg.omega();
    d.q = exterior_amplitude(cfg);
    d.w = 2.0 * kPi * cfg.i0() * cfg.radius() * specfun::bessel_j(1, d.k * cfg.radius()) / PhysicalConstants::c;

    const complex total_alpha = d.q * specfun::hankel2(1, d.k * d.rho);
    d.zerofield_part.region = Region::Outside;
    d.zerofield_part.a_alpha = zerofield_a_alpha(d.q, d.k, d.rho);
    d.zerofield_part.phi = scalar_zero_potential(cfg, p);

    d.field_part.region = Region::Outside;
    d.field_part.a_alpha = total_alpha - d.zerofield_part.a_alpha;

    d.total = d.field_part + d.zerofield_part;
    return d;
}

RealSplit real_parts(const DecomposedPotential& d, double t) {
    const double x = d.k * d.rho;
    const double wt = d.omega * t;
    const double c = std::cos(wt);
    const double s = std::sin(wt);
    RealSplit out;
    out.field = d.w * (kPi * specfun::bessel_j(1, x) * s - (2.0 / x + kPi * specfun::bessel_y(1, x)) * c);
    out.zerofield = d.w * (2.0 / x) * c;
    return out;
}

complex scalar_zero_potential(const SolenoidConfig& cfg, const CylPoint& p, int winding) {
    if (cfg.n_mode() != 0) {
        throw std::invalid_argument("scalar_zero_potential: defined for n = 0 only");
    }
    switch (region_of(p.rho(), cfg.radius())) {
        case Region::Inside:
            return {};
        case Region::OnWall:
            throw WallEvaluationError("scalar_zero_potential: point lies on the solenoid wall");
        case Region::Outside:
            break;
    }
    return scalar_slope(cfg) * (p.alpha() + 2.0 * kPi * winding);
}

complex GaugeFunction::circulation(int windings) const {
    return 2.0 * kPi * windings * chi_coefficient;
}

GaugeFunction gauge_function(const SolenoidConfig& cfg) {
    require_split_config(cfg, "gauge_function");
    const double k = cfg.wavenumber();
    GaugeFunction g;
    g.omega = cfg.omega();
    g.chi_coefficient = 4.0 * kPi * cfg.i0() * cfg.radius() * specfun::bessel_j(1, k * cfg.radius()) /
                        (PhysicalConstants::c * k);
    return g;
}

PotentialField zerofield_potential_field(const SolenoidConfig& cfg) {
    require_split_config(cfg, "zerofield_potential_field");
    const complex q = exterior_amplitude(cfg);
    const complex slope = scalar_slope(cfg);
    const double k = cfg.wavenumber();
    const double radius = cfg.radius();
    return [=](double rho, double alpha) {
        PotentialPhasor out;
        out.region = region_of(rho, radius);
        if (out.region == Region::Outside) {
            out.a_alpha = zerofield_a_alpha(q, k, rho);
            out.phi = slope * alpha;
        }
        return out;
    };
}

PotentialField field_potential_field(const SolenoidConfig& cfg) {
    require_split_config(cfg, "field_potential_field");
    const complex q = exterior_amplitude(cfg);
    const double k = cfg.wavenumber();
    const double radius = cfg.radius();
    return [=](double rho, double alpha) {
        if (region_of(rho, radius) != Region::Outside) {
            return potential_closed_form(cfg, CylPoint(rho, alpha));
        }
        PotentialPhasor out;
        out.region = Region::Outside;
        out.a_alpha = q * specfun::hankel2(1, k * rho) - zerofield_a_alpha(q, k, rho);
        return out;
    };
}

PotentialField total_exterior_potential_field(const SolenoidConfig& cfg) {
    require_split_config(cfg, "total_exterior_potential_field");
    const complex slope = scalar_slope(cfg);
    const double radius = cfg.radius();
    return [=](double rho, double alpha) {
        PotentialPhasor out = potential_closed_form(cfg, CylPoint(rho, alpha));
        if (region_of(rho, radius) == Region::Outside) {
            out.phi = slope * alpha;
        }
        return out;
    };
}

complex curl_z_fd(const std::function<complex(double)>& a_alpha, double rho, double wall_radius, double h) {
    h = radial_step(rho, h);
    check_stencil(rho, h, wall_radius);
    const auto rho_a = [&](double r) { return r * a_alpha(r); };
    return richardson_central(rho_a, rho, h) / rho;
}

complex curl_z_planar_fd(const PotentialField& field, double rho, double alpha, double wall_radius, double h) {
    h = radial_step(rho, h);
    check_stencil(rho, h, wall_radius);
    const auto rho_a = [&](double r) { return r * field(r, alpha).a_alpha; };
    const auto a_rho = [&](double a) { return field(rho, a).a_rho; };
    return (richardson_central(rho_a, rho, h) - richardson_central(a_rho, alpha, kAngularStep)) / rho;
}

RealFieldSample e_field_fd(const PotentialField& field, const SpacetimePoint& at, double omega,
                           double wall_radius) {
    const double rho = at.rho;
    const double h = radial_step(rho, 0.0);
    check_stencil(rho, h, wall_radius);

    const complex rotor = std::polar(1.0, omega * at.t);
    const complex time_factor = -kI * (omega / PhysicalConstants::c);
    const PotentialPhasor here = field(rho, at.alpha);

    const auto phi_rho = [&](double r) { return (field(r, at.alpha).phi * rotor).real(); };
    const auto phi_alpha = [&](double a) { return (field(rho, a).phi * rotor).real(); };

    RealFieldSample out;
    out.at = at;
    out.e_rho = (time_factor * here.a_rho * rotor).real() - richardson_central(phi_rho, rho, h);
    out.e_alpha = (time_factor * here.a_alpha * rotor).real() - richardson_central(phi_alpha, at.alpha, kAngularStep) / rho;
    out.b_z = (curl_z_planar_fd(field, rho, at.alpha, wall_radius) * rotor).real();
    return out;
}

Circulation polyline_circulation(const PotentialField& field, const std::vector<CylPoint>& contour) {
    if (contour.size() < 3) {
        throw std::invalid_argument("polyline_circulation: a closed contour needs at least 3 vertices");
    }
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    Circulation out;
    for (std::size_t i = 0; i < contour.size(); ++i) {
        const CylPoint& p0 = contour[i];
        const CylPoint& p1 = contour[(i + 1) % contour.size()];
        const double x0 = p0.rho() * std::cos(p0.alpha());
        const double y0 = p0.rho() * std::sin(p0.alpha());
        const double dx = p1.rho() * std::cos(p1.alpha()) - x0;
        const double dy = p1.rho() * std::sin(p1.alpha()) - y0;
        auto integrand = [&](double s) {
            const double x = x0 + s * dx;
            const double y = y0 + s * dy;
            const double rho = std::hypot(x, y);
            const double alpha = std::atan2(y, x);
            const PotentialPhasor a = field(rho, alpha);
            const double c = std::cos(alpha);
            const double sn = std::sin(alpha);
            const complex ax = a.a_rho * c - a.a_alpha * sn;
            const complex ay = a.a_rho * sn + a.a_alpha * c;
            return ax * dx + ay * dy;
        };
        double err = 0.0;
        double l1 = 0.0;
        out.value += GK::integrate(integrand, 0.0, 1.0, 20, 1e-13, &err, &l1);
        out.l1 += l1;
    }
    return out;
}

GaugeCheckResult gauge_equivalence_check(const PotentialField& a, const PotentialField& a_prime,
                                         const std::vector<CylPoint>& contour, double wall_radius,
                                         double rel_tol) {
    GaugeCheckResult out;
    for (const CylPoint& p : contour) {
        if (region_of(p.rho(), wall_radius) == Region::OnWall) {
            throw WallEvaluationError("gauge_equivalence_check: contour vertex on the wall");
        }
        const complex curl_a = curl_z_planar_fd(a, p.rho(), p.alpha(), wall_radius);
        const complex curl_b = curl_z_planar_fd(a_prime, p.rho(), p.alpha(), wall_radius);
        const PotentialPhasor va = a(p.rho(), p.alpha());
        const PotentialPhasor vb = a_prime(p.rho(), p.alpha());
        const double magnitude_a = std::hypot(std::abs(va.a_rho), std::abs(va.a_alpha)) / p.rho();
        const double magnitude_b = std::hypot(std::abs(vb.a_rho), std::abs(vb.a_alpha)) / p.rho();
        const double scale = std::max({std::abs(curl_a), std::abs(curl_b), magnitude_a, magnitude_b});
        const double residual = scale > 0.0 ? std::abs(curl_a - curl_b) / scale : 0.0;
        out.max_curl_residual = std::max(out.max_curl_residual, residual);
    }
    out.local_ok = out.max_curl_residual <= rel_tol;

    const Circulation ca = polyline_circulation(a, contour);
    const Circulation cb = polyline_circulation(a_prime, contour);
    out.circulation_a = ca.value;
    out.circulation_a_prime = cb.value;
    const double scale = std::max(ca.l1, cb.l1);
    out.circulation_residual = scale > 0.0 ? std::abs(ca.value - cb.value) / scale : 0.0;
    out.global_ok = out.circulation_residual <= rel_tol;
    return out;
}

}  // namespace zerofield
