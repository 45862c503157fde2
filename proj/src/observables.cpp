#include "zerofield/observables.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include "zerofield/decomposition.hpp"
#include "zerofield/specfun.hpp"

namespace zerofield {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr complex kI{0.0, 1.0};

void require_unmodulated(const SolenoidConfig& cfg, const char* who) {
    if (cfg.n_mode() != 0) {
        throw std::invalid_argument(std::string(who) + ": defined for n = 0 only");
    }
}

PotentialField static_exterior_field(const SolenoidConfig& cfg, PotentialPart part) {
    // The static exterior potential is pure zero-field.
    return [cfg, part](double rho, double alpha) {
        PotentialPhasor out = potential_static(cfg, CylPoint(rho, alpha));
        if (part == PotentialPart::Field && out.region == Region::Outside) {
            out.a_alpha = 0.0;
        }
        return out;
    };
}

PotentialField part_field(const SolenoidConfig& cfg, PotentialPart part) {
    if (cfg.is_static()) {
        return static_exterior_field(cfg, part);
    }
    switch (part) {
        case PotentialPart::ZeroField:
            return zerofield_potential_field(cfg);
        case PotentialPart::Field:
            return field_potential_field(cfg);
        case PotentialPart::Total:
            return total_exterior_potential_field(cfg);
    }
    throw std::logic_error("unknown potential part");
}

bool nearly_integer(double v, double tol) {
    return std::abs(v - std::round(v)) <= tol;
}

double loop_trapezoid(const PotentialField& field, const Worldline& path, double omega, double wall_radius,
                      int samples, double& l1) {
    struct Sample {
        SpacetimePoint at;
        double a_rho;
        double rho_a_alpha;
        double phi;
    };
    auto sample = [&](double s) {
        const SpacetimePoint at = path(s);
        if (region_of(at.rho, wall_radius) == Region::OnWall) {
            throw WallEvaluationError("spacetime_loop_integral: path touches the solenoid wall");
        }
        const PotentialPhasor p = field(at.rho, at.alpha);
        const double phase = omega * at.t;
        return Sample{at, real_at_phase(p.a_rho, phase), at.rho * real_at_phase(p.a_alpha, phase),
                      real_at_phase(p.phi, phase)};
    };

    double sum = 0.0;
    l1 = 0.0;
    Sample prev = sample(0.0);
    for (int i = 1; i <= samples; ++i) {
        const Sample cur = sample(static_cast<double>(i) / samples);
        const double piece = 0.5 * (prev.a_rho + cur.a_rho) * (cur.at.rho - prev.at.rho) +
                             0.5 * (prev.rho_a_alpha + cur.rho_a_alpha) * (cur.at.alpha - prev.at.alpha) -
                             PhysicalConstants::c * 0.5 * (prev.phi + cur.phi) * (cur.at.t - prev.at.t);
        sum += piece;
        l1 += std::abs(piece);
        prev = cur;
    }
    return sum;
}

}  // namespace

FluxResult flux(const SolenoidConfig& cfg) {
    require_unmodulated(cfg, "flux");
    const double radius = cfg.radius();
    const double i0 = cfg.i0();
    constexpr double c = PhysicalConstants::c;
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

    FluxResult out;
    if (cfg.is_static()) {
        const double b_inside = 4.0 * kPi * i0 / c;
        out.closed_form = 4.0 * kPi * kPi * radius * radius * i0 / c;
        out.quadrature = 2.0 * kPi * GK::integrate([&](double rho) { return b_inside * rho; }, 0.0, radius, 15, 1e-14);
        out.stokes = 2.0 * kPi * radius * potential_static(cfg, CylPoint(radius, 0.0)).a_alpha;
        return out;
    }

    const double k = cfg.wavenumber();
    const double kr = k * radius;
    out.closed_form = -(4.0 * kI * kPi * kPi * kPi * radius * radius * i0 / c) * specfun::bessel_j(1, kr) *
                      specfun::hankel2(1, kr);
    out.stokes = 2.0 * kPi * radius * potential_closed_form_side(cfg, CylPoint(radius, 0.0), Region::Inside).a_alpha;

    // Inside, A_alpha = K J_1(k rho) and (1/rho) d(rho J_1(k rho))/d rho = k J_0(k rho).
    const complex amplitude = -2.0 * kI * kPi * kPi * i0 * radius * specfun::hankel2(1, kr) / c;
    auto b_z_rho = [&](double rho) { return k * specfun::bessel_j(0, k * rho) * rho; };
    double err = 0.0;
    const double radial = GK::integrate(b_z_rho, 0.0, radius, 20, 1e-14, &err);
    out.quadrature = 2.0 * kPi * amplitude * radial;
    return out;
}

CirculationResult cyclic_constant(const SolenoidConfig& cfg, double contour_radius) {
    require_unmodulated(cfg, "cyclic_constant");
    if (region_of(contour_radius, cfg.radius()) != Region::Outside) {
        throw InteriorPointError("cyclic_constant: contour must enclose the solenoid (radius > R)");
    }
    const double radius = cfg.radius();
    const double i0 = cfg.i0();
    constexpr double c = PhysicalConstants::c;

    CirculationResult out;
    out.contour_radius = contour_radius;
    if (cfg.is_static()) {
        out.closed_form = 4.0 * kPi * kPi * radius * radius * i0 / c;
        out.as_printed = 4.0 * kPi * kPi * kPi * radius * radius * i0 / c;
        out.contour_integral =
            2.0 * kPi * contour_radius * potential_static(cfg, CylPoint(contour_radius, 0.0)).a_alpha.real();
        return out;
    }
    const double k = cfg.wavenumber();
    const double j1 = specfun::bessel_j(1, k * radius);
    out.closed_form = 8.0 * kPi * kPi * i0 * radius * j1 / (c * k);
    out.as_printed = 8.0 * kPi * kPi * kPi * i0 * radius * j1 / (c * k);
    const DecomposedPotential d = decompose_exterior(cfg, CylPoint(contour_radius, 0.0));
    out.contour_integral = 2.0 * kPi * contour_radius * d.zerofield_part.a_alpha.real();
    return out;
}

LoopIntegral spacetime_loop_integral(const SolenoidConfig& cfg, const Worldline& path, const LoopOptions& opts) {
    require_unmodulated(cfg, "spacetime_loop_integral");
    if (opts.initial_samples < 64) {
        throw std::invalid_argument("spacetime_loop_integral: at least 64 samples are required");
    }

    const SpacetimePoint start = path(0.0);
    const SpacetimePoint end = path(1.0);
    constexpr double kClose = 1e-9;
    bool closed = std::abs(start.rho - end.rho) <= kClose * std::max(start.rho, 1e-300) &&
                  std::abs(start.z - end.z) <= kClose * std::max(1.0, std::abs(start.z)) &&
                  nearly_integer((end.alpha - start.alpha) / (2.0 * kPi), kClose);
    if (cfg.omega() > 0.0) {
        closed = closed && nearly_integer((end.t - start.t) * cfg.omega() / (2.0 * kPi), kClose);
    }
    if (!closed) {
        throw std::invalid_argument("spacetime_loop_integral: worldline is not closed");
    }

    const PotentialField field = part_field(cfg, opts.part);
    LoopIntegral out;
    double l1 = 0.0;
    int n = opts.initial_samples;
    double previous = loop_trapezoid(field, path, cfg.omega(), cfg.radius(), n, l1);
    while (n < opts.max_samples) {
        n *= 2;
        const double current = loop_trapezoid(field, path, cfg.omega(), cfg.radius(), n, l1);
        const double change = std::abs(current - previous);
        if (change <= opts.rel_tol * std::max(std::abs(current), l1)) {
            out.value = current;
            out.samples = n;
            out.change = change;
            return out;
        }
        previous = current;
    }
    throw ConvergenceError("spacetime_loop_integral: no convergence within " + std::to_string(opts.max_samples) +
                           " samples");
}

double s_parameter(const SolenoidConfig& cfg) {
    require_unmodulated(cfg, "s_parameter");
    const double mu0 = derived(cfg).mu0;
    const double radius = cfg.radius();
    constexpr double kPi3 = kPi * kPi * kPi;
    if (cfg.is_static()) {
        return 8.0 * kPi3 * cfg.i0() * radius * radius / (mu0 * PhysicalConstants::c);
    }
    const double j1 = specfun::bessel_j(1, cfg.wavenumber() * radius);
    return 16.0 * kPi3 * cfg.i0() * radius * j1 / (mu0 * cfg.omega());
}

InterferenceResult interference_from_s(double s_param, int samples) {
    if (samples < 1) {
        throw std::invalid_argument("interference: need at least one phase sample");
    }
    InterferenceResult out;
    out.s_param = s_param;
    const double j0 = specfun::bessel_j(0, std::abs(s_param));
    out.contrast = std::abs(j0);
    out.intensity_profile.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double phase = 2.0 * kPi * i / samples;
        out.intensity_profile.emplace_back(phase, 0.5 * (1.0 + j0 * std::cos(phase)));
    }
    return out;
}

InterferenceResult interference(const SolenoidConfig& cfg, int samples) {
    return interference_from_s(s_parameter(cfg), samples);
}

double contrast_zero_search(const SolenoidConfig& tmpl, SearchParameter vary, double lower, double upper) {
    if (!(lower < upper)) {
        throw std::invalid_argument("contrast_zero_search: need lower < upper");
    }
    const double target = specfun::bessel_j0_first_zero();
    auto residual = [&](double v) {
        const SolenoidConfig cfg = vary == SearchParameter::CurrentAmplitude ? tmpl.with_i0(v) : tmpl.with_radius(v);
        return s_parameter(cfg) - target;
    };
    double lo = lower;
    double hi = upper;
    double f_lo = residual(lo);
    const double f_hi = residual(hi);
    if (f_lo == 0.0) {
        return lo;
    }
    if (f_hi == 0.0) {
        return hi;
    }
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw NoBracketError("contrast_zero_search: S - j01 has the same sign at both ends of the bracket");
    }
    while (hi - lo > 1e-15 * std::abs(hi)) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double f_mid = residual(mid);
        if (f_mid == 0.0) {
            return mid;
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace zerofield
