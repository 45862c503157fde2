#include "zerofield/potentials.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include "zerofield/specfun.hpp"

namespace zerofield {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr complex kI{0.0, 1.0};

// Z_m = H_m(kR) J_m(k rho) inside, J_m(kR) H_m(k rho) outside. Z_{-m} = Z_m,
// so the n = 0 case only ever needs order 1.
complex mode_product(int m, double k_radius, double k_rho, Region side) {
    const int order = std::abs(m);
    if (side == Region::Inside) {
        return specfun::hankel2(order, k_radius) * specfun::bessel_j(order, k_rho);
    }
    return specfun::bessel_j(order, k_radius) * specfun::hankel2(order, k_rho);
}

void require_dynamic(const SolenoidConfig& cfg, const char* who) {
    if (!(cfg.omega() > 0.0)) {
        throw std::domain_error(std::string(who) + ": requires omega > 0 (use potential_static)");
    }
}

}  // namespace

CylPoint::CylPoint(double rho, double alpha, double z) : rho_(rho), alpha_(alpha), z_(z) {
    if (!std::isfinite(rho) || rho < 0.0) {
        throw std::domain_error("CylPoint: rho must be finite and non-negative");
    }
    if (!std::isfinite(alpha) || !std::isfinite(z)) {
        throw std::domain_error("CylPoint: non-finite coordinate");
    }
    alpha_ = std::fmod(alpha, kTwoPi);
    if (alpha_ < 0.0) {
        alpha_ += kTwoPi;
    }
    if (alpha_ >= kTwoPi) {
        alpha_ = 0.0;
    }
}

const char* to_string(Region r) {
    switch (r) {
        case Region::Inside:
            return "inside";
        case Region::Outside:
            return "outside";
        case Region::OnWall:
            return "wall";
    }
    return "unknown";
}

Region region_of(double rho, double radius) {
    if (std::abs(rho - radius) <= kWallTolerance * radius) {
        return Region::OnWall;
    }
    return rho < radius ? Region::Inside : Region::Outside;
}

complex green(double k, const CylPoint& p, const CylPoint& p_src) {
    if (!(k > 0.0)) {
        throw std::domain_error("green: wavenumber must be positive");
    }
    const double d2 = p.rho() * p.rho() + p_src.rho() * p_src.rho() -
                      2.0 * p.rho() * p_src.rho() * std::cos(p.alpha() - p_src.alpha());
    const double d = std::sqrt(std::max(d2, 0.0));
    const double scale = std::max(p.rho(), p_src.rho());
    if (!(d > 1e-12 * scale)) {
        throw GreenSingularityError("green: field and source points coincide");
    }
    return -(kI * kPi / PhysicalConstants::c) * specfun::hankel2(0, k * d);
}

AdditionTheoremTerms addition_theorem(double k, double rho, double r_src, double dalpha, int m_max) {
    if (!(k > 0.0)) {
        throw std::domain_error("addition_theorem: wavenumber must be positive");
    }
    if (m_max < 0 || m_max > kMaxAdditionOrder) {
        throw std::invalid_argument("addition_theorem: truncation order outside [0, " +
                                    std::to_string(kMaxAdditionOrder) + "]");
    }
    if (!(rho >= 0.0) || !(r_src > 0.0) || rho == r_src) {
        throw std::domain_error("addition_theorem: need 0 <= rho != R_src");
    }
    const double d = std::sqrt(std::max(rho * rho + r_src * r_src - 2.0 * rho * r_src * std::cos(dalpha), 0.0));

    AdditionTheoremTerms out;
    out.direct = specfun::hankel2(0, k * d);
    const bool inner = rho < r_src;
    for (int m = -m_max; m <= m_max; ++m) {
        const complex weight = std::polar(1.0, -m * dalpha);
        const complex product = inner ? specfun::hankel2_signed(m, k * r_src) * specfun::bessel_j_signed(m, k * rho)
                                      : specfun::bessel_j_signed(m, k * r_src) * specfun::hankel2_signed(m, k * rho);
        out.truncated += weight * product;
    }
    return out;
}

complex azimuthal_prefactor(const SolenoidConfig& cfg) {
    return -kI * kPi * kPi * cfg.i0() * cfg.radius() / PhysicalConstants::c;
}

complex radial_prefactor(const SolenoidConfig& cfg) {
    return -kPi * kPi * cfg.i0() * cfg.radius() / PhysicalConstants::c;
}

PotentialPhasor potential_closed_form_side(const SolenoidConfig& cfg, const CylPoint& p, Region side) {
    require_dynamic(cfg, "potential_closed_form");
    if (side == Region::OnWall) {
        throw WallEvaluationError("potential_closed_form: choose Inside or Outside explicitly");
    }
    const int n = cfg.n_mode();
    const double k = cfg.wavenumber();
    const double k_radius = k * cfg.radius();
    const double k_rho = k * p.rho();

    const complex upper = mode_product(n + 1, k_radius, k_rho, side);
    const complex lower = mode_product(n - 1, k_radius, k_rho, side);
    const complex phase = std::polar(1.0, -n * p.alpha());

    PotentialPhasor out;
    out.region = side;
    out.a_alpha = azimuthal_prefactor(cfg) * phase * (upper + lower);
    out.a_rho = n == 0 ? complex{} : radial_prefactor(cfg) * phase * (upper - lower);
    return out;
}

PotentialPhasor potential_closed_form(const SolenoidConfig& cfg, const CylPoint& p) {
    const Region region = region_of(p.rho(), cfg.radius());
    if (region == Region::OnWall) {
        throw WallEvaluationError("potential_closed_form: point lies on the solenoid wall");
    }
    return potential_closed_form_side(cfg, p, region);
}

PotentialPhasor potential_quadrature_oracle(const SolenoidConfig& cfg, const CylPoint& p,
                                            const QuadratureOptions& opts) {
    require_dynamic(cfg, "potential_quadrature_oracle");
    const Region region = region_of(p.rho(), cfg.radius());
    if (region == Region::OnWall) {
        throw WallEvaluationError("potential_quadrature_oracle: point lies on the solenoid wall");
    }

    const double k = cfg.wavenumber();
    const double rho = p.rho();
    const double radius = cfg.radius();
    const double alpha = p.alpha();
    const int n = cfg.n_mode();
    const complex g_scale = -kI * kPi / PhysicalConstants::c;
    const double source_weight = cfg.i0() * radius;

    // beta = alpha - alpha'; the source ring R dalpha' carries I0 exp(-i n alpha').
    auto kernel = [=](double beta) {
        const double d = std::sqrt(rho * rho + radius * radius - 2.0 * rho * radius * std::cos(beta));
        return source_weight * std::polar(1.0, -n * (alpha - beta)) * g_scale * specfun::hankel2(0, k * d);
    };
    auto integrate = [&](auto&& f) {
        using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
        complex total{};
        for (const auto& [a, b] : {std::pair{-kPi, 0.0}, std::pair{0.0, kPi}}) {
            double err = 0.0;
            double l1 = 0.0;
            total += GK::integrate(f, a, b, opts.max_depth, opts.rel_tol, &err, &l1);
            if (!(err <= 10.0 * opts.rel_tol * l1) && err > 1e-300) {
                throw QuadratureError("potential_quadrature_oracle: error estimate " + std::to_string(err) +
                                      " exceeds tolerance after bisection budget");
            }
        }
        return total;
    };

    PotentialPhasor out;
    out.region = region;
    out.a_alpha = integrate([&](double beta) { return std::cos(beta) * kernel(beta); });
    out.a_rho = integrate([&](double beta) { return std::sin(beta) * kernel(beta); });
    return out;
}

PotentialPhasor potential_static(const SolenoidConfig& cfg, const CylPoint& p) {
    if (cfg.omega() != 0.0) {
        throw std::domain_error("potential_static: requires omega = 0");
    }
    if (cfg.n_mode() != 0) {
        throw std::domain_error("potential_static: only the unmodulated mode n = 0 has a static limit");
    }
    const double j_over_c = derived(cfg).j_total / PhysicalConstants::c;
    const double radius = cfg.radius();
    PotentialPhasor out;
    out.region = region_of(p.rho(), radius);
    switch (out.region) {
        case Region::Inside:
            out.a_alpha = j_over_c * p.rho() / radius;
            break;
        case Region::Outside:
            out.a_alpha = j_over_c * radius / p.rho();
            break;
        case Region::OnWall:
            out.a_alpha = j_over_c;
            break;
    }
    return out;
}

PotentialPhasor potential(const SolenoidConfig& cfg, const CylPoint& p) {
    return cfg.is_static() ? potential_static(cfg, p) : potential_closed_form(cfg, p);
}

}  // namespace zerofield
