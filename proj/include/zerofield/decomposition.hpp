#pragma once

// Field / zero-field split of the exterior n = 0 potential.
//
// Outside the solenoid A_alpha = Q H(2)_1(k rho) with
// Q = -2 i pi^2 I0 R J_1(kR) / c. The 2i/(pi k rho) term of the small-argument
// expansion is curl-free and, together with a scalar potential linear in
// alpha, produces no E or B at all. That pair is the zero-field part; the
// remainder carries the fields. Inside the solenoid the zero-field part is 0.

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "zerofield/potentials.hpp"
#include "zerofield/units.hpp"

namespace zerofield {

class InteriorPointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class StencilError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct DecomposedPotential {
    PotentialPhasor field_part;
    PotentialPhasor zerofield_part;
    PotentialPhasor total;  ///< field_part + zerofield_part

    double rho = 0.0;
    double k = 0.0;
    double omega = 0.0;
    complex q{};     ///< -2 i pi^2 I0 R J_1(kR) / c
    double w = 0.0;  ///< 2 pi I0 R J_1(kR) / c, so that Q = -i pi W
};

/// Exterior split for n = 0, omega > 0. Throws InteriorPointError for rho <= R.
DecomposedPotential decompose_exterior(const SolenoidConfig& cfg, const CylPoint& p);

struct RealSplit {
    double field;      ///< Re A_alpha^f
    double zerofield;  ///< Re A_alpha^0
};

/// Real azimuthal potentials at time t from the explicit sine/cosine forms
///   Re A^f = W { pi J_1(k rho) sin wt - [2/(k rho) + pi Y_1(k rho)] cos wt }
///   Re A^0 = W (2/(k rho)) cos wt
RealSplit real_parts(const DecomposedPotential& d, double t);

/// phi^0: zero inside; -(4 pi i I0 R / c) J_1(kR) (alpha + 2 pi winding) outside.
complex scalar_zero_potential(const SolenoidConfig& cfg, const CylPoint& p, int winding = 0);

/// chi(alpha, t) = coefficient * alpha * exp(i omega t) in the exterior.
struct GaugeFunction {
    complex chi_coefficient{};
    double omega = 0.0;

    complex chi(double alpha_unwrapped) const { return chi_coefficient * alpha_unwrapped; }
    /// (1/rho) d chi / d alpha
    complex a_alpha(double rho) const { return chi_coefficient / rho; }
    /// -(1/c) d chi / dt
    complex phi(double alpha_unwrapped) const {
        return -complex{0.0, omega / PhysicalConstants::c} * chi(alpha_unwrapped);
    }
    /// Circulation of grad chi over the given number of turns.
    complex circulation(int windings = 1) const;
};

/// chi coefficient 4 pi I0 R J_1(kR) / (c k); requires n = 0 and omega > 0.
GaugeFunction gauge_function(const SolenoidConfig& cfg);

/// Pointwise views of the split (exterior only). The zero-field view carries
/// phi^0 evaluated at the unwrapped angle.
PotentialField zerofield_potential_field(const SolenoidConfig& cfg);
PotentialField field_potential_field(const SolenoidConfig& cfg);
PotentialField total_exterior_potential_field(const SolenoidConfig& cfg);

/// Relative radial step used when none is given.
inline constexpr double kRadialStepRel = 1e-5;
/// Angular step (rad) of the alpha stencils.
inline constexpr double kAngularStep = 1e-3;

/// (1/rho) d(rho A_alpha)/d rho by central differences with Richardson
/// extrapolation over h and h/2 (h = 1e-5 rho when h <= 0). Throws
/// StencilError if [rho - h, rho + h] touches the wall radius.
complex curl_z_fd(const std::function<complex(double)>& a_alpha, double rho, double wall_radius,
                  double h = 0.0);

/// Full planar curl (1/rho)[d(rho A_alpha)/d rho - d A_rho / d alpha].
complex curl_z_planar_fd(const PotentialField& field, double rho, double alpha, double wall_radius,
                         double h = 0.0);

struct RealFieldSample {
    double e_rho = 0.0;    ///< statvolt/cm
    double e_alpha = 0.0;  ///< statvolt/cm
    double b_z = 0.0;      ///< gauss
    SpacetimePoint at{};
};

/// E and B_z at a spacetime point from a potential pair. Time derivatives are
/// exact (multiply by i omega); spatial derivatives of phi and the curl use
/// Richardson-extrapolated central differences.
RealFieldSample e_field_fd(const PotentialField& field, const SpacetimePoint& at, double omega,
                           double wall_radius);

struct GaugeCheckResult {
    bool local_ok = false;
    bool global_ok = false;
    double max_curl_residual = 0.0;  ///< relative
    double circulation_residual = 0.0;  ///< relative
    complex circulation_a{};
    complex circulation_a_prime{};
};

/// Compares two vector potentials through both equivalence conditions: equal
/// curls at the contour vertices, and equal circulation around the closed
/// polyline through those vertices.
GaugeCheckResult gauge_equivalence_check(const PotentialField& a, const PotentialField& a_prime,
                                         const std::vector<CylPoint>& contour, double wall_radius,
                                         double rel_tol = 1e-8);

/// Circulation of (A_rho, A_alpha) around the closed polyline.
struct Circulation {
    complex value{};
    double l1 = 0.0;  ///< integral of |A . dl|, the natural scale for comparisons
};
Circulation polyline_circulation(const PotentialField& field, const std::vector<CylPoint>& contour);

}  // namespace zerofield
