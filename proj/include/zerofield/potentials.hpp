#pragma once

// Vector-potential phasors of an infinitely long solenoid driven by the
// surface current j_alpha = I0 delta(rho - R) exp i(-n alpha + omega t).
//
// Phasor convention: physical value = Re[phasor * exp(i omega t)], outgoing
// waves carried by H(2). Nothing depends on z.

#include <complex>
#include <functional>
#include <stdexcept>
#include <utility>

#include "zerofield/units.hpp"

namespace zerofield {

using complex = std::complex<double>;

/// Relative distance from the wall, |rho - R| <= kWallTolerance * R, treated as on the wall.
inline constexpr double kWallTolerance = 1e-12;

/// Largest truncation order accepted by addition_theorem.
inline constexpr int kMaxAdditionOrder = 40;

class WallEvaluationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class GreenSingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cylindrical point (rho, alpha, z); alpha is normalised into [0, 2 pi).
class CylPoint {
public:
    CylPoint(double rho, double alpha, double z = 0.0);

    double rho() const { return rho_; }
    double alpha() const { return alpha_; }
    double z() const { return z_; }

private:
    double rho_;
    double alpha_;
    double z_;
};

struct SpacetimePoint {
    double rho;
    double alpha;  ///< not normalised: a path may wind around the axis
    double z;
    double t;
};

enum class Region { Inside, Outside, OnWall };

const char* to_string(Region r);
Region region_of(double rho, double radius);

/// Complex amplitudes of (A_rho, A_alpha, phi) at one point.
struct PotentialPhasor {
    complex a_rho{};
    complex a_alpha{};
    complex phi{};
    Region region = Region::Outside;

    PotentialPhasor& operator+=(const PotentialPhasor& o) {
        a_rho += o.a_rho;
        a_alpha += o.a_alpha;
        phi += o.phi;
        return *this;
    }
    friend PotentialPhasor operator+(PotentialPhasor a, const PotentialPhasor& b) { return a += b; }
};

/// A potential defined pointwise, e.g. one part of a decomposition. The angle
/// is passed unwrapped so multivalued scalar potentials stay continuous along
/// a path that crosses alpha = 0.
using PotentialField = std::function<PotentialPhasor(double rho, double alpha)>;

/// Real value of a phasor component at omega*t = phase.
inline double real_at_phase(complex phasor, double phase) {
    return (phasor * std::polar(1.0, phase)).real();
}

/// G = -(i pi / c) H(2)_0(k |p - p_src|), Green function of the 2-D Helmholtz operator.
complex green(double k, const CylPoint& p, const CylPoint& p_src);

struct AdditionTheoremTerms {
    complex direct;     ///< H(2)_0(k d)
    complex truncated;  ///< sum over |m| <= m_max
};

/// Both sides of the Hankel addition theorem for H(2)_0 of the distance
/// between (rho, alpha) and (R_src, alpha - dalpha).
AdditionTheoremTerms addition_theorem(double k, double rho, double r_src, double dalpha, int m_max);

/// Closed-form phasor for general mode n (reduces to the n = 0 form with
/// A_rho = 0). The region is picked from rho; on the wall this throws.
PotentialPhasor potential_closed_form(const SolenoidConfig& cfg, const CylPoint& p);

/// Same closed form with the branch chosen explicitly; this is the only way to
/// evaluate at rho = R (one-sided limit).
PotentialPhasor potential_closed_form_side(const SolenoidConfig& cfg, const CylPoint& p, Region side);

/// Prefactors of the azimuthal and radial closed forms, without exp(-i n alpha).
complex azimuthal_prefactor(const SolenoidConfig& cfg);
complex radial_prefactor(const SolenoidConfig& cfg);

/// Ratio between the radial prefactor as it is sometimes printed,
/// -pi^2 I0 R / (2c), and the value the Green-function integral actually gives,
/// -pi^2 I0 R / c.
inline constexpr double kRadialPrefactorPrintedRatio = 0.5;

struct QuadratureOptions {
    double rel_tol = 1e-13;   ///< relative to the L1 norm of the integrand
    unsigned max_depth = 24;  ///< bisection levels of the Gauss-Kronrod panels
};

/// Direct numerical integration of the Green-function integrals over the
/// source ring, used as an oracle for the closed forms.
PotentialPhasor potential_quadrature_oracle(const SolenoidConfig& cfg, const CylPoint& p,
                                            const QuadratureOptions& opts = {});

/// Magnetostatic potential (omega = 0, n = 0): A_alpha = J rho / (c R) inside,
/// J R / (c rho) outside, J / c on the wall.
PotentialPhasor potential_static(const SolenoidConfig& cfg, const CylPoint& p);

/// Dispatches to potential_static or potential_closed_form.
PotentialPhasor potential(const SolenoidConfig& cfg, const CylPoint& p);

}  // namespace zerofield
