#pragma once

// Integral observables of the n = 0 solenoid: enclosed flux, circulation of
// the zero-field potential (cyclic constant), a closed spacetime loop
// integral of the four-potential, and the time-averaged interference
// intensity with its coupling parameter S.

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zerofield/potentials.hpp"
#include "zerofield/units.hpp"

namespace zerofield {

class NoBracketError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FluxResult {
    complex closed_form{};  ///< -(4 i pi^3 R^2 I0 / c) J_1(kR) H(2)_1(kR)
    complex quadrature{};   ///< 2 pi integral over the disk of B_z rho d rho
    complex stokes{};       ///< 2 pi R A_alpha(R-) from the interior closed form
};

/// Flux through the solenoid cross-section. omega = 0 gives the static flux
/// 4 pi^2 R^2 I0 / c by the same three routes.
FluxResult flux(const SolenoidConfig& cfg);

struct CirculationResult {
    double closed_form = 0.0;       ///< 8 pi^2 I0 R J_1(kR) / (c k)
    double as_printed = 0.0;        ///< same with 8 pi^3, kept for comparison
    double contour_integral = 0.0;  ///< 2 pi rho_c A^0_alpha(rho_c)
    double contour_radius = 0.0;
};

/// Circulation of the zero-field potential around a circle of the given
/// radius (> R). omega = 0 uses the static exterior potential J R / (c rho).
CirculationResult cyclic_constant(const SolenoidConfig& cfg, double contour_radius);

enum class PotentialPart { ZeroField, Field, Total };

/// Closed worldline s in [0, 1] -> (rho, alpha, z, t). alpha is unwrapped; the
/// path is closed when rho, z agree, alpha differs by a multiple of 2 pi and t
/// by a multiple of the drive period.
using Worldline = std::function<SpacetimePoint(double s)>;

struct LoopOptions {
    PotentialPart part = PotentialPart::ZeroField;
    int initial_samples = 64;
    int max_samples = 1 << 20;
    double rel_tol = 1e-12;
};

struct LoopIntegral {
    double value = 0.0;
    int samples = 0;
    double change = 0.0;  ///< |I(N) - I(N/2)| at termination
};

/// Closed line integral of Re[A e^{iwt}] . dr - c Re[phi e^{iwt}] dt (exterior,
/// n = 0) by the composite trapezoid rule, doubling the sample count until
/// successive values agree.
LoopIntegral spacetime_loop_integral(const SolenoidConfig& cfg, const Worldline& path, const LoopOptions& opts = {});

struct InterferenceResult {
    double s_param = 0.0;
    double contrast = 0.0;  ///< |J_0(S)|
    std::vector<std::pair<double, double>> intensity_profile;  ///< (omega_e tau, P/P0)
};

/// S = 16 pi^3 I0 R J_1(kR) / (mu0 omega); omega = 0 takes the limit
/// 8 pi^3 I0 R^2 / (mu0 c).
double s_parameter(const SolenoidConfig& cfg);

/// P/P0 = 0.5 (1 + J_0(S) cos(omega_e tau)) sampled at `samples` phases in [0, 2 pi).
InterferenceResult interference_from_s(double s_param, int samples = 64);
InterferenceResult interference(const SolenoidConfig& cfg, int samples = 64);

enum class SearchParameter { CurrentAmplitude, Radius };

/// Value of the chosen parameter in [lower, upper] at which S equals the first
/// zero of J_0, by bisection. Throws NoBracketError when S - j_{0,1} does not
/// change sign across the bracket.
double contrast_zero_search(const SolenoidConfig& tmpl, SearchParameter vary, double lower, double upper);

}  // namespace zerofield
