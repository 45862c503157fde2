#pragma once

// Integer-order cylinder functions: Bessel J_n, Neumann Y_n and the Hankel
// function of the second kind H(2)_n = J_n - i Y_n.
//
// For x <= crossover the ascending power series is summed directly. Above the
// crossover J_n comes from Miller's backward recurrence normalised by
// J_0 + 2 sum J_2k = 1, and Y_0, Y_1 from the Neumann sums over that same J
// array. Y_n for n >= 2 always uses forward recurrence from Y_0, Y_1.

#include <complex>

namespace zerofield::specfun {

using complex = std::complex<double>;

/// Euler's constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Largest order any routine in this module accepts.
inline constexpr int kMaxOrder = 64;

/// Largest argument accepted; the Miller array grows linearly with x.
inline constexpr double kMaxArgument = 1e5;

/// Evaluation knobs shared by every series in the module.
struct SeriesTolerances {
    double crossover = 12.0;        ///< series for x <= crossover
    double rel_truncation = 1e-16;  ///< stop when |term| < rel_truncation * |sum|
    int max_terms = 60;
};

inline constexpr SeriesTolerances kDefaultTolerances{};

double bessel_j(int n, double x);
double bessel_y(int n, double x);
complex hankel2(int n, double x);

/// J_n for negative orders via J_{-n} = (-1)^n J_n.
double bessel_j_signed(int n, double x);
/// H(2)_n for negative orders via H(2)_{-n} = (-1)^n H(2)_n.
complex hankel2_signed(int n, double x);

/// Smallest positive zero of J_0, bisected on bessel_j to full double precision.
double bessel_j0_first_zero();

/// The individual evaluation routes, exposed so their agreement can be checked.
namespace method {

double j_ascending_series(int n, double x, const SeriesTolerances& tol = kDefaultTolerances);
double j_miller(int n, double x);

struct NeumannPair {
    double y0;
    double y1;
};
NeumannPair y01_ascending_series(double x, const SeriesTolerances& tol = kDefaultTolerances);
NeumannPair y01_neumann_sums(double x);

}  // namespace method

/// Pieces of the small-argument expansion of H(2)_1(x):
///
///   H(2)_1(x) = 2i/(pi x)
///             + [1 - 2iC/pi - (2i/pi) ln(x/2)] * sum_m (-1)^m (x/2)^(2m+1) / (m! Gamma(m+2))
///             + (i/pi) sum_m (-1)^m (x/2)^(2m+1) / (m! (m+1)!) * (H_m + H_{m+1})
///
/// with H_m the m-th harmonic number and C Euler's constant. The first term is
/// curl-free when used as an azimuthal potential A ~ 1/rho.
struct Hankel1Expansion {
    complex singular;     ///< 2i/(pi x)
    complex log_series;   ///< bracket times the J_1 series
    complex harmonic;     ///< harmonic-number series
    double j1_series;     ///< the J_1 series on its own

    complex sum() const { return singular + log_series + harmonic; }
    /// Everything except the 1/x term.
    complex regular() const { return log_series + harmonic; }
};

Hankel1Expansion hankel2_order1_expansion(double x,
                                          const SeriesTolerances& tol = kDefaultTolerances);

}  // namespace zerofield::specfun
