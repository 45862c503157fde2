#include "zerofield/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace zerofield::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

void check_order(int n, const char* who) {
    if (n < 0 || n > kMaxOrder) {
        throw std::domain_error(std::string(who) + ": order " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxOrder) + "]");
    }
}

void check_finite(double x, const char* who) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(who) + ": non-finite argument");
    }
    if (x > kMaxArgument) {
        throw std::domain_error(std::string(who) + ": argument beyond supported range");
    }
}

// Unnormalised Miller sequence J_0..J_top, already divided by the
// J_0 + 2 sum J_2k normalisation.
std::vector<double> miller_sequence(double x, int n_needed) {
    const int lead = static_cast<int>(std::max<double>(n_needed, std::ceil(x)) +
                                      15.0 * std::cbrt(x) + 20.0);
    const int top = lead + (lead % 2);  // even start keeps the normalisation sum aligned

    std::vector<double> seq(static_cast<std::size_t>(top) + 2, 0.0);
    seq[static_cast<std::size_t>(top)] = 1e-30;
    constexpr double kRescale = 1e250;
    for (int k = top; k >= 1; --k) {
        const auto uk = static_cast<std::size_t>(k);
        seq[uk - 1] = (2.0 * k / x) * seq[uk] - seq[uk + 1];
        if (std::abs(seq[uk - 1]) > kRescale) {
            for (std::size_t i = uk - 1; i < seq.size(); ++i) {
                seq[i] /= kRescale;
            }
        }
    }

    double norm = seq[0];
    for (int k = 2; k <= top; k += 2) {
        norm += 2.0 * seq[static_cast<std::size_t>(k)];
    }
    for (double& v : seq) {
        v /= norm;
    }
    seq.resize(static_cast<std::size_t>(std::max(n_needed, top)) + 1);
    return seq;
}

// Forward recurrence Y_{k+1} = (2k/x) Y_k - Y_{k-1}.
double y_forward(int n, double x, method::NeumannPair start) {
    if (n == 0) {
        return start.y0;
    }
    double prev = start.y0;
    double cur = start.y1;
    for (int k = 1; k < n; ++k) {
        const double next = (2.0 * k / x) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

namespace method {

double j_ascending_series(int n, double x, const SeriesTolerances& tol) {
    const double half = 0.5 * x;
    double term = 1.0;
    for (int j = 1; j <= n; ++j) {
        term *= half / j;
    }
    double sum = term;
    const double q = half * half;
    for (int m = 1; m < tol.max_terms; ++m) {
        term *= -q / (static_cast<double>(m) * (m + n));
        sum += term;
        if (std::abs(term) < tol.rel_truncation * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

double j_miller(int n, double x) {
    return miller_sequence(x, n)[static_cast<std::size_t>(n)];
}

NeumannPair y01_ascending_series(double x, const SeriesTolerances& tol) {
    const double half = 0.5 * x;
    const double q = half * half;
    const double log_term = std::log(half) + kEulerGamma;

    // Y_0 = (2/pi) [ (ln(x/2) + C) J_0 + sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k / (k!)^2 ]
    double j0_term = 1.0;
    double j0 = 1.0;
    double harmonic = 0.0;
    double tail0 = 0.0;
    for (int k = 1; k < tol.max_terms; ++k) {
        j0_term *= -q / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        j0 += j0_term;
        const double t = -j0_term * harmonic;
        tail0 += t;
        if (std::abs(t) < tol.rel_truncation * std::abs(tail0) &&
            std::abs(j0_term) < tol.rel_truncation * std::abs(j0)) {
            break;
        }
    }
    const double y0 = (2.0 / kPi) * (log_term * j0 + tail0);

    // Y_1 = -2/(pi x) + (2/pi)(ln(x/2) + C) J_1
    //       - (1/pi) sum_{m>=0} (-1)^m (x/2)^(2m+1) / (m!(m+1)!) (H_m + H_{m+1})
    double j1_term = half;
    double j1 = half;
    double h_m = 0.0;
    double h_m1 = 1.0;
    double tail1 = j1_term * (h_m + h_m1);
    for (int m = 1; m < tol.max_terms; ++m) {
        j1_term *= -q / (static_cast<double>(m) * (m + 1));
        h_m = h_m1;
        h_m1 += 1.0 / (m + 1);
        j1 += j1_term;
        const double t = j1_term * (h_m + h_m1);
        tail1 += t;
        if (std::abs(t) < tol.rel_truncation * std::abs(tail1) &&
            std::abs(j1_term) < tol.rel_truncation * std::abs(j1)) {
            break;
        }
    }
    const double y1 = -2.0 / (kPi * x) + (2.0 / kPi) * log_term * j1 - tail1 / kPi;
    return {y0, y1};
}

NeumannPair y01_neumann_sums(double x) {
    const std::vector<double> j = miller_sequence(x, 2);
    const double log_term = std::log(0.5 * x) + kEulerGamma;
    const int top = static_cast<int>(j.size()) - 1;

    // Y_0 = (2/pi)(ln(x/2) + C) J_0 - (4/pi) sum_k (-1)^k J_2k / k
    // Y_1 = -dY_0/dx, using 2 J_n' = J_{n-1} - J_{n+1}
    double s0 = 0.0;
    double s1 = 0.0;
    for (int k = 1; 2 * k <= top; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const auto even = static_cast<std::size_t>(2 * k);
        s0 += sign * j[even] / k;
        const double upper = (2 * k + 1 <= top) ? j[even + 1] : 0.0;
        s1 += sign * (j[even - 1] - upper) / k;
    }
    const double y0 = (2.0 / kPi) * log_term * j[0] - (4.0 / kPi) * s0;
    const double y1 = (2.0 / kPi) * log_term * j[1] - (2.0 / kPi) * j[0] / x + (2.0 / kPi) * s1;
    return {y0, y1};
}

}  // namespace method

double bessel_j(int n, double x) {
    check_order(n, "bessel_j");
    check_finite(x, "bessel_j");
    if (x < 0.0) {
        throw std::domain_error("bessel_j: negative argument");
    }
    if (x == 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    if (x <= kDefaultTolerances.crossover) {
        return method::j_ascending_series(n, x);
    }
    return method::j_miller(n, x);
}

double bessel_y(int n, double x) {
    check_order(n, "bessel_y");
    check_finite(x, "bessel_y");
    if (x <= 0.0) {
        throw std::domain_error("bessel_y: argument must be positive");
    }
    const method::NeumannPair start = x <= kDefaultTolerances.crossover
                                          ? method::y01_ascending_series(x)
                                          : method::y01_neumann_sums(x);
    return y_forward(n, x, start);
}

complex hankel2(int n, double x) {
    return {bessel_j(n, x), -bessel_y(n, x)};
}

double bessel_j_signed(int n, double x) {
    const double v = bessel_j(std::abs(n), x);
    return (n < 0 && (n % 2 != 0)) ? -v : v;
}

complex hankel2_signed(int n, double x) {
    const complex v = hankel2(std::abs(n), x);
    return (n < 0 && (n % 2 != 0)) ? -v : v;
}

double bessel_j0_first_zero() {
    static const double root = [] {
        double lo = 2.0;
        double hi = 3.0;
        double f_lo = bessel_j(0, lo);
        if (f_lo * bessel_j(0, hi) > 0.0) {
            throw std::logic_error("bessel_j0_first_zero: J_0 does not change sign on [2, 3]");
        }
        for (;;) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) {
                break;
            }
            const double f_mid = bessel_j(0, mid);
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
        return std::abs(bessel_j(0, lo)) <= std::abs(bessel_j(0, hi)) ? lo : hi;
    }();
    return root;
}

Hankel1Expansion hankel2_order1_expansion(double x, const SeriesTolerances& tol) {
    check_finite(x, "hankel2_order1_expansion");
    if (x <= 0.0) {
        throw std::domain_error("hankel2_order1_expansion: argument must be positive");
    }
    const double half = 0.5 * x;
    const double q = half * half;

    // term_m = (-1)^m (x/2)^(2m+1) / (m! (m+1)!), shared by both series
    double term = half;
    double j1 = term;
    double h_m = 0.0;
    double h_m1 = 1.0;
    double harmonic_sum = term * (h_m + h_m1);
    for (int m = 1; m < tol.max_terms; ++m) {
        term *= -q / (static_cast<double>(m) * (m + 1));
        h_m = h_m1;
        h_m1 += 1.0 / (m + 1);
        j1 += term;
        const double t = term * (h_m + h_m1);
        harmonic_sum += t;
        if (std::abs(t) < tol.rel_truncation * std::abs(harmonic_sum) &&
            std::abs(term) < tol.rel_truncation * std::abs(j1)) {
            break;
        }
    }

    const complex i{0.0, 1.0};
    Hankel1Expansion out;
    out.j1_series = j1;
    out.singular = 2.0 * i / (kPi * x);
    out.log_series = (1.0 - 2.0 * i * kEulerGamma / kPi - (2.0 * i / kPi) * std::log(half)) * j1;
    out.harmonic = (i / kPi) * harmonic_sum;
    return out;
}

}  // namespace zerofield::specfun
