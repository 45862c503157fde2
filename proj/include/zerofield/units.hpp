#pragma once

// Gaussian-CGS unit system, physical constants and the validated solenoid
// parameter record. SI quantities only appear at the ingestion boundary.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace zerofield {

/// Physical constants in Gaussian CGS.
struct PhysicalConstants {
    static constexpr double c = 2.99792458e10;       ///< speed of light, cm/s
    static constexpr double h = 6.62607015e-27;      ///< Planck constant, erg s
    static constexpr double e_abs = 4.80320471e-10;  ///< elementary charge, esu
};

/// Statamperes per ampere (c / 10 with c in cm/s).
inline constexpr double kStatampPerAmp = PhysicalConstants::c / 10.0;

inline constexpr int kMaxMode = 8;

/// Thrown for any parameter set that violates the SolenoidConfig invariants.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Driven solenoid in CGS: surface current amplitude I0 (statA/cm), radius R
/// (cm), angular frequency omega (rad/s) and azimuthal mode n.
class SolenoidConfig {
public:
    SolenoidConfig(double i0, double radius, double omega, int n_mode);

    double i0() const { return i0_; }
    double radius() const { return radius_; }
    double omega() const { return omega_; }
    int n_mode() const { return n_mode_; }

    /// k = omega / c.
    double wavenumber() const { return omega_ / PhysicalConstants::c; }
    bool is_static() const { return omega_ == 0.0; }

    SolenoidConfig with_i0(double i0) const { return {i0, radius_, omega_, n_mode_}; }
    SolenoidConfig with_radius(double r) const { return {i0_, r, omega_, n_mode_}; }
    SolenoidConfig with_omega(double w) const { return {i0_, radius_, w, n_mode_}; }
    SolenoidConfig with_mode(int n) const { return {i0_, radius_, omega_, n}; }

private:
    double i0_;
    double radius_;
    double omega_;
    int n_mode_;
};

struct DerivedQuantities {
    double k;        ///< wavenumber, 1/cm
    double j_total;  ///< current per unit solenoid length, statA/cm (= 2 pi R I0)
    double mu0;      ///< c h / |e|, gauss cm^2
};

DerivedQuantities derived(const SolenoidConfig& cfg);

/// The same parameters in laboratory units.
struct SiParameters {
    double i0_mA_per_cm = 0.0;
    double radius_um = 0.0;
    double freq_hz = 0.0;
    int n_mode = 0;
};

SolenoidConfig from_si(double i0_mA_per_cm, double radius_um, double freq_hz, int n_mode);
SolenoidConfig from_si(const SiParameters& si);
SiParameters to_si(const SolenoidConfig& cfg);

/// Values read from a `key = value` file. Keys absent from the file stay empty.
struct ConfigFileValues {
    std::optional<double> i0_mA_per_cm;
    std::optional<double> radius_um;
    std::optional<double> freq_hz;
    std::optional<int> n_mode;
};

/// Parses `key = value` lines. Blank lines and `#` comments are ignored;
/// unknown keys and malformed numbers raise ConfigError.
ConfigFileValues parse_config(std::istream& in);
ConfigFileValues load_config_file(const std::filesystem::path& path);

}  // namespace zerofield
