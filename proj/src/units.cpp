#include "zerofield/units.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <string_view>

namespace zerofield {

namespace {

constexpr double kCmPerMicron = 1e-4;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, std::string_view key, int line_no) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("config line " + std::to_string(line_no) + ": bad value for '" +
                          std::string(key) + "': '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

SolenoidConfig::SolenoidConfig(double i0, double radius, double omega, int n_mode)
    : i0_(i0), radius_(radius), omega_(omega), n_mode_(n_mode) {
    if (!std::isfinite(i0) || i0 < 0.0) {
        throw ConfigError("current amplitude must be finite and non-negative");
    }
    if (!std::isfinite(radius) || radius <= 0.0) {
        throw ConfigError("solenoid radius must be finite and positive");
    }
    if (!std::isfinite(omega) || omega < 0.0) {
        throw ConfigError("angular frequency must be finite and non-negative");
    }
    if (n_mode < 0 || n_mode > kMaxMode) {
        throw ConfigError("mode index must lie in [0, " + std::to_string(kMaxMode) + "]");
    }
}

DerivedQuantities derived(const SolenoidConfig& cfg) {
    using C = PhysicalConstants;
    return {cfg.wavenumber(), 2.0 * std::numbers::pi * cfg.radius() * cfg.i0(), C::c * C::h / C::e_abs};
}

SolenoidConfig from_si(double i0_mA_per_cm, double radius_um, double freq_hz, int n_mode) {
    if (!(i0_mA_per_cm >= 0.0) || !(freq_hz >= 0.0)) {
        throw ConfigError("current amplitude and frequency must be non-negative");
    }
    if (!(radius_um > 0.0)) {
        throw ConfigError("solenoid radius must be positive");
    }
    return SolenoidConfig(i0_mA_per_cm * 1e-3 * kStatampPerAmp, radius_um * kCmPerMicron,
                          2.0 * std::numbers::pi * freq_hz, n_mode);
}

SolenoidConfig from_si(const SiParameters& si) {
    return from_si(si.i0_mA_per_cm, si.radius_um, si.freq_hz, si.n_mode);
}

SiParameters to_si(const SolenoidConfig& cfg) {
    return {cfg.i0() / kStatampPerAmp * 1e3, cfg.radius() / kCmPerMicron,
            cfg.omega() / (2.0 * std::numbers::pi), cfg.n_mode()};
}

ConfigFileValues parse_config(std::istream& in) {
    ConfigFileValues out;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "i0_mA_per_cm") {
            out.i0_mA_per_cm = parse_number<double>(value, key, line_no);
        } else if (key == "radius_um") {
            out.radius_um = parse_number<double>(value, key, line_no);
        } else if (key == "freq_hz") {
            out.freq_hz = parse_number<double>(value, key, line_no);
        } else if (key == "n_mode") {
            out.n_mode = parse_number<int>(value, key, line_no);
        } else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" +
                              std::string(key) + "'");
        }
    }
    return out;
}

ConfigFileValues load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open config file " + path.string());
    }
    return parse_config(in);
}

}  // namespace zerofield
