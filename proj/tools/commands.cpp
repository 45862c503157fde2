#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "zerofield/decomposition.hpp"
#include "zerofield/observables.hpp"
#include "zerofield/potentials.hpp"
#include "zerofield/verify.hpp"

#ifndef ZEROFIELD_VERSION
#define ZEROFIELD_VERSION "0.0.0"
#endif

namespace zerofield::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluates fn(i) for i in [0, count) on up to `threads` workers; results
// land in index order.
template <typename Row, typename Fn>
std::vector<Row> parallel_rows(std::size_t count, unsigned threads, Fn fn) {
    std::vector<Row> rows(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            rows[i] = fn(i);
        }
        return rows;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) {
                    rows[i] = fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

void require_finite(const nlohmann::json& j, const std::string& path = "") {
    if (j.is_number_float() && !std::isfinite(j.get<double>())) {
        throw std::domain_error("non-finite value for '" + path + "'");
    }
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            require_finite(value, path.empty() ? key : path + "." + key);
        }
    }
}

void log_notched(std::ostream& err, const std::vector<double>& notched) {
    for (double rho : notched) {
        err << "notched: rho = " << format_double(rho) << " cm lies on the solenoid wall, skipped\n";
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return {buf, ptr};
}

void write_csv(std::ostream& out, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out << (i ? "," : "") << t.columns[i];
    }
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "");
            if (const double* d = std::get_if<double>(&row[i])) {
                out << format_double(*d);
            } else {
                out << std::get<std::string>(row[i]);
            }
        }
        out << '\n';
    }
}

nlohmann::json table_to_json(const Table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
        }
        rows.push_back(std::move(obj));
    }
    nlohmann::json out = {{"columns", t.columns}, {"rows", std::move(rows)}};
    require_finite(out);
    return out;
}

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("ZEROFIELD_THREADS")) {
        const std::string_view text(env);
        unsigned cap = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
        if (ec == std::errc{} && ptr == text.data() + text.size() && cap > 0) {
            n = n == 0 ? cap : std::min(n, cap);
        }
    }
    return std::max(1u, n);
}

std::vector<double> notched_grid(double lo, double hi, int samples, double radius, std::vector<double>* notched) {
    if (samples < 1) {
        throw ConfigError("samples must be at least 1");
    }
    if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
        throw ConfigError("radial range must satisfy 0 < rho-min <= rho-max");
    }
    if (samples > 1 && hi == lo) {
        throw ConfigError("rho-min equals rho-max but more than one sample was requested");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double rho = samples == 1 ? lo : lo + (hi - lo) * i / (samples - 1);
        if (std::abs(rho - radius) <= kNotchRel * radius) {
            if (notched) {
                notched->push_back(rho);
            }
            continue;
        }
        grid.push_back(rho);
    }
    return grid;
}

Table potentials_table(const SolenoidConfig& cfg, const SweepRange& range, double alpha, unsigned threads,
                       std::vector<double>* notched) {
    const std::vector<double> grid = notched_grid(range.rho_min, range.rho_max, range.samples, cfg.radius(), notched);
    Table t;
    t.columns = {"rho_cm", "re_a_alpha", "im_a_alpha", "re_a_rho", "im_a_rho", "region"};
    t.rows = parallel_rows<std::vector<Cell>>(grid.size(), threads, [&](std::size_t i) {
        const CylPoint p(grid[i], alpha);
        const PotentialPhasor a = potential(cfg, p);
        return std::vector<Cell>{grid[i],          a.a_alpha.real(), a.a_alpha.imag(),
                                 a.a_rho.real(),   a.a_rho.imag(),   std::string(to_string(a.region))};
    });
    return t;
}

Table decompose_table(const SolenoidConfig& cfg, const SweepRange& range, const std::vector<double>& phases,
                      unsigned threads, std::vector<double>* notched) {
    if (cfg.n_mode() != 0) {
        throw ConfigError("decompose is defined for mode n = 0 only");
    }
    if (range.rho_min <= cfg.radius() * (1.0 + kNotchRel)) {
        throw ConfigError("decompose needs an exterior range: rho-min must exceed the solenoid radius");
    }
    if (phases.empty()) {
        throw ConfigError("at least one phase is required");
    }
    const std::vector<double> grid = notched_grid(range.rho_min, range.rho_max, range.samples, cfg.radius(), notched);

    Table t;
    t.columns = {"rho_cm", "phase", "a_alpha_field_re", "a_alpha_zerofield_re", "a_alpha_total_re",
                 "phi_zerofield_alpha0"};
    const std::size_t np = phases.size();
    t.rows = parallel_rows<std::vector<Cell>>(grid.size() * np, threads, [&](std::size_t idx) {
        const double rho = grid[idx / np];
        const double phase = phases[idx % np];
        if (cfg.is_static()) {
            // The static exterior potential is entirely zero-field.
            const double a0 = potential_static(cfg, CylPoint(rho, 0.0)).a_alpha.real();
            return std::vector<Cell>{rho, phase, 0.0, a0, a0, 0.0};
        }
        const DecomposedPotential d = decompose_exterior(cfg, CylPoint(rho, 0.0));
        const RealSplit s = real_parts(d, phase / cfg.omega());
        const complex phi_per_rad = scalar_zero_potential(cfg, CylPoint(rho, 1.0));
        const complex total = potential_closed_form(cfg, CylPoint(rho, 0.0)).a_alpha;
        return std::vector<Cell>{rho, phase, s.field, s.zerofield, real_at_phase(total, phase),
                                 real_at_phase(phi_per_rad, phase)};
    });
    return t;
}

nlohmann::json observables_json(const SolenoidConfig& cfg) {
    if (cfg.n_mode() != 0) {
        throw ConfigError("observables are defined for mode n = 0 only");
    }
    const FluxResult f = flux(cfg);
    const CirculationResult w = cyclic_constant(cfg, 2.0 * cfg.radius());
    const InterferenceResult interf = interference(cfg);
    nlohmann::json out = {
        {"flux",
         {{"re", f.closed_form.real()},
          {"im", f.closed_form.imag()},
          {"quadrature_re", f.quadrature.real()},
          {"quadrature_im", f.quadrature.imag()}}},
        {"omega1", {{"derived", w.closed_form}, {"as_printed", w.as_printed}}},
        {"s_param", interf.s_param},
        {"contrast", interf.contrast},
        {"static_limit_ratio", w.closed_form / std::abs(f.closed_form)},
    };
    require_finite(out);
    return out;
}

Table interference_sweep_table(const SolenoidConfig& cfg, double f_min, double f_max, int samples) {
    if (cfg.n_mode() != 0) {
        throw ConfigError("interference is defined for mode n = 0 only");
    }
    if (!(f_min > 0.0) || !(f_max >= f_min) || samples < 1 || !std::isfinite(f_max)) {
        throw ConfigError("frequency sweep needs 0 < f-min <= f-max and at least one sample");
    }
    Table t;
    t.columns = {"freq_hz", "k_r", "s_param", "contrast"};
    for (int i = 0; i < samples; ++i) {
        const double f = samples == 1 ? f_min : f_min * std::pow(f_max / f_min, static_cast<double>(i) / (samples - 1));
        const SolenoidConfig at = cfg.with_omega(2.0 * kPi * f);
        const InterferenceResult r = interference(at, 1);
        t.rows.push_back({f, at.wavenumber() * at.radius(), r.s_param, r.contrast});
    }
    return t;
}

nlohmann::json manifest(const std::string& command, const SolenoidConfig& cfg, const std::string& timestamp) {
    const SiParameters si = to_si(cfg);
    return {
        {"command", command},
        {"config",
         {{"si",
           {{"i0_mA_per_cm", si.i0_mA_per_cm},
            {"radius_um", si.radius_um},
            {"freq_hz", si.freq_hz},
            {"n_mode", si.n_mode}}},
          {"cgs",
           {{"i0_statA_per_cm", cfg.i0()},
            {"radius_cm", cfg.radius()},
            {"omega_rad_per_s", cfg.omega()},
            {"n_mode", cfg.n_mode()}}}}},
        {"tool_version", tool_version()},
        {"timestamp", timestamp},
    };
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string tool_version() {
    return ZEROFIELD_VERSION;
}

namespace {

struct CommonFlags {
    std::string config_path;
    double i0 = 0.0;
    double radius = 0.0;
    double freq = 0.0;
    int mode = 0;
    std::string out_path;
    std::string format;
    CLI::Option* i0_opt = nullptr;
    CLI::Option* radius_opt = nullptr;
    CLI::Option* freq_opt = nullptr;
    CLI::Option* mode_opt = nullptr;
};

void add_common(CLI::App* sub, CommonFlags& f, const std::string& default_format) {
    f.format = default_format;
    sub->add_option("--config", f.config_path, "key = value parameter file");
    f.i0_opt = sub->add_option("--i0-ma-per-cm", f.i0, "surface current amplitude, mA/cm");
    f.radius_opt = sub->add_option("--radius-um", f.radius, "solenoid radius, um");
    f.freq_opt = sub->add_option("--freq-hz", f.freq, "drive frequency omega/(2 pi), Hz");
    f.mode_opt = sub->add_option("--mode-n", f.mode, "azimuthal mode index n");
    sub->add_option("--out", f.out_path, "output file (default: stdout)");
    sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

// Defaults, then the config file, then explicit flags.
SolenoidConfig resolve_config(const CommonFlags& f) {
    SiParameters si{158.0, 5.0, 1e9, 0};
    if (!f.config_path.empty()) {
        const ConfigFileValues file = load_config_file(f.config_path);
        si.i0_mA_per_cm = file.i0_mA_per_cm.value_or(si.i0_mA_per_cm);
        si.radius_um = file.radius_um.value_or(si.radius_um);
        si.freq_hz = file.freq_hz.value_or(si.freq_hz);
        si.n_mode = file.n_mode.value_or(si.n_mode);
    }
    if (f.i0_opt->count()) si.i0_mA_per_cm = f.i0;
    if (f.radius_opt->count()) si.radius_um = f.radius;
    if (f.freq_opt->count()) si.freq_hz = f.freq;
    if (f.mode_opt->count()) si.n_mode = f.mode;
    return from_si(si);
}

void emit(const CommonFlags& f, const std::string& command, const SolenoidConfig& cfg, std::ostream& out,
          const std::function<void(std::ostream&)>& body) {
    if (f.out_path.empty()) {
        body(out);
        return;
    }
    std::ofstream file(f.out_path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + f.out_path + "' for writing");
    }
    body(file);
    file.close();
    if (!file) {
        throw IoError("write to '" + f.out_path + "' failed");
    }
    const std::string manifest_path = f.out_path + ".manifest.json";
    std::ofstream m(manifest_path, std::ios::binary);
    m << manifest(command, cfg, utc_timestamp()).dump(2) << '\n';
    m.close();
    if (!m) {
        throw IoError("cannot write manifest '" + manifest_path + "'");
    }
}

void emit_table(const CommonFlags& f, const std::string& command, const SolenoidConfig& cfg, const Table& t,
                std::ostream& out) {
    emit(f, command, cfg, out, [&](std::ostream& os) {
        if (f.format == "json") {
            os << table_to_json(t).dump(2) << '\n';
        } else {
            write_csv(os, t);
        }
    });
}

std::vector<double> default_phases(int count) {
    std::vector<double> p;
    for (int i = 0; i < count; ++i) {
        p.push_back(2.0 * kPi * i / count);
    }
    return p;
}

int run_verify(std::optional<double> tol, std::ostream& out) {
    verify::Options opts;
    opts.tol_override = tol;
    const auto results = verify::run_all(opts);
    int failed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name << "  measured=" << format_double(r.measured) << " "
            << verify::to_string(r.comparison) << " " << format_double(r.threshold);
        if (!r.detail.empty()) {
            out << "  [" << r.detail << "]";
        }
        out << '\n';
        failed += r.pass ? 0 : 1;
    }
    out << verify::prefactor_note() << '\n';
    out << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Driven-solenoid potentials, zero-field decomposition and interference observables", "zerofield"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    CommonFlags pot_flags, dec_flags, obs_flags, sweep_flags, ver_flags;

    auto* pot = app.add_subcommand("potentials", "sample the potential phasors along a radial line");
    add_common(pot, pot_flags, "csv");
    std::optional<double> pot_rho_min, pot_rho_max;
    int pot_samples = 100;
    double pot_alpha = 0.0;
    pot->add_option("--rho-min", pot_rho_min, "smallest radius, cm (default 0.2 R)");
    pot->add_option("--rho-max", pot_rho_max, "largest radius, cm (default 10 R)");
    pot->add_option("--samples", pot_samples, "number of radii")->check(CLI::PositiveNumber);
    pot->add_option("--alpha", pot_alpha, "azimuth, rad");

    auto* dec = app.add_subcommand("decompose", "field / zero-field split of the exterior potential");
    add_common(dec, dec_flags, "csv");
    std::optional<double> dec_rho_min, dec_rho_max;
    int dec_samples = 100;
    std::vector<double> dec_phases;
    dec->add_option("--rho-min", dec_rho_min, "smallest radius, cm (default 1.5 R)");
    dec->add_option("--rho-max", dec_rho_max, "largest radius, cm (default 10 R)");
    dec->add_option("--samples", dec_samples, "number of radii")->check(CLI::PositiveNumber);
    dec->add_option("--phases", dec_phases, "comma-separated values of omega t (default 10 phases in [0, 2 pi))")
        ->delimiter(',');

    auto* obs = app.add_subcommand("observables", "flux, cyclic constant, S and contrast");
    add_common(obs, obs_flags, "json");

    auto* sweep = app.add_subcommand("interference-sweep", "S and contrast over a frequency range");
    add_common(sweep, sweep_flags, "csv");
    double f_min = 1e6;
    double f_max = 1e11;
    int sweep_samples = 51;
    sweep->add_option("--f-min", f_min, "lowest frequency, Hz");
    sweep->add_option("--f-max", f_max, "highest frequency, Hz");
    sweep->add_option("--samples", sweep_samples, "number of frequencies")->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "run the invariant suite");
    std::optional<double> ver_tol;
    ver->add_option("--tol", ver_tol, "replace every residual threshold");
    ver->add_option("--out", ver_flags.out_path, "also write the report to this file");

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (*ver) {
            if (ver_flags.out_path.empty()) {
                return run_verify(ver_tol, out);
            }
            std::ostringstream report;
            const int code = run_verify(ver_tol, report);
            out << report.str();
            std::ofstream file(ver_flags.out_path, std::ios::binary);
            file << report.str();
            if (!file) {
                throw IoError("cannot write '" + ver_flags.out_path + "'");
            }
            return code;
        }
        if (*pot) {
            const SolenoidConfig cfg = resolve_config(pot_flags);
            const SweepRange range{pot_rho_min.value_or(0.2 * cfg.radius()), pot_rho_max.value_or(10.0 * cfg.radius()),
                                   pot_samples};
            std::vector<double> notched;
            const Table t = potentials_table(cfg, range, pot_alpha, worker_count(), &notched);
            log_notched(err, notched);
            emit_table(pot_flags, "potentials", cfg, t, out);
        } else if (*dec) {
            const SolenoidConfig cfg = resolve_config(dec_flags);
            const SweepRange range{dec_rho_min.value_or(1.5 * cfg.radius()), dec_rho_max.value_or(10.0 * cfg.radius()),
                                   dec_samples};
            std::vector<double> notched;
            const Table t = decompose_table(cfg, range, dec_phases.empty() ? default_phases(10) : dec_phases,
                                            worker_count(), &notched);
            log_notched(err, notched);
            emit_table(dec_flags, "decompose", cfg, t, out);
        } else if (*obs) {
            const SolenoidConfig cfg = resolve_config(obs_flags);
            const nlohmann::json j = observables_json(cfg);
            emit(obs_flags, "observables", cfg, out, [&](std::ostream& os) {
                if (obs_flags.format == "json") {
                    os << j.dump(2) << '\n';
                    return;
                }
                os << "key,value\n";
                const nlohmann::json flat = j.flatten();
                for (const auto& [key, value] : flat.items()) {
                    os << key << ',' << format_double(value.get<double>()) << '\n';
                }
            });
        } else if (*sweep) {
            const SolenoidConfig cfg = resolve_config(sweep_flags);
            emit_table(sweep_flags, "interference-sweep", cfg, interference_sweep_table(cfg, f_min, f_max, sweep_samples),
                       out);
        }
        return kExitOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const std::logic_error& e) {
        // ConfigError, domain errors from out-of-range parameters, non-finite output
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
}

}  // namespace zerofield::cli
