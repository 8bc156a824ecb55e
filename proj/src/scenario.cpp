// scenario.cpp - Scenario parsing, presets, runners, and deterministic serialization

#include "eqo/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "eqo/errors.hpp"
#include "eqo/reference.hpp"

namespace eqo::cli {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using matexp::ComplexMatrix;

namespace {

// ---- parsing helpers ----

const json& require_field(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ConfigError("scenario: missing field '" + path + key + "'");
    }
    return *it;
}

double require_number(const json& j, const char* key, const std::string& path) {
    const json& v = require_field(j, key, path);
    if (!v.is_number()) {
        throw ConfigError("scenario: field '" + path + key + "' must be a number");
    }
    return v.get<double>();
}

std::size_t require_count(const json& j, const char* key, const std::string& path) {
    const json& v = require_field(j, key, path);
    if (!v.is_number_unsigned()) {
        throw ConfigError("scenario: field '" + path + key + "' must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

std::string require_string(const json& j, const char* key, const std::string& path) {
    const json& v = require_field(j, key, path);
    if (!v.is_string()) {
        throw ConfigError("scenario: field '" + path + key + "' must be a string");
    }
    return v.get<std::string>();
}

model::SpectrumSpec parse_spectrum(const json& j, const std::string& path) {
    const std::string kind = require_string(j, "kind", path);
    if (kind == "lorentzian") {
        return model::LorentzianSpectrum{require_number(j, "gamma_width_hz", path),
                                         require_number(j, "eta_hz", path),
                                         require_number(j, "omega_center_hz", path)};
    }
    if (kind == "ohmic") {
        return model::OhmicSpectrum{require_number(j, "xi_hz", path),
                                    require_number(j, "omega_cutoff_hz", path)};
    }
    if (kind == "flat") {
        return model::FlatSpectrum{require_number(j, "gamma_hz", path)};
    }
    if (kind == "explicit") {
        const json& list = require_field(j, "couplings_hz", path);
        if (!list.is_array()) {
            throw ConfigError("scenario: field '" + path + "couplings_hz' must be an array");
        }
        model::ExplicitSpectrum spec;
        for (const auto& g : list) {
            if (!g.is_number()) {
                throw ConfigError("scenario: '" + path + "couplings_hz' entries must be numbers");
            }
            spec.couplings.push_back(g.get<double>());
        }
        return spec;
    }
    throw ConfigError("scenario: unknown spectrum kind '" + kind + "' at '" + path +
                      "kind' (expected lorentzian|ohmic|flat|explicit)");
}

ordered_json spectrum_to_json(const model::SpectrumSpec& spec) {
    ordered_json j;
    if (const auto* lor = std::get_if<model::LorentzianSpectrum>(&spec)) {
        j["kind"] = "lorentzian";
        j["gamma_width_hz"] = lor->gamma_width;
        j["eta_hz"] = lor->eta;
        j["omega_center_hz"] = lor->omega_center;
    } else if (const auto* ohm = std::get_if<model::OhmicSpectrum>(&spec)) {
        j["kind"] = "ohmic";
        j["xi_hz"] = ohm->xi;
        j["omega_cutoff_hz"] = ohm->omega_cutoff;
    } else if (const auto* flat = std::get_if<model::FlatSpectrum>(&spec)) {
        j["kind"] = "flat";
        j["gamma_hz"] = flat->gamma;
    } else {
        j["kind"] = "explicit";
        j["couplings_hz"] = std::get<model::ExplicitSpectrum>(spec).couplings;
    }
    return j;
}

RunMode parse_mode(const std::string& text) {
    if (text == "single") return RunMode::Single;
    if (text == "kick_compare") return RunMode::KickCompare;
    if (text == "reference_compare") return RunMode::ReferenceCompare;
    throw ConfigError("scenario: unknown mode '" + text +
                      "' (expected single|kick_compare|reference_compare)");
}

Observable parse_observable(const std::string& text) {
    if (text == "variance") return Observable::Variance;
    if (text == "survival") return Observable::Survival;
    throw ConfigError("scenario: unknown observable '" + text +
                      "' (expected variance|survival)");
}

OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    throw ConfigError("scenario: unknown output format '" + text + "' (expected csv|json)");
}

const char* mode_name(RunMode m) {
    switch (m) {
    case RunMode::Single: return "single";
    case RunMode::KickCompare: return "kick_compare";
    default: return "reference_compare";
    }
}

const char* observable_name(Observable o) {
    return o == Observable::Variance ? "variance" : "survival";
}

const char* format_name(OutputFormat f) {
    return f == OutputFormat::Csv ? "csv" : "json";
}

// ---- derived model objects ----

model::BathGrid build_grid(const Scenario& s) {
    return model::BathGrid::uniform(s.grid.omega_start, s.grid.omega_step, s.grid.n_modes);
}

model::HamiltonianSpec build_hamiltonian(const Scenario& s, const model::BathGrid& grid) {
    model::HamiltonianSpec h;
    h.delta0 = s.delta0;
    h.epsilon = s.epsilon;
    h.couplings = model::coupling_from_spectrum(s.spectrum, grid, s.omega);
    h.detunings.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        h.detunings[j] = grid.frequencies[j] - s.omega;
    }
    h.interaction_sign = +1;
    return h;
}

// g evaluated at the carrier frequency, used for the Markovian rate.
double coupling_at_carrier(const model::SpectrumSpec& spec, const model::BathGrid& grid,
                           double omega) {
    if (const auto* lor = std::get_if<model::LorentzianSpectrum>(&spec)) {
        const double d = omega - lor->omega_center;
        return lor->eta * lor->gamma_width /
               std::sqrt(d * d + lor->gamma_width * lor->gamma_width);
    }
    if (const auto* ohm = std::get_if<model::OhmicSpectrum>(&spec)) {
        return omega > 0.0 ? std::sqrt(ohm->xi * omega) * std::exp(-omega / ohm->omega_cutoff)
                           : 0.0;
    }
    if (const auto* flat = std::get_if<model::FlatSpectrum>(&spec)) {
        return flat->gamma;
    }
    const auto& list = std::get<model::ExplicitSpectrum>(spec).couplings;
    std::size_t nearest = 0;
    for (std::size_t j = 1; j < grid.size(); ++j) {
        if (std::abs(grid.frequencies[j] - omega) < std::abs(grid.frequencies[nearest] - omega)) {
            nearest = j;
        }
    }
    return list.empty() ? 0.0 : list[nearest];
}

// epsilon for variance series, the Markovian lambda for survival series.
double dimensionless_scale(const Scenario& s, const model::BathGrid& grid) {
    if (s.observable == Observable::Variance) {
        return s.epsilon;
    }
    if (grid.size() < 2) {
        return 0.0;
    }
    const double g = coupling_at_carrier(s.spectrum, grid, s.omega);
    return g > 0.0 ? reference::markov_decay_rate(grid.mode_density(), g) : 0.0;
}

// ---- sampling walkers ----

using SampleSink = std::function<void(double t, const propagator::TransferMatrix&)>;

// Visits identity at t = 0 (optional) and n cumulative uniform steps up to
// t_max. All step factors share one generator, so the running product equals
// transfer(r1, t) at every sample.
void walk_dense(const model::RMatrix& r1, double t_max, std::size_t n, bool include_t0,
                const SampleSink& sink) {
    const std::size_t dim = r1.layout.matrix_dim();
    propagator::TransferMatrix running{r1.layout, ComplexMatrix::Identity(dim, dim)};
    if (include_t0) {
        sink(0.0, running);
    }
    const double dt = t_max / static_cast<double>(n);
    const propagator::TransferMatrix step = propagator::transfer(r1, dt);
    for (std::size_t k = 1; k <= n; ++k) {
        running = propagator::compose(running, step);
        sink(static_cast<double>(k) * dt, running);
    }
}

// Visits cycle boundaries t = 2 k tau0, k = 1..n_cycles (capped at t_max when
// t_max > 0), accumulating powers of the cycle matrix.
void walk_kicked(const model::HamiltonianSpec& h, const model::ModeLayout& layout,
                 const propagator::KickSchedule& kicks, double t_max, bool include_t0,
                 const SampleSink& sink) {
    const std::size_t dim = layout.matrix_dim();
    propagator::TransferMatrix running{layout, ComplexMatrix::Identity(dim, dim)};
    if (include_t0) {
        sink(0.0, running);
    }
    const propagator::TransferMatrix cycle = propagator::kick_cycle(h, layout, kicks.tau0);
    for (std::size_t k = 1; k <= kicks.n_cycles; ++k) {
        const double t = 2.0 * static_cast<double>(k) * kicks.tau0;
        if (t_max > 0.0 && t > t_max * (1.0 + 1e-9)) {
            break;
        }
        running = propagator::compose(running, cycle);
        sink(t, running);
    }
}

double evaluate(Observable obs, const propagator::TransferMatrix& m,
                const observables::InitialMoments& vacuum) {
    return obs == Observable::Variance ? observables::quadrature_variance(m, vacuum)
                                       : observables::survival_probability(m);
}

// Merges rows of b into a, keeping times strictly increasing; exact duplicate
// times keep the value from a.
void merge_rows(std::vector<std::pair<double, double>>& a,
                const std::vector<std::pair<double, double>>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end(),
                        [](const auto& x, const auto& y) { return x.first == y.first; }),
            a.end());
}

observables::TimeSeries series_from_rows(std::string label,
                                         const std::vector<std::pair<double, double>>& rows,
                                         const std::string& metadata) {
    observables::TimeSeries series;
    series.label = std::move(label);
    series.metadata = metadata;
    series.times.reserve(rows.size());
    series.values.reserve(rows.size());
    for (const auto& [t, v] : rows) {
        series.times.push_back(t);
        series.values.push_back(v);
    }
    series.validate();
    return series;
}

std::string metadata_echo(const Scenario& s, const model::BathGrid& grid) {
    ordered_json j = json::parse(serialize_scenario(s));
    ordered_json derived;
    derived["mode_density_s"] = grid.size() >= 2 ? grid.mode_density() : 0.0;
    derived["dimensionless_scale_hz"] = dimensionless_scale(s, grid);
    j["derived"] = derived;
    return j.dump();
}

void validate_time_grid(const Scenario& s) {
    if (!(s.time_grid.t_max > 0.0) || s.time_grid.n_samples == 0) {
        throw ConfigError("scenario '" + s.name +
                          "': time_grid with t_max_s > 0 and n_samples >= 1 required");
    }
}

void validate_kicks(const Scenario& s) {
    if (!(s.kicks.tau0 > 0.0) || s.kicks.n_cycles == 0) {
        throw ConfigError("scenario '" + s.name +
                          "': kick schedule with tau0_s > 0 and n_cycles >= 1 required");
    }
}

void validate_survival(const Scenario& s) {
    if (s.observable == Observable::Survival && s.epsilon != 0.0) {
        throw ConfigError("scenario '" + s.name +
                          "': survival probability requires epsilon_hz = 0");
    }
}

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("scenario: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("scenario: top level must be a JSON object");
    }

    Scenario s;
    s.name = require_string(j, "name", "");
    s.mode = parse_mode(require_string(j, "mode", ""));
    s.observable = parse_observable(require_string(j, "observable", ""));

    const json& ham = require_field(j, "hamiltonian", "");
    s.epsilon = require_number(ham, "epsilon_hz", "hamiltonian.");
    s.delta0 = ham.contains("delta0_hz") ? require_number(ham, "delta0_hz", "hamiltonian.") : 0.0;
    s.omega = require_number(ham, "omega_hz", "hamiltonian.");
    s.spectrum = parse_spectrum(require_field(ham, "spectrum", "hamiltonian."),
                                "hamiltonian.spectrum.");
    const json& grid = require_field(ham, "grid", "hamiltonian.");
    s.grid.omega_start = require_number(grid, "omega_start_hz", "hamiltonian.grid.");
    s.grid.omega_step = require_number(grid, "omega_step_hz", "hamiltonian.grid.");
    s.grid.n_modes = require_count(grid, "n_modes", "hamiltonian.grid.");

    if (j.contains("kicks")) {
        const json& kicks = j["kicks"];
        s.kicks.kicks_enabled = kicks.contains("enabled")
                                    ? require_field(kicks, "enabled", "kicks.").get<bool>()
                                    : true;
        s.kicks.tau0 = require_number(kicks, "tau0_s", "kicks.");
        s.kicks.n_cycles = require_count(kicks, "n_cycles", "kicks.");
    }
    if (j.contains("time_grid")) {
        const json& tg = j["time_grid"];
        s.time_grid.t_max = require_number(tg, "t_max_s", "time_grid.");
        s.time_grid.n_samples = require_count(tg, "n_samples", "time_grid.");
    }
    if (j.contains("fock_n_max")) {
        s.fock_n_max = require_count(j, "fock_n_max", "");
    }
    if (j.contains("output")) {
        const json& out = j["output"];
        s.output_path = require_string(out, "path", "output.");
        s.format = parse_format(out.contains("format")
                                    ? require_string(out, "format", "output.")
                                    : "csv");
    }
    return s;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("scenario: cannot open config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

std::string serialize_scenario(const Scenario& s) {
    ordered_json j;
    j["name"] = s.name;
    j["mode"] = mode_name(s.mode);
    j["observable"] = observable_name(s.observable);
    ordered_json ham;
    ham["epsilon_hz"] = s.epsilon;
    ham["delta0_hz"] = s.delta0;
    ham["omega_hz"] = s.omega;
    ham["spectrum"] = spectrum_to_json(s.spectrum);
    ordered_json grid;
    grid["omega_start_hz"] = s.grid.omega_start;
    grid["omega_step_hz"] = s.grid.omega_step;
    grid["n_modes"] = s.grid.n_modes;
    ham["grid"] = grid;
    j["hamiltonian"] = ham;
    ordered_json kicks;
    kicks["enabled"] = s.kicks.kicks_enabled;
    kicks["tau0_s"] = s.kicks.tau0;
    kicks["n_cycles"] = s.kicks.n_cycles;
    j["kicks"] = kicks;
    ordered_json tg;
    tg["t_max_s"] = s.time_grid.t_max;
    tg["n_samples"] = s.time_grid.n_samples;
    j["time_grid"] = tg;
    j["fock_n_max"] = s.fock_n_max;
    ordered_json out;
    out["path"] = s.output_path;
    out["format"] = format_name(s.format);
    j["output"] = out;
    return j.dump(2) + "\n";
}

std::vector<std::string> preset_names() {
    return {"fig1a", "fig1b", "fig2a", "fig2b"};
}

bool is_preset(const std::string& name) {
    const auto names = preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

Scenario preset(const std::string& name) {
    Scenario s;
    s.name = name;
    s.omega = 1e9;
    if (name == "fig1a") {
        // Squeezing against a broad Lorentzian bath; kicked vs unkicked variance.
        s.mode = RunMode::KickCompare;
        s.observable = Observable::Variance;
        s.epsilon = 1e8;
        s.spectrum = model::LorentzianSpectrum{2e9, 5e7, 1e9};
        s.grid = GridSpec{1e7, 1e7, 200};
        s.kicks = propagator::KickSchedule{1.67e-9, 5, true};
        s.time_grid = TimeGrid{2e-8, 200};
        s.output_path = "fig1a.csv";
    } else if (name == "fig1b") {
        // Strong squeezing against an Ohmic bath. One kick cycle spans
        // epsilon * 2 tau0 = 3.5, so the boundaries sit at dimensionless
        // times 3.5, 7, 10.5, 14 and t_max covers four cycles.
        s.mode = RunMode::KickCompare;
        s.observable = Observable::Variance;
        s.epsilon = 7e8;
        s.spectrum = model::OhmicSpectrum{1e6, 1e9};
        s.grid = GridSpec{1e7, 1e7, 200};
        s.kicks = propagator::KickSchedule{2.5e-9, 4, true};
        s.time_grid = TimeGrid{2e-8, 200};
        s.output_path = "fig1b.csv";
    } else if (name == "fig2a") {
        // Narrow Lorentzian bath on a re-centered grid; numeric survival vs
        // the closed-form and Markovian references.
        s.mode = RunMode::ReferenceCompare;
        s.observable = Observable::Survival;
        s.epsilon = 0.0;
        s.spectrum = model::LorentzianSpectrum{1e6, 2.8209e6, 1e9};
        s.grid = GridSpec{5.05e8, 5e6, 200};
        s.time_grid = TimeGrid{8e-7, 160};
        s.output_path = "fig2a.csv";
    } else if (name == "fig2b") {
        // Flat spectrum; numeric survival coincides with the Markovian decay.
        s.mode = RunMode::ReferenceCompare;
        s.observable = Observable::Survival;
        s.epsilon = 0.0;
        s.spectrum = model::FlatSpectrum{5.6419e6};
        s.grid = GridSpec{1e7, 1e7, 200};
        s.time_grid = TimeGrid{2e-7, 100};
        s.output_path = "fig2b.csv";
    } else {
        throw ConfigError("unknown preset '" + name + "'; available: fig1a fig1b fig2a fig2b");
    }
    return s;
}

std::vector<observables::TimeSeries> run_scenario(const Scenario& s) {
    validate_survival(s);
    const model::BathGrid grid = build_grid(s);
    const model::ModeLayout layout{grid.size()};
    const model::HamiltonianSpec h = build_hamiltonian(s, grid);
    const model::RMatrix r1 = model::assemble_R(h, layout, 1.0);
    const observables::InitialMoments vacuum = observables::InitialMoments::vacuum(layout);
    const std::string meta = metadata_echo(s, grid);
    const bool include_t0 = s.observable == Observable::Survival;

    auto collect_rows = [&](auto&& walker) {
        std::vector<std::pair<double, double>> rows;
        walker([&](double t, const propagator::TransferMatrix& m) {
            rows.emplace_back(t, evaluate(s.observable, m, vacuum));
        });
        return rows;
    };
    auto dense_rows = [&]() {
        validate_time_grid(s);
        return collect_rows([&](const SampleSink& sink) {
            walk_dense(r1, s.time_grid.t_max, s.time_grid.n_samples, include_t0, sink);
        });
    };
    auto kicked_rows = [&](double t_cap) {
        validate_kicks(s);
        return collect_rows([&](const SampleSink& sink) {
            walk_kicked(h, layout, s.kicks, t_cap, include_t0, sink);
        });
    };

    std::vector<observables::TimeSeries> series;
    const std::string obs = observable_name(s.observable);

    switch (s.mode) {
    case RunMode::Single: {
        if (s.kicks.kicks_enabled) {
            series.push_back(series_from_rows(obs + std::string("_kicked"),
                                              kicked_rows(s.time_grid.t_max), meta));
        } else {
            series.push_back(series_from_rows(obs, dense_rows(), meta));
        }
        break;
    }
    case RunMode::KickCompare: {
        validate_time_grid(s);
        validate_kicks(s);
        series.push_back(series_from_rows(obs + std::string("_kicked"),
                                          kicked_rows(s.time_grid.t_max), meta));
        // The unkicked curve samples the dense grid plus every cycle boundary,
        // so the two curves can be compared at identical times.
        auto rows = dense_rows();
        auto boundary_rows = collect_rows([&](const SampleSink& sink) {
            const std::size_t dim = layout.matrix_dim();
            propagator::TransferMatrix running{layout,
                                               ComplexMatrix::Identity(dim, dim)};
            const propagator::TransferMatrix step =
                propagator::transfer(r1, 2.0 * s.kicks.tau0);
            for (std::size_t k = 1; k <= s.kicks.n_cycles; ++k) {
                const double t = 2.0 * static_cast<double>(k) * s.kicks.tau0;
                if (t > s.time_grid.t_max * (1.0 + 1e-9)) {
                    break;
                }
                running = propagator::compose(running, step);
                sink(t, running);
            }
        });
        merge_rows(rows, boundary_rows);
        series.push_back(series_from_rows(obs + std::string("_unkicked"), rows, meta));
        break;
    }
    case RunMode::ReferenceCompare: {
        if (s.observable != Observable::Survival) {
            throw ConfigError("scenario '" + s.name +
                              "': reference_compare requires observable = survival");
        }
        auto rows = dense_rows();
        series.push_back(series_from_rows("survival_numeric", rows, meta));

        std::vector<double> times;
        times.reserve(rows.size());
        for (const auto& [t, v] : rows) {
            times.push_back(t);
        }
        if (const auto* lor = std::get_if<model::LorentzianSpectrum>(&s.spectrum)) {
            reference::LorentzianExactParams params{lor->gamma_width, lor->eta,
                                                    grid.mode_density(), s.omega};
            std::vector<std::pair<double, double>> exact_rows;
            exact_rows.reserve(times.size());
            for (double t : times) {
                exact_rows.emplace_back(t, reference::lorentzian_exact_survival(params, t));
            }
            series.push_back(series_from_rows("survival_exact", exact_rows, meta));
        }
        const double lambda = dimensionless_scale(s, grid);
        observables::TimeSeries markov = reference::lindblad_evolve(
            lambda, reference::FockState::number_state(1, s.fock_n_max), times);
        markov.label = "survival_markov";
        markov.metadata = meta;
        series.push_back(std::move(markov));
        break;
    }
    }
    return series;
}

namespace {

void append_csv_value(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

double scale_from_metadata(const std::string& metadata) {
    if (metadata.empty()) {
        return 0.0;
    }
    const json j = json::parse(metadata);
    if (j.contains("derived") && j["derived"].contains("dimensionless_scale_hz")) {
        return j["derived"]["dimensionless_scale_hz"].get<double>();
    }
    return 0.0;
}

void write_atomically(const std::string& path, const std::string& contents) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("emit: cannot open '" + tmp.string() + "' for writing");
        }
        out << contents;
        out.flush();
        if (!out) {
            throw std::runtime_error("emit: write failed for '" + tmp.string() + "'");
        }
    }
    std::filesystem::rename(tmp, target);
}

} // namespace

void emit(const std::vector<observables::TimeSeries>& series, OutputFormat format,
          const std::string& path) {
    for (const auto& s : series) {
        s.validate();
    }
    if (format == OutputFormat::Csv) {
        std::string out = "t_seconds,dimensionless_time,value,series_label\n";
        for (const auto& s : series) {
            const double scale = scale_from_metadata(s.metadata);
            for (std::size_t i = 0; i < s.times.size(); ++i) {
                append_csv_value(out, s.times[i]);
                out += ',';
                append_csv_value(out, scale * s.times[i]);
                out += ',';
                append_csv_value(out, s.values[i]);
                out += ',';
                out += s.label;
                out += '\n';
            }
        }
        write_atomically(path, out);
        return;
    }
    ordered_json root;
    root["scenario"] = nullptr;
    for (const auto& s : series) {
        if (!s.metadata.empty()) {
            root["scenario"] = json::parse(s.metadata);
            break;
        }
    }
    root["series"] = ordered_json::array();
    for (const auto& s : series) {
        const double scale = scale_from_metadata(s.metadata);
        ordered_json entry;
        entry["label"] = s.label;
        entry["t_seconds"] = s.times;
        ordered_json dimensionless = ordered_json::array();
        for (double t : s.times) {
            dimensionless.push_back(scale * t);
        }
        entry["dimensionless_time"] = dimensionless;
        entry["values"] = s.values;
        root["series"].push_back(entry);
    }
    write_atomically(path, root.dump(2) + "\n");
}

void emit(const observables::TimeSeries& series, OutputFormat format, const std::string& path) {
    emit(std::vector<observables::TimeSeries>{series}, format, path);
}

CheckReport check_scenario(const Scenario& s) {
    CheckReport report;
    auto add = [&](const std::string& name, double measured, double bound) {
        const bool ok = measured <= bound;
        report.rows.push_back(CheckRow{name, measured, bound, ok});
        report.ok = report.ok && ok;
    };

    validate_survival(s);
    const model::BathGrid grid = build_grid(s);

    double grid_defect = 0.0;
    if (grid.size() >= 2) {
        const double d0 = grid.frequencies[1] - grid.frequencies[0];
        for (std::size_t j = 1; j + 1 < grid.size(); ++j) {
            grid_defect = std::max(
                grid_defect,
                std::abs((grid.frequencies[j + 1] - grid.frequencies[j]) - d0) / std::abs(d0));
        }
    }
    add("bath grid uniform spacing (relative)", grid_defect, 1e-9);

    const model::ModeLayout layout{grid.size()};
    const model::HamiltonianSpec h = build_hamiltonian(s, grid);
    const model::RMatrix r1 = model::assemble_R(h, layout, 1.0);
    const std::size_t dim = layout.total_dim();
    add("R symmetry max|R - R^T|",
        (r1.data - r1.data.transpose().eval()).cwiseAbs().maxCoeff(), 1e-14);
    const auto e_block = r1.data.topLeftCorner(dim, dim);
    const auto p_block = r1.data.topRightCorner(dim, dim);
    const auto c_block = r1.data.bottomRightCorner(dim, dim);
    add("R physicality max|P^dag + P|",
        (p_block.adjoint() + p_block).cwiseAbs().maxCoeff(), 1e-14);
    add("R physicality max|C + conj(E)|",
        (c_block + e_block.conjugate()).cwiseAbs().maxCoeff(), 1e-14);

    const double t_ref = s.time_grid.t_max > 0.0
                             ? s.time_grid.t_max
                             : 2.0 * s.kicks.tau0 * static_cast<double>(s.kicks.n_cycles);
    const propagator::TransferMatrix fresh = propagator::transfer(r1, t_ref);
    const propagator::InvariantDefects fresh_defects = propagator::invariant_defects(fresh);
    add("transfer symplectic defect (fresh)", fresh_defects.symplectic, propagator::kFreshTol);
    add("transfer conjugation defect (fresh)", fresh_defects.conjugation, propagator::kFreshTol);

    const observables::InitialMoments vacuum = observables::InitialMoments::vacuum(layout);
    propagator::InvariantDefects composed{0.0, 0.0};
    double excitation_defect = 0.0;
    double survival_range_defect = 0.0;
    double floor_shortfall = 0.0;
    const SampleSink probe = [&](double, const propagator::TransferMatrix& m) {
        const propagator::InvariantDefects d = propagator::invariant_defects(m);
        composed.symplectic = std::max(composed.symplectic, d.symplectic);
        composed.conjugation = std::max(composed.conjugation, d.conjugation);
        if (s.observable == Observable::Survival) {
            excitation_defect =
                std::max(excitation_defect, std::abs(observables::excitation_norm(m) - 1.0));
            const double p = observables::survival_probability(m);
            survival_range_defect = std::max({survival_range_defect, -p, p - 1.0, 0.0});
        } else {
            const double product =
                observables::quadrature_variance(m, vacuum, observables::Quadrature::X) *
                observables::quadrature_variance(m, vacuum, observables::Quadrature::P);
            floor_shortfall = std::max(floor_shortfall, std::max(0.0, 1.0 - product));
        }
    };

    const bool kicked_path =
        s.mode == RunMode::KickCompare || (s.mode == RunMode::Single && s.kicks.kicks_enabled);
    if (kicked_path) {
        validate_kicks(s);
        walk_kicked(h, layout, s.kicks, s.time_grid.t_max, false, probe);
    }
    if (!kicked_path || s.mode == RunMode::KickCompare) {
        validate_time_grid(s);
        walk_dense(r1, s.time_grid.t_max, s.time_grid.n_samples, false, probe);
    }
    add("composed symplectic defect", composed.symplectic, propagator::kDriftTol);
    add("composed conjugation defect", composed.conjugation, propagator::kDriftTol);
    if (s.observable == Observable::Survival) {
        add("excitation norm max|sum|A|^2 - 1|", excitation_defect, 1e-10);
        add("survival within [0, 1]", survival_range_defect, 1e-10);
    } else {
        add("uncertainty floor max(0, 1 - VarX*VarP)", floor_shortfall, 1e-9);
    }
    return report;
}

std::string format_check_report(const CheckReport& report, bool with_measurements) {
    std::string out;
    for (const auto& row : report.rows) {
        out += row.ok ? "[PASS] " : "[FAIL] ";
        out += row.name;
        if (with_measurements) {
            char buf[80];
            std::snprintf(buf, sizeof(buf), "  measured=%.3e bound=%.3e", row.measured,
                          row.bound);
            out += buf;
        }
        out += '\n';
    }
    out += report.ok ? "check: PASS" : "check: FAIL";
    out += '\n';
    return out;
}

} // namespace eqo::cli
