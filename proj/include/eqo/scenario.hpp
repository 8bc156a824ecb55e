// scenario.hpp - Scenario configuration, built-in presets, runners, and series output

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eqo/model.hpp"
#include "eqo/observables.hpp"
#include "eqo/propagator.hpp"

namespace eqo::cli {

enum class Observable { Variance, Survival };
enum class RunMode { Single, KickCompare, ReferenceCompare };
enum class OutputFormat { Csv, Json };

// Uniform bath grid description; expanded to a model::BathGrid at run time.
struct GridSpec {
    double omega_start{0.0};
    double omega_step{0.0};
    std::size_t n_modes{0};
};

// Dense sampling grid for unkicked and reference runs. Survival series include
// t = 0; variance series sample (0, t_max] only.
struct TimeGrid {
    double t_max{0.0};
    std::size_t n_samples{0};
};

// A full experiment description. `mode` selects what run_scenario emits:
// Single -> one series; KickCompare -> kicked + unkicked; ReferenceCompare ->
// numeric + closed-form reference curves (survival only).
struct Scenario {
    std::string name;
    RunMode mode{RunMode::Single};
    Observable observable{Observable::Variance};
    double epsilon{0.0};
    double delta0{0.0};
    double omega{0.0};
    model::SpectrumSpec spectrum{model::FlatSpectrum{}};
    GridSpec grid{};
    propagator::KickSchedule kicks{0.0, 1, false};
    TimeGrid time_grid{};
    std::size_t fock_n_max{5};
    std::string output_path;
    OutputFormat format{OutputFormat::Csv};
};

// Parses the JSON scenario schema (see README for the field reference).
// Throws ConfigError with field-path diagnostics.
Scenario parse_scenario(const std::string& json_text);
Scenario parse_scenario_file(const std::string& path);

// Canonical JSON echo of a scenario; stable key order, round-trips through
// parse_scenario.
std::string serialize_scenario(const Scenario& s);

std::vector<std::string> preset_names();
Scenario preset(const std::string& name);
bool is_preset(const std::string& name);

// Runs the scenario and returns its series. Each series carries the scenario
// echo (plus derived constants) in its metadata.
std::vector<observables::TimeSeries> run_scenario(const Scenario& s);

// Writes series to `path` atomically (write-temp-then-rename). CSV columns:
// t_seconds, dimensionless_time, value, series_label; the dimensionless time
// is epsilon*t for variance series and lambda*t for survival series. JSON
// mirrors the CSV and adds the scenario metadata block. Byte-stable across
// runs on identical input.
void emit(const std::vector<observables::TimeSeries>& series, OutputFormat format,
          const std::string& path);
void emit(const observables::TimeSeries& series, OutputFormat format, const std::string& path);

// One measured invariant with its bound.
struct CheckRow {
    std::string name;
    double measured{0.0};
    double bound{0.0};
    bool ok{false};
};

struct CheckReport {
    std::vector<CheckRow> rows;
    bool ok{true};
};

// Runs the invariant suite along the scenario's own propagation path without
// emitting series: grid uniformity, R physicality, transfer-matrix invariants
// at every sample, excitation-norm unitarity (survival runs), and the
// uncertainty floor Var X * Var P >= 1 (variance runs).
CheckReport check_scenario(const Scenario& s);

// Renders the report; with_measurements adds measured value and bound columns.
std::string format_check_report(const CheckReport& report, bool with_measurements);

} // namespace eqo::cli
