#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "eqo/errors.hpp"
#include "eqo/scenario.hpp"

using eqo::cli::Observable;
using eqo::cli::OutputFormat;
using eqo::cli::RunMode;
using eqo::cli::Scenario;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

// Small and fast: four bath modes around the carrier.
Scenario small_survival_scenario() {
    Scenario s;
    s.name = "small_survival";
    s.mode = RunMode::Single;
    s.observable = Observable::Survival;
    s.epsilon = 0.0;
    s.omega = 1e9;
    s.spectrum = eqo::model::FlatSpectrum{2e7};
    s.grid = eqo::cli::GridSpec{9.7e8, 2e7, 4};
    s.time_grid = eqo::cli::TimeGrid{4e-8, 5};
    return s;
}

Scenario small_kick_compare_scenario() {
    Scenario s;
    s.name = "small_kicks";
    s.mode = RunMode::KickCompare;
    s.observable = Observable::Variance;
    s.epsilon = 1e8;
    s.omega = 1e9;
    s.spectrum = eqo::model::LorentzianSpectrum{2e9, 5e7, 1e9};
    s.grid = eqo::cli::GridSpec{2e8, 2e8, 5};
    s.kicks = eqo::propagator::KickSchedule{1.7e-9, 3, true};
    s.time_grid = eqo::cli::TimeGrid{2e-8, 10};
    return s;
}

} // namespace

TEST_SUITE("scenario") {

TEST_CASE("preset catalogue") {
    const auto names = eqo::cli::preset_names();
    REQUIRE(names.size() == 4);
    for (const auto& name : names) {
        CHECK(eqo::cli::is_preset(name));
        CHECK(eqo::cli::preset(name).name == name);
    }
    CHECK_FALSE(eqo::cli::is_preset("fig9z"));
    CHECK_THROWS_AS(eqo::cli::preset("fig9z"), eqo::ConfigError);
}

TEST_CASE("serialization round-trips every preset") {
    for (const auto& name : eqo::cli::preset_names()) {
        const std::string first = eqo::cli::serialize_scenario(eqo::cli::preset(name));
        const Scenario reparsed = eqo::cli::parse_scenario(first);
        CHECK(eqo::cli::serialize_scenario(reparsed) == first);
    }
}

TEST_CASE("parse reports missing fields with their path") {
    const std::string text = R"({"name": "x", "mode": "single", "observable": "variance",
        "hamiltonian": {"epsilon_hz": 0.0, "omega_hz": 1e9,
            "spectrum": {"kind": "flat", "gamma_hz": 1e6}}})";
    try {
        eqo::cli::parse_scenario(text);
        FAIL("expected ConfigError");
    } catch (const eqo::ConfigError& e) {
        CHECK(std::string(e.what()).find("hamiltonian.grid") != std::string::npos);
    }
}

TEST_CASE("parse rejects malformed JSON and bad enum values") {
    CHECK_THROWS_AS(eqo::cli::parse_scenario("{not json"), eqo::ConfigError);
    const std::string bad_mode = R"({"name": "x", "mode": "sideways",
        "observable": "variance",
        "hamiltonian": {"epsilon_hz": 0.0, "omega_hz": 1e9,
            "spectrum": {"kind": "flat", "gamma_hz": 1e6},
            "grid": {"omega_start_hz": 1e7, "omega_step_hz": 1e7, "n_modes": 4}}})";
    CHECK_THROWS_AS(eqo::cli::parse_scenario(bad_mode), eqo::ConfigError);
    const std::string bad_kind = R"({"name": "x", "mode": "single",
        "observable": "variance",
        "hamiltonian": {"epsilon_hz": 0.0, "omega_hz": 1e9,
            "spectrum": {"kind": "boxcar"},
            "grid": {"omega_start_hz": 1e7, "omega_step_hz": 1e7, "n_modes": 4}}})";
    CHECK_THROWS_AS(eqo::cli::parse_scenario(bad_kind), eqo::ConfigError);
    const std::string bad_type = R"({"name": "x", "mode": "single",
        "observable": "variance",
        "hamiltonian": {"epsilon_hz": "zero", "omega_hz": 1e9,
            "spectrum": {"kind": "flat", "gamma_hz": 1e6},
            "grid": {"omega_start_hz": 1e7, "omega_step_hz": 1e7, "n_modes": 4}}})";
    CHECK_THROWS_AS(eqo::cli::parse_scenario(bad_type), eqo::ConfigError);
}

TEST_CASE("parse accepts explicit coupling lists") {
    const std::string text = R"({"name": "x", "mode": "single", "observable": "survival",
        "hamiltonian": {"epsilon_hz": 0.0, "omega_hz": 1e9,
            "spectrum": {"kind": "explicit", "couplings_hz": [1e6, 2e6, 3e6]},
            "grid": {"omega_start_hz": 9.9e8, "omega_step_hz": 1e6, "n_modes": 3}},
        "time_grid": {"t_max_s": 1e-7, "n_samples": 4}})";
    const Scenario s = eqo::cli::parse_scenario(text);
    const auto* fixed = std::get_if<eqo::model::ExplicitSpectrum>(&s.spectrum);
    REQUIRE(fixed != nullptr);
    CHECK(fixed->couplings == std::vector<double>{1e6, 2e6, 3e6});
    CHECK_NOTHROW(eqo::cli::run_scenario(s));
}

TEST_CASE("parse_scenario_file reads configs and rejects missing paths") {
    const auto path = temp_path("eqo_scenario_roundtrip.json");
    std::ofstream(path) << eqo::cli::serialize_scenario(small_survival_scenario());
    const Scenario s = eqo::cli::parse_scenario_file(path.string());
    CHECK(s.name == "small_survival");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(eqo::cli::parse_scenario_file(path.string()), eqo::ConfigError);
}

TEST_CASE("run_scenario validates observable and mode combinations") {
    Scenario squeezing_survival = small_survival_scenario();
    squeezing_survival.epsilon = 1e8;
    CHECK_THROWS_AS(eqo::cli::run_scenario(squeezing_survival), eqo::ConfigError);

    Scenario variance_reference = small_kick_compare_scenario();
    variance_reference.mode = RunMode::ReferenceCompare;
    CHECK_THROWS_AS(eqo::cli::run_scenario(variance_reference), eqo::ConfigError);

    Scenario no_kicks = small_kick_compare_scenario();
    no_kicks.kicks.tau0 = 0.0;
    CHECK_THROWS_AS(eqo::cli::run_scenario(no_kicks), eqo::ConfigError);
}

TEST_CASE("survival series include t = 0 and start at one") {
    const auto series = eqo::cli::run_scenario(small_survival_scenario());
    REQUIRE(series.size() == 1);
    CHECK(series[0].label == "survival");
    REQUIRE(series[0].times.size() == 6);
    CHECK(series[0].times.front() == 0.0);
    CHECK(series[0].values.front() == 1.0);
}

TEST_CASE("variance series sample the open interval (0, t_max]") {
    Scenario s = small_kick_compare_scenario();
    s.mode = RunMode::Single;
    s.kicks.kicks_enabled = false;
    const auto series = eqo::cli::run_scenario(s);
    REQUIRE(series.size() == 1);
    CHECK(series[0].label == "variance");
    REQUIRE(series[0].times.size() == 10);
    CHECK(series[0].times.front() > 0.0);
    CHECK(series[0].times.back() == doctest::Approx(2e-8).epsilon(1e-12));
}

TEST_CASE("kick comparison aligns kicked samples with the unkicked series") {
    const auto series = eqo::cli::run_scenario(small_kick_compare_scenario());
    REQUIRE(series.size() == 2);
    CHECK(series[0].label == "variance_kicked");
    CHECK(series[1].label == "variance_unkicked");
    CHECK(series[0].times.size() == 3);
    // Every cycle boundary must appear in the unkicked curve bit-for-bit.
    for (double t : series[0].times) {
        bool found = false;
        for (double u : series[1].times) {
            found = found || (u == t);
        }
        CHECK(found);
    }
    CHECK(series[1].times.size() >= 13);
}

TEST_CASE("reference comparison emits numeric, exact, and markov series") {
    Scenario s = small_survival_scenario();
    s.mode = RunMode::ReferenceCompare;
    s.spectrum = eqo::model::LorentzianSpectrum{5e7, 2e7, 1e9};
    const auto series = eqo::cli::run_scenario(s);
    REQUIRE(series.size() == 3);
    CHECK(series[0].label == "survival_numeric");
    CHECK(series[1].label == "survival_exact");
    CHECK(series[2].label == "survival_markov");
    for (const auto& curve : series) {
        CHECK(curve.times == series[0].times);
        CHECK(curve.values.front() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("flat-spectrum reference comparison omits the exact curve") {
    Scenario s = small_survival_scenario();
    s.mode = RunMode::ReferenceCompare;
    const auto series = eqo::cli::run_scenario(s);
    REQUIRE(series.size() == 2);
    CHECK(series[0].label == "survival_numeric");
    CHECK(series[1].label == "survival_markov");
}

TEST_CASE("emit writes a header-only CSV for an empty series list") {
    const auto path = temp_path("eqo_empty.csv");
    eqo::cli::emit(std::vector<eqo::observables::TimeSeries>{}, OutputFormat::Csv,
                   path.string());
    CHECK(read_file(path) == "t_seconds,dimensionless_time,value,series_label\n");
    std::filesystem::remove(path);
}

TEST_CASE("emit CSV carries the dimensionless time scaled by epsilon") {
    Scenario s = small_kick_compare_scenario();
    s.mode = RunMode::Single;
    s.kicks.kicks_enabled = false;
    const auto series = eqo::cli::run_scenario(s);
    const auto path = temp_path("eqo_variance.csv");
    eqo::cli::emit(series, OutputFormat::Csv, path.string());
    std::istringstream lines(read_file(path));
    std::string line;
    std::getline(lines, line);
    CHECK(line == "t_seconds,dimensionless_time,value,series_label");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        double t = 0.0;
        double eps_t = 0.0;
        double value = 0.0;
        char label[64] = {0};
        REQUIRE(std::sscanf(line.c_str(), "%lg,%lg,%lg,%63s", &t, &eps_t, &value, label) == 4);
        CHECK(eps_t == doctest::Approx(s.epsilon * t).epsilon(1e-12));
        CHECK(std::string(label) == "variance");
        ++rows;
    }
    CHECK(rows == series[0].times.size());
    std::filesystem::remove(path);
}

TEST_CASE("two-point series round-trips through the JSON output") {
    eqo::observables::TimeSeries series;
    series.times = {1.25e-9, 2.5e-9};
    series.values = {0.875, 0.4375};
    series.label = "survival";
    const auto path = temp_path("eqo_two_point.json");
    eqo::cli::emit(series, OutputFormat::Json, path.string());
    const nlohmann::json doc = nlohmann::json::parse(read_file(path));
    REQUIRE(doc["series"].size() == 1);
    const auto& entry = doc["series"][0];
    CHECK(entry["label"].get<std::string>() == "survival");
    CHECK(entry["t_seconds"].get<std::vector<double>>() == series.times);
    CHECK(entry["values"].get<std::vector<double>>() == series.values);
    std::filesystem::remove(path);
}

TEST_CASE("JSON output echoes the scenario in its metadata block") {
    const Scenario s = small_survival_scenario();
    const auto series = eqo::cli::run_scenario(s);
    const auto path = temp_path("eqo_scenario_echo.json");
    eqo::cli::emit(series, OutputFormat::Json, path.string());
    const nlohmann::json doc = nlohmann::json::parse(read_file(path));
    CHECK(doc["scenario"]["name"].get<std::string>() == "small_survival");
    CHECK(doc["scenario"]["mode"].get<std::string>() == "single");
    CHECK(doc["scenario"]["derived"].contains("dimensionless_scale_hz"));
    std::filesystem::remove(path);
}

TEST_CASE("emit leaves no temporary file behind and overwrites cleanly") {
    const auto path = temp_path("eqo_atomic.csv");
    const auto series = eqo::cli::run_scenario(small_survival_scenario());
    eqo::cli::emit(series, OutputFormat::Csv, path.string());
    eqo::cli::emit(series, OutputFormat::Csv, path.string());
    CHECK(std::filesystem::exists(path));
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove(path);
}

TEST_CASE("repeated runs produce byte-identical CSV output") {
    const Scenario s = small_kick_compare_scenario();
    const auto path_a = temp_path("eqo_repeat_a.csv");
    const auto path_b = temp_path("eqo_repeat_b.csv");
    eqo::cli::emit(eqo::cli::run_scenario(s), OutputFormat::Csv, path_a.string());
    eqo::cli::emit(eqo::cli::run_scenario(s), OutputFormat::Csv, path_b.string());
    CHECK(read_file(path_a) == read_file(path_b));
    std::filesystem::remove(path_a);
    std::filesystem::remove(path_b);
}

TEST_CASE("the flat-spectrum preset starts its survival series at exactly one") {
    const Scenario s = eqo::cli::preset("fig2b");
    const auto series = eqo::cli::run_scenario(s);
    REQUIRE(!series.empty());
    const auto path = temp_path("eqo_fig2b.csv");
    eqo::cli::emit(series, s.format, path.string());
    std::istringstream lines(read_file(path));
    std::string header;
    std::string first_row;
    std::getline(lines, header);
    std::getline(lines, first_row);
    CHECK(first_row == "0,0,1,survival_numeric");
    std::filesystem::remove(path);
}

TEST_CASE("check_scenario passes its invariant rows on a healthy scenario") {
    const auto report = eqo::cli::check_scenario(small_kick_compare_scenario());
    CHECK(report.ok);
    REQUIRE(!report.rows.empty());
    for (const auto& row : report.rows) {
        CHECK(row.ok);
        CHECK(row.measured <= row.bound);
    }
    const std::string text = eqo::cli::format_check_report(report, true);
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("check: PASS") != std::string::npos);
    CHECK(text.find("measured=") != std::string::npos);

    const auto survival_report = eqo::cli::check_scenario(small_survival_scenario());
    CHECK(survival_report.ok);
}

} // TEST_SUITE
