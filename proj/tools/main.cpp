// eqosim - scenario runner for the EQO bath-coupling simulator

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqo/errors.hpp"
#include "eqo/scenario.hpp"

namespace {

eqo::cli::Scenario resolve_scenario(const std::string& ref) {
    if (eqo::cli::is_preset(ref)) {
        return eqo::cli::preset(ref);
    }
    return eqo::cli::parse_scenario_file(ref);
}

eqo::cli::OutputFormat resolve_format(const std::string& text) {
    if (text == "csv") return eqo::cli::OutputFormat::Csv;
    if (text == "json") return eqo::cli::OutputFormat::Json;
    throw eqo::ConfigError("--format must be csv or json, got '" + text + "'");
}

int run_command(const std::string& ref, const std::string& out_override,
                const std::string& format_override, bool tolerance_report) {
    eqo::cli::Scenario s = resolve_scenario(ref);
    if (!out_override.empty()) {
        s.output_path = out_override;
    }
    if (!format_override.empty()) {
        s.format = resolve_format(format_override);
    }
    if (s.output_path.empty()) {
        throw eqo::ConfigError("scenario '" + s.name +
                               "' has no output path; pass --out or set output.path");
    }

    const std::vector<eqo::observables::TimeSeries> series = eqo::cli::run_scenario(s);
    eqo::cli::emit(series, s.format, s.output_path);
    for (const auto& curve : series) {
        std::cout << "series " << curve.label << ": " << curve.values.size() << " samples\n";
    }
    std::cout << "wrote " << s.output_path << "\n";

    if (tolerance_report) {
        const eqo::cli::CheckReport report = eqo::cli::check_scenario(s);
        std::cout << eqo::cli::format_check_report(report, true);
        return report.ok ? 0 : 1;
    }
    return 0;
}

int check_command(const std::string& ref, bool tolerance_report) {
    const eqo::cli::Scenario s = resolve_scenario(ref);
    const eqo::cli::CheckReport report = eqo::cli::check_scenario(s);
    std::cout << eqo::cli::format_check_report(report, tolerance_report);
    return report.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eqosim: exact Heisenberg-picture dynamics of a driven mode in a "
                 "discretized bath, with parity-kick decoupling"};
    app.require_subcommand(1);

    std::string run_ref;
    std::string out_override;
    std::string format_override;
    bool run_tolerance = false;
    CLI::App* run = app.add_subcommand("run", "run a preset or JSON scenario and emit series");
    run->add_option("scenario", run_ref, "preset name or path to a scenario JSON file")
        ->required();
    run->add_option("--out", out_override, "override the scenario output path");
    run->add_option("--format", format_override, "override the output format (csv|json)");
    run->add_flag("--tolerance-report", run_tolerance,
                  "after the run, print the invariant report with measured values");

    std::string check_ref;
    bool check_tolerance = false;
    CLI::App* check =
        app.add_subcommand("check", "run the invariant suite without emitting series");
    check->add_option("scenario", check_ref, "preset name or path to a scenario JSON file")
        ->required();
    check->add_flag("--tolerance-report", check_tolerance,
                    "include measured values and bounds in the report");

    CLI::App* list = app.add_subcommand("list-presets", "list built-in scenario presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& name : eqo::cli::preset_names()) {
                std::cout << name << "\n";
            }
            return 0;
        }
        if (run->parsed()) {
            return run_command(run_ref, out_override, format_override, run_tolerance);
        }
        return check_command(check_ref, check_tolerance);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
