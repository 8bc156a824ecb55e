// bindings.cpp - pybind11 surface for the eqosim core library

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqo/errors.hpp"
#include "eqo/matexp.hpp"
#include "eqo/model.hpp"
#include "eqo/observables.hpp"
#include "eqo/propagator.hpp"
#include "eqo/reference.hpp"
#include "eqo/scenario.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Heisenberg-picture dynamics of a driven bosonic mode coupled to a "
              "discretized bath, with parity-kick decoupling";
    m.attr("__version__") = "1.0.0";

    // ---- matexp ----
    m.def("expm", &eqo::matexp::expm, py::arg("a"), py::arg("tol") = 1e-12,
          "Matrix exponential by Pade approximation with scaling and squaring");
    m.def("one_norm", &eqo::matexp::one_norm, py::arg("a"), "Max column sum of magnitudes");
    m.def("mat_mul", &eqo::matexp::mat_mul, py::arg("a"), py::arg("b"), "Dense product");

    // ---- model ----
    py::class_<eqo::model::ModeLayout>(m, "ModeLayout")
        .def(py::init<std::size_t>(), py::arg("n_bath"))
        .def_readonly("n_bath", &eqo::model::ModeLayout::n_bath)
        .def("total_dim", &eqo::model::ModeLayout::total_dim)
        .def("matrix_dim", &eqo::model::ModeLayout::matrix_dim)
        .def("creation_index", &eqo::model::ModeLayout::creation_index, py::arg("mode"))
        .def("annihilation_index", &eqo::model::ModeLayout::annihilation_index,
             py::arg("mode"));

    py::class_<eqo::model::LorentzianSpectrum>(m, "LorentzianSpectrum")
        .def(py::init([](double gamma_width, double eta, double omega_center) {
                 return eqo::model::LorentzianSpectrum{gamma_width, eta, omega_center};
             }),
             py::arg("gamma_width"), py::arg("eta"), py::arg("omega_center"))
        .def_readwrite("gamma_width", &eqo::model::LorentzianSpectrum::gamma_width)
        .def_readwrite("eta", &eqo::model::LorentzianSpectrum::eta)
        .def_readwrite("omega_center", &eqo::model::LorentzianSpectrum::omega_center);

    py::class_<eqo::model::OhmicSpectrum>(m, "OhmicSpectrum")
        .def(py::init([](double xi, double omega_cutoff) {
                 return eqo::model::OhmicSpectrum{xi, omega_cutoff};
             }),
             py::arg("xi"), py::arg("omega_cutoff"))
        .def_readwrite("xi", &eqo::model::OhmicSpectrum::xi)
        .def_readwrite("omega_cutoff", &eqo::model::OhmicSpectrum::omega_cutoff);

    py::class_<eqo::model::FlatSpectrum>(m, "FlatSpectrum")
        .def(py::init([](double gamma) { return eqo::model::FlatSpectrum{gamma}; }),
             py::arg("gamma"))
        .def_readwrite("gamma", &eqo::model::FlatSpectrum::gamma);

    py::class_<eqo::model::ExplicitSpectrum>(m, "ExplicitSpectrum")
        .def(py::init([](std::vector<double> couplings) {
                 eqo::model::ExplicitSpectrum s;
                 s.couplings = std::move(couplings);
                 return s;
             }),
             py::arg("couplings"))
        .def_readwrite("couplings", &eqo::model::ExplicitSpectrum::couplings);

    py::class_<eqo::model::BathGrid>(m, "BathGrid")
        .def_static("uniform", &eqo::model::BathGrid::uniform, py::arg("omega_start"),
                    py::arg("spacing"), py::arg("n_modes"))
        .def_readwrite("frequencies", &eqo::model::BathGrid::frequencies)
        .def("size", &eqo::model::BathGrid::size)
        .def("spacing", &eqo::model::BathGrid::spacing)
        .def("mode_density", &eqo::model::BathGrid::mode_density);

    py::class_<eqo::model::HamiltonianSpec>(m, "HamiltonianSpec")
        .def(py::init<>())
        .def_readwrite("delta0", &eqo::model::HamiltonianSpec::delta0)
        .def_readwrite("epsilon", &eqo::model::HamiltonianSpec::epsilon)
        .def_readwrite("detunings", &eqo::model::HamiltonianSpec::detunings)
        .def_readwrite("couplings", &eqo::model::HamiltonianSpec::couplings)
        .def_readwrite("interaction_sign", &eqo::model::HamiltonianSpec::interaction_sign);

    py::class_<eqo::model::RMatrix>(m, "RMatrix")
        .def_readonly("layout", &eqo::model::RMatrix::layout)
        .def_property_readonly("data",
                               [](const eqo::model::RMatrix& r) { return r.data; });

    m.def("coupling_from_spectrum", &eqo::model::coupling_from_spectrum, py::arg("spec"),
          py::arg("grid"), py::arg("omega"));
    m.def("assemble_R", &eqo::model::assemble_R, py::arg("h"), py::arg("layout"),
          py::arg("t"));
    m.def("symplectic_form", &eqo::model::symplectic_form, py::arg("layout"));

    // ---- propagator ----
    py::class_<eqo::propagator::TransferMatrix>(m, "TransferMatrix")
        .def_readonly("layout", &eqo::propagator::TransferMatrix::layout)
        .def_property_readonly(
            "data", [](const eqo::propagator::TransferMatrix& t) { return t.data; });

    py::class_<eqo::propagator::KickSchedule>(m, "KickSchedule")
        .def(py::init([](double tau0, std::size_t n_cycles, bool kicks_enabled) {
                 return eqo::propagator::KickSchedule{tau0, n_cycles, kicks_enabled};
             }),
             py::arg("tau0"), py::arg("n_cycles"), py::arg("kicks_enabled") = true)
        .def_readwrite("tau0", &eqo::propagator::KickSchedule::tau0)
        .def_readwrite("n_cycles", &eqo::propagator::KickSchedule::n_cycles)
        .def_readwrite("kicks_enabled", &eqo::propagator::KickSchedule::kicks_enabled);

    py::class_<eqo::propagator::InvariantDefects>(m, "InvariantDefects")
        .def_readonly("symplectic", &eqo::propagator::InvariantDefects::symplectic)
        .def_readonly("conjugation", &eqo::propagator::InvariantDefects::conjugation);

    m.attr("FRESH_TOL") = eqo::propagator::kFreshTol;
    m.attr("DRIFT_TOL") = eqo::propagator::kDriftTol;
    m.def("transfer", &eqo::propagator::transfer, py::arg("r1"), py::arg("t"));
    m.def("parity_matrix", &eqo::propagator::parity_matrix, py::arg("layout"));
    m.def("compose", &eqo::propagator::compose, py::arg("first"), py::arg("second"));
    m.def("kick_cycle", &eqo::propagator::kick_cycle, py::arg("h"), py::arg("layout"),
          py::arg("tau0"));
    m.def("stroboscopic", &eqo::propagator::stroboscopic, py::arg("m_cycle"), py::arg("n"));
    m.def("invariant_defects", &eqo::propagator::invariant_defects, py::arg("m"));

    // ---- observables ----
    py::class_<eqo::observables::InitialMoments>(m, "InitialMoments")
        .def_static("vacuum", &eqo::observables::InitialMoments::vacuum, py::arg("layout"))
        .def_readwrite("mean_occupation",
                       &eqo::observables::InitialMoments::mean_occupation);

    py::enum_<eqo::observables::Quadrature>(m, "Quadrature")
        .value("X", eqo::observables::Quadrature::X)
        .value("P", eqo::observables::Quadrature::P);

    py::class_<eqo::observables::TimeSeries>(m, "TimeSeries")
        .def(py::init<>())
        .def_readwrite("times", &eqo::observables::TimeSeries::times)
        .def_readwrite("values", &eqo::observables::TimeSeries::values)
        .def_readwrite("label", &eqo::observables::TimeSeries::label)
        .def_readwrite("metadata", &eqo::observables::TimeSeries::metadata)
        .def("validate", &eqo::observables::TimeSeries::validate);

    m.def("quadrature_variance", &eqo::observables::quadrature_variance, py::arg("m"),
          py::arg("moments"), py::arg("q") = eqo::observables::Quadrature::X);
    m.def("excitation_norm", &eqo::observables::excitation_norm, py::arg("m"));
    m.def("survival_probability", &eqo::observables::survival_probability, py::arg("m"));

    // ---- reference ----
    py::class_<eqo::reference::LorentzianExactParams>(m, "LorentzianExactParams")
        .def(py::init([](double gamma_width, double eta, double mode_density, double omega) {
                 return eqo::reference::LorentzianExactParams{gamma_width, eta, mode_density,
                                                              omega};
             }),
             py::arg("gamma_width"), py::arg("eta"), py::arg("mode_density"),
             py::arg("omega"))
        .def_readwrite("gamma_width", &eqo::reference::LorentzianExactParams::gamma_width)
        .def_readwrite("eta", &eqo::reference::LorentzianExactParams::eta)
        .def_readwrite("mode_density", &eqo::reference::LorentzianExactParams::mode_density)
        .def_readwrite("omega", &eqo::reference::LorentzianExactParams::omega);

    py::class_<eqo::reference::FockState>(m, "FockState")
        .def_static("number_state", &eqo::reference::FockState::number_state, py::arg("n"),
                    py::arg("n_max") = 5)
        .def_static("from_matrix", &eqo::reference::FockState::from_matrix, py::arg("rho"))
        .def_property_readonly("rho",
                               [](const eqo::reference::FockState& s) { return s.rho(); })
        .def("n_max", &eqo::reference::FockState::n_max);

    m.def("lorentzian_exact_survival", &eqo::reference::lorentzian_exact_survival,
          py::arg("params"), py::arg("t"));
    m.def("markov_decay_rate", &eqo::reference::markov_decay_rate, py::arg("mode_density"),
          py::arg("g_at_omega"));
    m.def("lindblad_evolve", &eqo::reference::lindblad_evolve, py::arg("lambda_"),
          py::arg("rho0"), py::arg("t_grid"), py::arg("omega") = 0.0);

    // ---- scenarios ----
    py::enum_<eqo::cli::Observable>(m, "Observable")
        .value("Variance", eqo::cli::Observable::Variance)
        .value("Survival", eqo::cli::Observable::Survival);
    py::enum_<eqo::cli::RunMode>(m, "RunMode")
        .value("Single", eqo::cli::RunMode::Single)
        .value("KickCompare", eqo::cli::RunMode::KickCompare)
        .value("ReferenceCompare", eqo::cli::RunMode::ReferenceCompare);
    py::enum_<eqo::cli::OutputFormat>(m, "OutputFormat")
        .value("Csv", eqo::cli::OutputFormat::Csv)
        .value("Json", eqo::cli::OutputFormat::Json);

    py::class_<eqo::cli::GridSpec>(m, "GridSpec")
        .def(py::init([](double omega_start, double omega_step, std::size_t n_modes) {
                 return eqo::cli::GridSpec{omega_start, omega_step, n_modes};
             }),
             py::arg("omega_start"), py::arg("omega_step"), py::arg("n_modes"))
        .def_readwrite("omega_start", &eqo::cli::GridSpec::omega_start)
        .def_readwrite("omega_step", &eqo::cli::GridSpec::omega_step)
        .def_readwrite("n_modes", &eqo::cli::GridSpec::n_modes);

    py::class_<eqo::cli::TimeGrid>(m, "TimeGrid")
        .def(py::init([](double t_max, std::size_t n_samples) {
                 return eqo::cli::TimeGrid{t_max, n_samples};
             }),
             py::arg("t_max"), py::arg("n_samples"))
        .def_readwrite("t_max", &eqo::cli::TimeGrid::t_max)
        .def_readwrite("n_samples", &eqo::cli::TimeGrid::n_samples);

    py::class_<eqo::cli::Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("name", &eqo::cli::Scenario::name)
        .def_readwrite("mode", &eqo::cli::Scenario::mode)
        .def_readwrite("observable", &eqo::cli::Scenario::observable)
        .def_readwrite("epsilon", &eqo::cli::Scenario::epsilon)
        .def_readwrite("delta0", &eqo::cli::Scenario::delta0)
        .def_readwrite("omega", &eqo::cli::Scenario::omega)
        .def_readwrite("spectrum", &eqo::cli::Scenario::spectrum)
        .def_readwrite("grid", &eqo::cli::Scenario::grid)
        .def_readwrite("kicks", &eqo::cli::Scenario::kicks)
        .def_readwrite("time_grid", &eqo::cli::Scenario::time_grid)
        .def_readwrite("fock_n_max", &eqo::cli::Scenario::fock_n_max)
        .def_readwrite("output_path", &eqo::cli::Scenario::output_path)
        .def_readwrite("format", &eqo::cli::Scenario::format);

    py::class_<eqo::cli::CheckRow>(m, "CheckRow")
        .def_readonly("name", &eqo::cli::CheckRow::name)
        .def_readonly("measured", &eqo::cli::CheckRow::measured)
        .def_readonly("bound", &eqo::cli::CheckRow::bound)
        .def_readonly("ok", &eqo::cli::CheckRow::ok);
    py::class_<eqo::cli::CheckReport>(m, "CheckReport")
        .def_readonly("rows", &eqo::cli::CheckReport::rows)
        .def_readonly("ok", &eqo::cli::CheckReport::ok);

    m.def("parse_scenario", &eqo::cli::parse_scenario, py::arg("json_text"));
    m.def("parse_scenario_file", &eqo::cli::parse_scenario_file, py::arg("path"));
    m.def("serialize_scenario", &eqo::cli::serialize_scenario, py::arg("scenario"));
    m.def("preset_names", &eqo::cli::preset_names);
    m.def("preset", &eqo::cli::preset, py::arg("name"));
    m.def("is_preset", &eqo::cli::is_preset, py::arg("name"));
    m.def("run_scenario", &eqo::cli::run_scenario, py::arg("scenario"));
    m.def(
        "emit",
        [](const std::vector<eqo::observables::TimeSeries>& series,
           eqo::cli::OutputFormat format,
           const std::string& path) { eqo::cli::emit(series, format, path); },
        py::arg("series"), py::arg("format"), py::arg("path"));
    m.def("check_scenario", &eqo::cli::check_scenario, py::arg("scenario"));
    m.def("format_check_report", &eqo::cli::format_check_report, py::arg("report"),
          py::arg("with_measurements") = true);
}
