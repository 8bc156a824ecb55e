// reference.cpp - Exact Lorentzian amplitude and the truncated-Fock Lindblad integrator

#include "eqo/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eqo/errors.hpp"

namespace eqo::reference {

double lorentzian_exact_survival(const LorentzianExactParams& p, double t) {
    if (!(p.gamma_width > 0.0) || !(p.eta > 0.0) || !(p.mode_density > 0.0)) {
        throw DomainError("lorentzian_exact_survival: Gamma, eta, D must be positive");
    }
    if (!(t >= 0.0)) {
        throw DomainError("lorentzian_exact_survival: t must be >= 0");
    }
    const double gamma = p.gamma_width;
    const Complex theta = std::sqrt(
        Complex(4.0 * std::numbers::pi * p.eta * p.eta * p.mode_density * gamma - gamma * gamma,
                0.0));
    const Complex half_phase = 0.5 * theta * t;
    Complex u;
    if (std::abs(half_phase) < 5e-5) {
        // cos w + (Gamma t/2) sin(w)/w with sin(w)/w expanded about w = 0.
        const Complex w2 = half_phase * half_phase;
        const Complex sinc = 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
        u = std::cos(half_phase) + (0.5 * gamma * t) * sinc;
    } else {
        u = std::cos(half_phase) + (gamma / theta) * std::sin(half_phase);
    }
    u *= std::exp(-0.5 * gamma * t);
    return std::norm(u);
}

double markov_decay_rate(double mode_density, double g_at_omega) {
    if (!(mode_density > 0.0) || !(g_at_omega >= 0.0)) {
        throw DomainError("markov_decay_rate: D must be positive and g >= 0");
    }
    return 2.0 * std::numbers::pi * mode_density * g_at_omega * g_at_omega;
}

FockState FockState::number_state(std::size_t n, std::size_t n_max) {
    if (n > n_max) {
        throw DimensionError("FockState: level " + std::to_string(n) +
                             " exceeds truncation n_max = " + std::to_string(n_max));
    }
    ComplexMatrix rho = ComplexMatrix::Zero(n_max + 1, n_max + 1);
    rho(n, n) = Complex(1.0, 0.0);
    return FockState(std::move(rho));
}

FockState FockState::from_matrix(ComplexMatrix rho) {
    if (rho.rows() != rho.cols() || rho.rows() < 1) {
        throw DimensionError("FockState: density matrix must be square and nonempty");
    }
    matexp::require_finite(rho, "FockState");
    const double herm_defect = (rho - rho.adjoint().eval()).cwiseAbs().maxCoeff();
    if (herm_defect > 1e-12) {
        throw DomainError("FockState: Hermiticity defect " + std::to_string(herm_defect));
    }
    const double trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (trace_defect > 1e-10) {
        throw DomainError("FockState: trace defect " + std::to_string(trace_defect));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw DomainError("FockState: negative eigenvalue " +
                          std::to_string(es.eigenvalues().minCoeff()));
    }
    return FockState(std::move(rho));
}

namespace {

// Right-hand side of the master equation on the truncated Fock space.
ComplexMatrix lindblad_rhs(double lambda, double omega, const ComplexMatrix& number_op,
                           const ComplexMatrix& lower, const ComplexMatrix& rho) {
    const Complex i(0.0, 1.0);
    ComplexMatrix comm = number_op * rho - rho * number_op;
    ComplexMatrix jump = lower * rho * lower.adjoint();
    ComplexMatrix anti = number_op * rho + rho * number_op;
    return -i * omega * comm + (0.5 * lambda) * (2.0 * jump - anti);
}

} // namespace

observables::TimeSeries lindblad_evolve(double lambda, const FockState& rho0,
                                        const std::vector<double>& t_grid, double omega) {
    if (!(lambda >= 0.0)) {
        throw DomainError("lindblad_evolve: lambda must be >= 0");
    }
    if (t_grid.empty()) {
        throw DimensionError("lindblad_evolve: empty time grid");
    }
    if (rho0.n_max() < 1) {
        throw DimensionError("lindblad_evolve: truncation must include Fock level 1");
    }
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0.0)) {
            throw DomainError("lindblad_evolve: times must be >= 0");
        }
        if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
            throw DomainError("lindblad_evolve: time grid not strictly increasing");
        }
    }

    const std::size_t dim = rho0.n_max() + 1;
    ComplexMatrix lower = ComplexMatrix::Zero(dim, dim);
    for (std::size_t n = 1; n < dim; ++n) {
        lower(n - 1, n) = Complex(std::sqrt(static_cast<double>(n)), 0.0);
    }
    const ComplexMatrix number_op = (lower.adjoint() * lower).eval();

    // Fixed step bounded so that (rate * h)^5 local truncation stays below
    // 1e-9; rate combines the decay strength and the rotation frequency over
    // the populated levels.
    const double level_scale = static_cast<double>(dim);
    const double rate = std::max({lambda * level_scale, std::abs(omega) * level_scale, 1e-300});
    const double h_max = 0.01 / rate;

    auto rhs = [&](const ComplexMatrix& rho) {
        return lindblad_rhs(lambda, omega, number_op, lower, rho);
    };

    observables::TimeSeries series;
    series.label = "lindblad_p1";
    series.times = t_grid;
    series.values.reserve(t_grid.size());

    ComplexMatrix rho = rho0.rho();
    double t = 0.0;
    for (double t_target : t_grid) {
        const double span = t_target - t;
        if (span > 0.0) {
            const auto n_steps = static_cast<std::size_t>(std::ceil(span / h_max));
            const double h = span / static_cast<double>(n_steps);
            for (std::size_t s = 0; s < n_steps; ++s) {
                ComplexMatrix k1 = rhs(rho);
                ComplexMatrix k2 = rhs(rho + (0.5 * h) * k1);
                ComplexMatrix k3 = rhs(rho + (0.5 * h) * k2);
                ComplexMatrix k4 = rhs(rho + h * k3);
                rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }
            t = t_target;
        }
        const double trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
        if (trace_defect > 1e-8) {
            throw IntegratorError("lindblad_evolve: trace drift " + std::to_string(trace_defect) +
                                  " at t = " + std::to_string(t));
        }
        series.values.push_back(rho(1, 1).real());
    }
    series.validate();
    return series;
}

} // namespace eqo::reference
