// reference.hpp - Independent reference solutions used to validate the transfer-matrix engine

#pragma once

#include <cstddef>
#include <vector>

#include "eqo/matexp.hpp"
#include "eqo/observables.hpp"

namespace eqo::reference {

using matexp::Complex;
using matexp::ComplexMatrix;

// Parameters of the continuum Lorentzian bath behind the closed-form survival
// amplitude. omega drops out of |u(t)|^2 (a global phase) and is retained only
// for completeness of the record.
struct LorentzianExactParams {
    double gamma_width{0.0};  // Gamma, s^-1
    double eta{0.0};          // peak coupling, s^-1
    double mode_density{0.0}; // D, s
    double omega{0.0};        // carrier, s^-1
};

// P(t) = |e^{-Gamma t/2} [cos(Theta t/2) + (Gamma/Theta) sin(Theta t/2)]|^2
// with Theta = sqrt(4 pi eta^2 D Gamma - Gamma^2), evaluated in complex
// arithmetic so the overdamped regime turns into cosh/sinh automatically.
// The Gamma factor inside the square root makes the two terms commensurate
// (eta^2 D alone is a rate, not a squared rate) and is fixed by two limits:
// a dense-grid discretization oscillates at this Theta, and the overdamped
// long-time slope reduces to the Markovian rate 2 pi D eta^2. A series
// expansion takes over for |Theta t| < 1e-4, where sin(Theta t/2)/Theta has
// a removable singularity.
double lorentzian_exact_survival(const LorentzianExactParams& p, double t);

// lambda = 2 pi D g(omega)^2, the Markovian decay rate for a bath of mode
// density D coupled at strength g at the system frequency.
double markov_decay_rate(double mode_density, double g_at_omega);

// Density matrix on Fock levels 0..n_max; Hermitian within 1e-12, unit trace
// within 1e-10, positive semidefinite within 1e-10 (eigenvalue check).
class FockState {
  public:
    static FockState number_state(std::size_t n, std::size_t n_max = 5);
    static FockState from_matrix(ComplexMatrix rho);

    const ComplexMatrix& rho() const { return rho_; }
    std::size_t n_max() const { return static_cast<std::size_t>(rho_.rows()) - 1; }

  private:
    explicit FockState(ComplexMatrix rho) : rho_(std::move(rho)) {}

    ComplexMatrix rho_;
};

// Integrates the zero-temperature master equation
//   d rho/dt = -i omega [a+a, rho] + (lambda/2)(2 a rho a+ - a+a rho - rho a+a)
// with fixed-step RK4 (step chosen so the local error stays below 1e-9) and
// returns the |1> population at the grid times. Populations are independent
// of omega, which only rotates coherences; it is accepted for fidelity to the
// full equation. Trace drift beyond 1e-8 raises IntegratorError.
observables::TimeSeries lindblad_evolve(double lambda, const FockState& rho0,
                                        const std::vector<double>& t_grid, double omega = 0.0);

} // namespace eqo::reference
