// model.hpp - Mode layout, bath spectra and grids, and quadratic-form R assembly

#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "eqo/matexp.hpp"

namespace eqo::model {

using matexp::Complex;
using matexp::ComplexMatrix;

// Index convention for the operator vector Lambda = (a+, b1+..bN+, a, b1..bN):
// mode k occupies creation index k and annihilation index M + k, with
// M = N + 1 total modes and the system mode at k = 0.
struct ModeLayout {
    std::size_t n_bath{0};

    std::size_t total_dim() const { return n_bath + 1; }
    std::size_t matrix_dim() const { return 2 * total_dim(); }
    std::size_t creation_index(std::size_t mode) const;
    std::size_t annihilation_index(std::size_t mode) const;
};

// Coupling-strength profiles g(omega_j) of the discretized bath.
struct LorentzianSpectrum {
    double gamma_width{0.0}; // half width at resonance, s^-1
    double eta{0.0};         // peak coupling g(omega_center), s^-1
    double omega_center{0.0};
};
struct OhmicSpectrum {
    double xi{0.0};           // strength prefactor, s^-1
    double omega_cutoff{0.0}; // exponential cutoff, s^-1
};
struct FlatSpectrum {
    double gamma{0.0}; // constant coupling, s^-1
};
struct ExplicitSpectrum {
    std::vector<double> couplings; // per-mode values, entries >= 0
};

using SpectrumSpec =
    std::variant<LorentzianSpectrum, OhmicSpectrum, FlatSpectrum, ExplicitSpectrum>;

// Uniformly spaced bath frequencies. The mode density D = 1/spacing converts
// discrete coupling sums into the continuum rates of the reference solutions.
struct BathGrid {
    std::vector<double> frequencies;

    static BathGrid uniform(double omega_start, double spacing, std::size_t n_modes);

    std::size_t size() const { return frequencies.size(); }
    double spacing() const;      // validates uniformity to 1e-9 relative
    double mode_density() const; // D = 1/spacing
};

// Rotating-frame Hamiltonian data for one evolution period. The interaction
// sign selects between the two branches of a parity-kick cycle, which evolve
// under +H_int and -H_int respectively.
struct HamiltonianSpec {
    double delta0{0.0};            // system detuning; 0 in the rotating frame
    double epsilon{0.0};           // squeezing rate
    std::vector<double> detunings; // omega_j - omega per bath mode
    std::vector<double> couplings; // gamma_j, real
    int interaction_sign{+1};      // +1 or -1
};

// Symmetric 2M x 2M matrix R housing the quadratic exponent (1/2) L^T R L,
// block form [[E, P],[P^T, C]] with M x M blocks. Physical inputs give
// P+ = -P and C = -conj(E).
struct RMatrix {
    ModeLayout layout;
    ComplexMatrix data;
};

// gamma_j = g(omega_j) for the selected spectrum. omega is the rotating-frame
// carrier; only profiles defined relative to it consume it. Throws DomainError
// for a nonpositive Ohmic frequency and DimensionError if an Explicit list
// does not match the grid.
std::vector<double> coupling_from_spectrum(const SpectrumSpec& spec, const BathGrid& grid,
                                           double omega);

// R such that (1/2) L^T R L equals i H_I t / hbar for the rotating-frame
// Hamiltonian of `h`. R is exactly linear in t, so callers typically build the
// unit-time generator once and rescale.
RMatrix assemble_R(const HamiltonianSpec& h, const ModeLayout& layout, double t);

// The 2M x 2M block matrix S = [[0, I],[-I, 0]].
ComplexMatrix symplectic_form(const ModeLayout& layout);

} // namespace eqo::model
