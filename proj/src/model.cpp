// model.cpp - Spectral discretization and R-matrix assembly

#include "eqo/model.hpp"

#include <cmath>
#include <string>

#include "eqo/errors.hpp"

namespace eqo::model {

std::size_t ModeLayout::creation_index(std::size_t mode) const {
    if (mode >= total_dim()) {
        throw DimensionError("ModeLayout: mode index " + std::to_string(mode) +
                             " out of range for M = " + std::to_string(total_dim()));
    }
    return mode;
}

std::size_t ModeLayout::annihilation_index(std::size_t mode) const {
    return total_dim() + creation_index(mode);
}

BathGrid BathGrid::uniform(double omega_start, double spacing, std::size_t n_modes) {
    if (n_modes == 0) {
        throw DimensionError("BathGrid: n_modes must be >= 1");
    }
    if (!(spacing > 0.0)) {
        throw DomainError("BathGrid: spacing must be positive");
    }
    BathGrid grid;
    grid.frequencies.resize(n_modes);
    for (std::size_t j = 0; j < n_modes; ++j) {
        grid.frequencies[j] = omega_start + static_cast<double>(j) * spacing;
    }
    return grid;
}

double BathGrid::spacing() const {
    if (frequencies.size() < 2) {
        throw DomainError("BathGrid: spacing undefined for fewer than 2 modes");
    }
    const double d0 = frequencies[1] - frequencies[0];
    if (!(d0 > 0.0)) {
        throw DomainError("BathGrid: frequencies must be strictly increasing");
    }
    for (std::size_t j = 1; j + 1 < frequencies.size(); ++j) {
        const double d = frequencies[j + 1] - frequencies[j];
        if (std::abs(d - d0) > 1e-9 * std::abs(d0)) {
            throw DomainError("BathGrid: spacing non-uniform at index " + std::to_string(j));
        }
    }
    return d0;
}

double BathGrid::mode_density() const {
    return 1.0 / spacing();
}

std::vector<double> coupling_from_spectrum(const SpectrumSpec& spec, const BathGrid& grid,
                                           double omega) {
    (void)omega; // reserved for profiles parameterized by the carrier itself
    if (grid.size() == 0) {
        throw DimensionError("coupling_from_spectrum: empty bath grid");
    }
    std::vector<double> gamma(grid.size());
    if (const auto* lor = std::get_if<LorentzianSpectrum>(&spec)) {
        if (!(lor->gamma_width > 0.0) || !(lor->eta > 0.0)) {
            throw DomainError("Lorentzian spectrum: gamma_width and eta must be positive");
        }
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double d = grid.frequencies[j] - lor->omega_center;
            gamma[j] = lor->eta * lor->gamma_width /
                       std::sqrt(d * d + lor->gamma_width * lor->gamma_width);
        }
    } else if (const auto* ohm = std::get_if<OhmicSpectrum>(&spec)) {
        if (!(ohm->xi > 0.0) || !(ohm->omega_cutoff > 0.0)) {
            throw DomainError("Ohmic spectrum: xi and omega_cutoff must be positive");
        }
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double w = grid.frequencies[j];
            if (!(w > 0.0)) {
                throw DomainError("Ohmic spectrum: frequency " + std::to_string(w) +
                                  " at index " + std::to_string(j) + " must be positive");
            }
            gamma[j] = std::sqrt(ohm->xi * w) * std::exp(-w / ohm->omega_cutoff);
        }
    } else if (const auto* flat = std::get_if<FlatSpectrum>(&spec)) {
        if (!(flat->gamma > 0.0)) {
            throw DomainError("Flat spectrum: gamma must be positive");
        }
        std::fill(gamma.begin(), gamma.end(), flat->gamma);
    } else {
        const auto& exp_list = std::get<ExplicitSpectrum>(spec).couplings;
        if (exp_list.size() != grid.size()) {
            throw DimensionError("Explicit spectrum: " + std::to_string(exp_list.size()) +
                                 " couplings for " + std::to_string(grid.size()) + " modes");
        }
        for (double g : exp_list) {
            if (!(g >= 0.0)) {
                throw DomainError("Explicit spectrum: couplings must be >= 0");
            }
        }
        gamma = exp_list;
    }
    return gamma;
}

RMatrix assemble_R(const HamiltonianSpec& h, const ModeLayout& layout, double t) {
    if (h.detunings.size() != layout.n_bath || h.couplings.size() != layout.n_bath) {
        throw DimensionError("assemble_R: " + std::to_string(h.detunings.size()) +
                             " detunings and " + std::to_string(h.couplings.size()) +
                             " couplings for " + std::to_string(layout.n_bath) + " bath modes");
    }
    if (!(t >= 0.0)) {
        throw DomainError("assemble_R: t must be >= 0");
    }
    if (h.interaction_sign != 1 && h.interaction_sign != -1) {
        throw DomainError("assemble_R: interaction_sign must be +1 or -1");
    }

    const std::size_t m = layout.total_dim();
    const Complex i_t(0.0, t);
    const double sign = static_cast<double>(h.interaction_sign);

    ComplexMatrix r = ComplexMatrix::Zero(2 * m, 2 * m);
    // E block: squeezing on the system mode; C = -conj(E).
    r(0, 0) = Complex(h.epsilon * t, 0.0);
    r(m, m) = -std::conj(r(0, 0));
    // P block (creation rows, annihilation columns) and its mirror P^T.
    r(0, m) = i_t * h.delta0;
    r(m, 0) = r(0, m);
    for (std::size_t j = 1; j < m; ++j) {
        const Complex diag = i_t * h.detunings[j - 1];
        r(j, m + j) = diag;
        r(m + j, j) = diag;
        const Complex coupling = sign * i_t * h.couplings[j - 1];
        r(0, m + j) = coupling;
        r(m + j, 0) = coupling;
        r(j, m) = coupling;
        r(m, j) = coupling;
    }
    return RMatrix{layout, std::move(r)};
}

ComplexMatrix symplectic_form(const ModeLayout& layout) {
    const std::size_t m = layout.total_dim();
    ComplexMatrix s = ComplexMatrix::Zero(2 * m, 2 * m);
    for (std::size_t k = 0; k < m; ++k) {
        s(k, m + k) = Complex(1.0, 0.0);
        s(m + k, k) = Complex(-1.0, 0.0);
    }
    return s;
}

} // namespace eqo::model
