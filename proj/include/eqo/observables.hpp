// observables.hpp - Quadrature variance and survival probability of the system mode

#pragma once

#include <string>
#include <vector>

#include "eqo/propagator.hpp"

namespace eqo::observables {

// Zero-mean Gaussian product state given by mean occupations per mode;
// all-zeros is the vacuum.
struct InitialMoments {
    std::vector<double> mean_occupation; // n-bar per mode, length M, entries >= 0

    static InitialMoments vacuum(const model::ModeLayout& layout);
};

// Sampled observable values; `metadata` carries the serialized scenario that
// produced the series (empty when produced outside a scenario run).
struct TimeSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::string label;
    std::string metadata;

    // Equal lengths, strictly increasing times, finite values.
    void validate() const;
};

enum class Quadrature { X, P };

// Variance of X = a + a+ (or P = i(a+ - a)) after evolution by m, for the
// Gaussian initial state `moments`. With a(t) = sum_k (A_k a_k + B_k a_k+)
// read from the system-mode column of m, Var X = sum_k |A_k + conj(B_k)|^2
// (2 n-bar_k + 1); the P quadrature uses |A_k - conj(B_k)|^2. Vacuum variance
// is 1 in this convention.
double quadrature_variance(const propagator::TransferMatrix& m, const InitialMoments& moments,
                           Quadrature q = Quadrature::X);

// sum_k |A_k|^2 over the annihilation coefficients of a(t); equals 1 for
// excitation-conserving evolution.
double excitation_norm(const propagator::TransferMatrix& m);

// P(t) = |u(t)|^2 with u the system->system annihilation coefficient of a(t),
// for the initial state |1>_sys x vacuum_bath. Requires excitation-conserving
// dynamics (no squeezing): the off-diagonal blocks of m must vanish to 1e-10,
// otherwise InvalidObservableError is thrown.
double survival_probability(const propagator::TransferMatrix& m);

} // namespace eqo::observables
