// observables.cpp - System-mode observables read from transfer-matrix columns

#include "eqo/observables.hpp"

#include <cmath>
#include <string>

#include "eqo/errors.hpp"

namespace eqo::observables {

InitialMoments InitialMoments::vacuum(const model::ModeLayout& layout) {
    return InitialMoments{std::vector<double>(layout.total_dim(), 0.0)};
}

void TimeSeries::validate() const {
    if (times.size() != values.size()) {
        throw DimensionError("TimeSeries '" + label + "': " + std::to_string(times.size()) +
                             " times vs " + std::to_string(values.size()) + " values");
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || !std::isfinite(values[i])) {
            throw NumericError("TimeSeries '" + label + "': non-finite entry at index " +
                               std::to_string(i));
        }
        if (i > 0 && !(times[i] > times[i - 1])) {
            throw DomainError("TimeSeries '" + label + "': times not strictly increasing at index " +
                              std::to_string(i));
        }
    }
}

namespace {

// Coefficients of a(t) = sum_k (A_k a_k + B_k a_k+): the system-mode
// annihilation column of m, split into its annihilation and creation rows.
struct SystemColumn {
    Eigen::VectorXcd a; // A_k, annihilation coefficients
    Eigen::VectorXcd b; // B_k, creation coefficients
};

SystemColumn system_column(const propagator::TransferMatrix& m) {
    const std::size_t dim = m.layout.total_dim();
    const std::size_t col = m.layout.annihilation_index(0);
    SystemColumn c;
    c.a = m.data.block(dim, col, dim, 1);
    c.b = m.data.block(0, col, dim, 1);
    return c;
}

} // namespace

double quadrature_variance(const propagator::TransferMatrix& m, const InitialMoments& moments,
                           Quadrature q) {
    const std::size_t dim = m.layout.total_dim();
    if (moments.mean_occupation.size() != dim) {
        throw DimensionError("quadrature_variance: " +
                             std::to_string(moments.mean_occupation.size()) +
                             " occupations for M = " + std::to_string(dim) + " modes");
    }
    const SystemColumn c = system_column(m);
    const double sign = (q == Quadrature::X) ? 1.0 : -1.0;
    double var = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        const double n_bar = moments.mean_occupation[k];
        if (!(n_bar >= 0.0)) {
            throw DomainError("quadrature_variance: mean occupation must be >= 0 at mode " +
                              std::to_string(k));
        }
        var += std::norm(c.a(k) + sign * std::conj(c.b(k))) * (2.0 * n_bar + 1.0);
    }
    return var;
}

double excitation_norm(const propagator::TransferMatrix& m) {
    return system_column(m).a.squaredNorm();
}

double survival_probability(const propagator::TransferMatrix& m) {
    const std::size_t dim = m.layout.total_dim();
    const double squeezing_block =
        std::max(m.data.topRightCorner(dim, dim).cwiseAbs().maxCoeff(),
                 m.data.bottomLeftCorner(dim, dim).cwiseAbs().maxCoeff());
    if (squeezing_block > 1e-10) {
        throw InvalidObservableError(
            "survival_probability: evolution is not excitation-conserving, off-diagonal "
            "block magnitude " +
            std::to_string(squeezing_block));
    }
    const std::size_t idx = m.layout.annihilation_index(0);
    return std::norm(m.data(idx, idx));
}

} // namespace eqo::observables
