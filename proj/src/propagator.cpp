// propagator.cpp - Evolution maps built from the matexp kernel

#include "eqo/propagator.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>

#include "eqo/errors.hpp"

namespace eqo::propagator {

InvariantDefects invariant_defects(const TransferMatrix& m) {
    const std::size_t dim = m.layout.total_dim();
    const ComplexMatrix s = model::symplectic_form(m.layout);
    const double scale = std::max(1.0, matexp::one_norm(m.data));
    InvariantDefects d;
    d.symplectic =
        (m.data * s * m.data.transpose() - s).cwiseAbs().maxCoeff() / (scale * scale);
    const auto a = m.data.topLeftCorner(dim, dim);
    const auto b = m.data.topRightCorner(dim, dim);
    const auto b_conj = m.data.bottomLeftCorner(dim, dim);
    const auto a_conj = m.data.bottomRightCorner(dim, dim);
    d.conjugation = std::max((b_conj - b.conjugate()).cwiseAbs().maxCoeff(),
                             (a_conj - a.conjugate()).cwiseAbs().maxCoeff()) /
                    scale;
    return d;
}

void require_physical(const TransferMatrix& m, double tol, const char* context) {
    const InvariantDefects d = invariant_defects(m);
    if (d.symplectic > tol || d.conjugation > tol) {
        char msg[256];
        std::snprintf(msg, sizeof(msg),
                      "%s: transfer-matrix invariants drifted, symplectic defect %.3e, "
                      "conjugation defect %.3e, bound %.3e",
                      context, d.symplectic, d.conjugation, tol);
        throw NumericDriftError(msg);
    }
}

TransferMatrix transfer(const model::RMatrix& r1, double t) {
    if (!(t >= 0.0)) {
        throw DomainError("transfer: t must be >= 0");
    }
    const ComplexMatrix generator = -(r1.data * model::symplectic_form(r1.layout));
    TransferMatrix m{r1.layout, matexp::expm(t * generator)};
    require_physical(m, kFreshTol, "transfer");
    return m;
}

TransferMatrix parity_matrix(const model::ModeLayout& layout) {
    const std::size_t dim = layout.matrix_dim();
    ComplexMatrix p = ComplexMatrix::Identity(dim, dim);
    p(layout.creation_index(0), layout.creation_index(0)) = Complex(-1.0, 0.0);
    p(layout.annihilation_index(0), layout.annihilation_index(0)) = Complex(-1.0, 0.0);
    return TransferMatrix{layout, std::move(p)};
}

TransferMatrix compose(const TransferMatrix& first, const TransferMatrix& second) {
    if (first.layout.n_bath != second.layout.n_bath) {
        throw DimensionError("compose: mode layouts disagree, N = " +
                             std::to_string(first.layout.n_bath) + " vs " +
                             std::to_string(second.layout.n_bath));
    }
    TransferMatrix m{first.layout, matexp::mat_mul(first.data, second.data)};
    require_physical(m, kDriftTol, "compose");
    return m;
}

TransferMatrix kick_cycle(const model::HamiltonianSpec& h, const model::ModeLayout& layout,
                          double tau0) {
    if (!(tau0 > 0.0)) {
        throw DomainError("kick_cycle: tau0 must be positive");
    }
    model::HamiltonianSpec plus = h;
    plus.interaction_sign = +1;
    model::HamiltonianSpec minus = h;
    minus.interaction_sign = -1;
    const TransferMatrix m_plus = transfer(model::assemble_R(plus, layout, 1.0), tau0);
    const TransferMatrix m_minus = transfer(model::assemble_R(minus, layout, 1.0), tau0);
    return compose(m_plus, m_minus);
}

TransferMatrix stroboscopic(const TransferMatrix& m_cycle, std::size_t n) {
    const std::size_t dim = m_cycle.layout.matrix_dim();
    TransferMatrix result{m_cycle.layout, ComplexMatrix::Identity(dim, dim)};
    TransferMatrix base = m_cycle;
    std::size_t remaining = n;
    while (remaining > 0) {
        if (remaining & 1u) {
            result.data = matexp::mat_mul(result.data, base.data);
        }
        remaining >>= 1u;
        if (remaining > 0) {
            base.data = matexp::mat_mul(base.data, base.data);
        }
    }
    require_physical(result, kDriftTol, "stroboscopic");
    return result;
}

} // namespace eqo::propagator
