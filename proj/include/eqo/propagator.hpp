// propagator.hpp - Transfer matrices, parity kicks, cycle composition, stroboscopic powers

#pragma once

#include <cstddef>

#include "eqo/model.hpp"

namespace eqo::propagator {

using matexp::Complex;
using matexp::ComplexMatrix;

// Bogoliubov map M acting on the operator vector, Lambda^T(t) = Lambda^T M.
// Physical maps preserve the bosonic commutators (M S M^T = S) and carry the
// conjugation structure [[A, B],[conj(B), conj(A)]].
struct TransferMatrix {
    model::ModeLayout layout;
    ComplexMatrix data;
};

// Equally spaced instantaneous parity kicks; one cycle spans 2 tau0.
struct KickSchedule {
    double tau0{0.0};
    std::size_t n_cycles{1};
    bool kicks_enabled{true};
};

// Invariant bound applied to a freshly exponentiated transfer matrix.
inline constexpr double kFreshTol = 1e-10;
// Abort threshold for composed products; beyond this the run raises
// NumericDriftError instead of renormalizing.
inline constexpr double kDriftTol = 1e-9;

// Measured deviations from the two TransferMatrix invariants, normalized by
// the matrix scale so the bounds stay meaningful for strongly squeezed maps:
// entries of M grow like e^{eps t} and the floating-point floor of the raw
// defects grows with them, while a structural kernel bug still shows up as an
// O(1) normalized defect.
struct InvariantDefects {
    double symplectic{0.0};  // max |(M S M^T - S)_ij| / max(1, |M|_1)^2
    double conjugation{0.0}; // max block mismatch against [[A,B],[conj(B),conj(A)]],
                             // divided by max(1, |M|_1)
};

InvariantDefects invariant_defects(const TransferMatrix& m);

// Throws NumericDriftError naming `context` if either defect exceeds tol.
void require_physical(const TransferMatrix& m, double tol, const char* context);

// M(t) = expm(-t R1 S) for the unit-time generator R1.
TransferMatrix transfer(const model::RMatrix& r1, double t);

// Diagonal kick matrix: -1 at the system creation and annihilation indices.
TransferMatrix parity_matrix(const model::ModeLayout& layout);

// Transfer matrix of `first` evolution followed by `second`: data of the
// product is first.data * second.data, from Lambda^T(t1 + t2) =
// (Lambda^T M1) M2 applied to the earlier map first.
TransferMatrix compose(const TransferMatrix& first, const TransferMatrix& second);

// One full parity-kick cycle over 2 tau0: free evolution under +H_int for
// tau0 (kick), then under -H_int for tau0 (kick). The interaction sign of `h`
// itself is ignored; both branches are built explicitly.
TransferMatrix kick_cycle(const model::HamiltonianSpec& h, const model::ModeLayout& layout,
                          double tau0);

// M_cycle^n by repeated squaring; n = 0 gives the identity map.
TransferMatrix stroboscopic(const TransferMatrix& m_cycle, std::size_t n);

} // namespace eqo::propagator
