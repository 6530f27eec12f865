// quantum_core.hpp — dressed-atom operators, pair Liouvillian, steady state.
#pragma once

#include "rydlat/operators.hpp"
#include "rydlat/params.hpp"

namespace rydlat {

// Single-atom Hamiltonian on (g,p,e): omega1/2 on g<->p, omega2_local/2 on
// p<->e, -delta on the p diagonal.
Operator single_hamiltonian(const DressingParams& params, double omega2_local);

// H1 (x) 1 + 1 (x) H2 + v |ee><ee| on the 9-dim pair basis; v >= 0 is the
// evaluated C6/r^6 shift.
Operator pair_hamiltonian(const DressingParams& params, double omega2_at_x1,
                          double omega2_at_x2, double v);

// Lindblad generator with per-atom jumps sqrt(gamma_p)|g><p| and
// sqrt(gamma_e)|p><e|, vectorized column-stacking: 81 x 81.
Superoperator liouvillian(const Operator& h, const DressingParams& params);

// Unique null vector of l, normalized to unit trace.  Solved by replacing
// the rho(0,0) equation with the trace constraint; the residual against the
// untouched generator is verified afterwards.
DensityMatrix steady_state(const Superoperator& l);

// Tr(rho * op); real to ~1e-10 for Hermitian op.
cplx expectation(const DensityMatrix& rho, const Operator& op);

// Reduced single-atom state; keep is 0 (first atom) or 1 (second).
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);

}  // namespace rydlat
