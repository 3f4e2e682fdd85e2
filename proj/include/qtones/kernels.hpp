#pragma once

#include <span>

#include "qtones/gates.hpp"

namespace qtones::kernels {

/// OpenMP-parallel in-place gate kernels over 2^n amplitudes. Each amplitude
/// pair is touched by exactly one iteration with no reductions, so the result
/// is bitwise identical for any thread count or schedule. Small registers run
/// serially (parallel threshold 2^12 pairs). Gates must already satisfy
/// validate_gate for this register; apply_gate/apply_circuit take care of
/// that.
///
/// Cost is O(2^n) per gate: H and X pair amplitudes at stride 2^(n-1-target),
/// phase gates touch only their |1> (or |11>) subspace, SWAP permutes the
/// |10>/|01> quarter.
void apply_gate_inplace(std::span<Complex> amps, int n_qubits, const Gate& g);

namespace reference {

/// Plain serial kernels: full-index loops with bit tests. Kept as an
/// independent route for testing the parallel kernels; both paths use the
/// same per-amplitude arithmetic, so outputs must match bit for bit.
void apply_gate_inplace(std::span<Complex> amps, int n_qubits, const Gate& g);

} // namespace reference

} // namespace qtones::kernels
