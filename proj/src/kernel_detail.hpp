#pragma once

#include <cstdint>

#include <omp.h>

#include "qtones/types.hpp"

namespace qtones::kernels::detail {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

// Number of pairs below which the parallel kernels run serially.
inline constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 12;

// Branching serial vs parallel never changes the arithmetic, only who runs it.
inline bool go_parallel(std::int64_t iterations) {
    return iterations >= kParallelThreshold && omp_get_max_threads() > 1;
}

/// Spreads a compacted index out so that bit position `pos` is zero.
inline std::uint64_t insert_zero_bit(std::uint64_t i, int pos) {
    const std::uint64_t lo = (std::uint64_t{1} << pos) - 1;
    return ((i & ~lo) << 1) | (i & lo);
}

/// Two zero bits at positions p_lo < p_hi of the result.
inline std::uint64_t insert_two_zero_bits(std::uint64_t i, int p_lo, int p_hi) {
    const std::uint64_t lo = (std::uint64_t{1} << p_lo) - 1;
    const std::uint64_t below_hi = (std::uint64_t{1} << (p_hi - 1)) - 1;
    const std::uint64_t mid = below_hi & ~lo;
    return ((i & ~below_hi) << 2) | ((i & mid) << 1) | (i & lo);
}

// MSB-first convention: qubit q addresses bit (n-1-q) of the basis index.
inline int bit_position(int n_qubits, int wire) { return n_qubits - 1 - wire; }

} // namespace qtones::kernels::detail
