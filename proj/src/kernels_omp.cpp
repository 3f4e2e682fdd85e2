#include "qtones/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "kernel_detail.hpp"

namespace qtones::kernels {

using detail::bit_position;
using detail::go_parallel;
using detail::insert_two_zero_bits;
using detail::insert_zero_bit;
using detail::kInvSqrt2;

namespace {

// Each body touches a disjoint set of amplitudes per index, and the serial
// branch reuses the same body, so scheduling can never change the bits.
template <typename Body>
void dispatch(std::int64_t iterations, const Body& body) {
    if (go_parallel(iterations)) {
#pragma omp parallel for
        for (std::int64_t i = 0; i < iterations; ++i) body(static_cast<std::uint64_t>(i));
    } else {
        for (std::int64_t i = 0; i < iterations; ++i) body(static_cast<std::uint64_t>(i));
    }
}

void apply_h(std::span<Complex> a, int n, int target) {
    const int pos = bit_position(n, target);
    const std::uint64_t mask = std::uint64_t{1} << pos;
    dispatch(std::int64_t{1} << (n - 1), [&](std::uint64_t i) {
        const std::uint64_t i0 = insert_zero_bit(i, pos);
        const std::uint64_t i1 = i0 | mask;
        const Complex a0 = a[i0];
        const Complex a1 = a[i1];
        a[i0] = kInvSqrt2 * (a0 + a1);
        a[i1] = kInvSqrt2 * (a0 - a1);
    });
}

void apply_x(std::span<Complex> a, int n, int target) {
    const int pos = bit_position(n, target);
    const std::uint64_t mask = std::uint64_t{1} << pos;
    dispatch(std::int64_t{1} << (n - 1), [&](std::uint64_t i) {
        const std::uint64_t i0 = insert_zero_bit(i, pos);
        std::swap(a[i0], a[i0 | mask]);
    });
}

void apply_phase(std::span<Complex> a, int n, int target, double theta) {
    const int pos = bit_position(n, target);
    const std::uint64_t mask = std::uint64_t{1} << pos;
    const Complex phase = std::polar(1.0, theta);
    dispatch(std::int64_t{1} << (n - 1), [&](std::uint64_t i) {
        const std::uint64_t i1 = insert_zero_bit(i, pos) | mask;
        a[i1] = a[i1] * phase;
    });
}

void apply_cphase(std::span<Complex> a, int n, int control, int target, double theta) {
    const int pc = bit_position(n, control);
    const int pt = bit_position(n, target);
    const std::uint64_t both = (std::uint64_t{1} << pc) | (std::uint64_t{1} << pt);
    const Complex phase = std::polar(1.0, theta);
    const int p_lo = std::min(pc, pt);
    const int p_hi = std::max(pc, pt);
    dispatch(std::int64_t{1} << (n - 2), [&](std::uint64_t i) {
        const std::uint64_t i11 = insert_two_zero_bits(i, p_lo, p_hi) | both;
        a[i11] = a[i11] * phase;
    });
}

void apply_swap(std::span<Complex> a, int n, int wa, int wb) {
    const int pa = bit_position(n, wa);
    const int pb = bit_position(n, wb);
    const std::uint64_t ma = std::uint64_t{1} << pa;
    const std::uint64_t mb = std::uint64_t{1} << pb;
    const int p_lo = std::min(pa, pb);
    const int p_hi = std::max(pa, pb);
    dispatch(std::int64_t{1} << (n - 2), [&](std::uint64_t i) {
        const std::uint64_t base = insert_two_zero_bits(i, p_lo, p_hi);
        std::swap(a[base | ma], a[base | mb]);
    });
}

} // namespace

void apply_gate_inplace(std::span<Complex> amps, int n_qubits, const Gate& g) {
    std::visit(
        [&](const auto& gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, HGate>) {
                apply_h(amps, n_qubits, gate.target);
            } else if constexpr (std::is_same_v<T, XGate>) {
                apply_x(amps, n_qubits, gate.target);
            } else if constexpr (std::is_same_v<T, PhaseGate>) {
                apply_phase(amps, n_qubits, gate.target, gate.theta);
            } else if constexpr (std::is_same_v<T, ControlledPhaseGate>) {
                apply_cphase(amps, n_qubits, gate.control, gate.target, gate.theta);
            } else if constexpr (std::is_same_v<T, SwapGate>) {
                apply_swap(amps, n_qubits, gate.a, gate.b);
            }
        },
        g);
}

} // namespace qtones::kernels
