#include "qtones/kernels.hpp"

#include <cmath>
#include <utility>

#include "kernel_detail.hpp"

namespace qtones::kernels::reference {

using detail::bit_position;
using detail::kInvSqrt2;

namespace {

// Everything here walks the full index range with plain bit tests. Slower
// than the strided kernels but obviously correct, which is the point.

void apply_h(std::span<Complex> a, int n, int target) {
    const std::uint64_t mask = std::uint64_t{1} << bit_position(n, target);
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t b = 0; b < dim; ++b) {
        if (b & mask) continue;
        const Complex a0 = a[b];
        const Complex a1 = a[b | mask];
        a[b] = kInvSqrt2 * (a0 + a1);
        a[b | mask] = kInvSqrt2 * (a0 - a1);
    }
}

void apply_x(std::span<Complex> a, int n, int target) {
    const std::uint64_t mask = std::uint64_t{1} << bit_position(n, target);
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t b = 0; b < dim; ++b) {
        if (!(b & mask)) std::swap(a[b], a[b | mask]);
    }
}

void apply_phase(std::span<Complex> a, int n, int target, double theta) {
    const std::uint64_t mask = std::uint64_t{1} << bit_position(n, target);
    const std::uint64_t dim = std::uint64_t{1} << n;
    const Complex phase = std::polar(1.0, theta);
    for (std::uint64_t b = 0; b < dim; ++b) {
        if (b & mask) a[b] = a[b] * phase;
    }
}

void apply_cphase(std::span<Complex> a, int n, int control, int target, double theta) {
    const std::uint64_t mc = std::uint64_t{1} << bit_position(n, control);
    const std::uint64_t mt = std::uint64_t{1} << bit_position(n, target);
    const std::uint64_t dim = std::uint64_t{1} << n;
    const Complex phase = std::polar(1.0, theta);
    for (std::uint64_t b = 0; b < dim; ++b) {
        if ((b & mc) && (b & mt)) a[b] = a[b] * phase;
    }
}

void apply_swap(std::span<Complex> a, int n, int wa, int wb) {
    const std::uint64_t ma = std::uint64_t{1} << bit_position(n, wa);
    const std::uint64_t mb = std::uint64_t{1} << bit_position(n, wb);
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t b = 0; b < dim; ++b) {
        if ((b & ma) && !(b & mb)) std::swap(a[b], a[b ^ ma ^ mb]);
    }
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

} // namespace qtones::kernels::reference
