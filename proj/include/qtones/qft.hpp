#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qtones/circuit.hpp"
#include "qtones/matrix.hpp"
#include "qtones/state.hpp"

namespace qtones::qft {

enum class Normalization {
    Unitary,  // 1/sqrt(N)
    Plain,    // 1
    InverseN, // 1/N
};

/// Sign of the exponent and the scale factor of a Fourier matrix: element
/// (k, j) of F_N is factor(N) * exp(sign * 2*pi*i * k*j / N).
///
/// The quantum transform uses sign = +1 (omega = e^{+2*pi*i/N}); the
/// classical transform defaults to sign = -1. Quantum operators are always
/// unitary-normalized; Plain and InverseN exist for the classical worked
/// examples that drop the 1/sqrt(N).
struct FourierConvention {
    int sign = +1;
    Normalization normalization = Normalization::Unitary;

    double factor(std::size_t n) const;
};

inline constexpr FourierConvention kQftConvention{+1, Normalization::Unitary};
inline constexpr FourierConvention kDftConvention{-1, Normalization::Unitary};

/// [omega^0, omega^1, ..., omega^(n-1)] with omega = e^{sign * 2*pi*i / n}.
/// Every power lies on the unit circle within 1e-12.
std::vector<Complex> roots_of_unity(std::size_t n, int sign);

/// The N x N Fourier matrix under the given convention.
ComplexMatrix dft_matrix(std::size_t n, const FourierConvention& convention);

struct QftCircuitSpec {
    int n_qubits = 1;
    bool inverse = false;
    bool include_final_swaps = true;
};

/// Hadamard + controlled-phase ladder: for each wire q from 0 (MSB), H(q)
/// followed by CP(control=q', target=q, theta=pi/2^(q'-q)) for every deeper
/// wire q', then a final layer of floor(n/2) swaps that undoes the
/// bit-reversed output order. Gate count is n + n(n-1)/2 + floor(n/2).
///
/// With the swaps, the circuit's unitary equals
/// dft_matrix(2^n, {+1, Unitary}). The inverse spec reverses the gate order
/// and negates the phases.
Circuit build_qft_circuit(const QftCircuitSpec& spec);

/// The register that encodes j in relative phases, wire q carrying
/// (|0> + e^{2*pi*i*j/2^(n-q)} |1>)/sqrt(2) -- i.e. the coarsest phase on the
/// last wire. This is the bit-reversed image of F|j>, so the inverse circuit
/// WITHOUT the swap layer maps it back to |j> exactly.
StateVector prepare_fourier_state(std::uint64_t j, int n_qubits);

/// Right-to-left operator string, last-applied gate leftmost:
/// "SWAP_{0,1} H_{1} C_{1}(P_{0}^{1/2}) H_{0}" for the 2-wire transform.
/// Phase exponents are written as multiples of pi, as an exact fraction when
/// the angle is a small rational multiple and as a decimal otherwise. The
/// empty circuit renders as "I".
std::string render_decomposition(const Circuit& c);

/// Parses render_decomposition output back into a circuit.
Circuit parse_decomposition(const std::string& text, int n_qubits);

/// The two transformed 2-qubit states whose inputs differ only in relative
/// phases: QFT applied to (1,1,1,1)/2 and to the phase ramp (1,-i,-1,i)/2.
/// Equal magnitudes in, distinct measurement peaks out -- (1,0,0,0) and
/// (0,1,0,0).
std::pair<StateVector, StateVector> relative_phase_demo();

} // namespace qtones::qft
