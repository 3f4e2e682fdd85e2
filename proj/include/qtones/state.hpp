#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qtones/types.hpp"

namespace qtones {

/// Amplitudes of an n-qubit register.
///
/// Bit ordering: qubit 0 is the MOST significant bit of the basis index, so
/// |k1 k2 ... kn> sits at index sum_m 2^(n-m) k_m. Gate kernels on qubit q
/// therefore pair amplitudes at stride 2^(n-1-q).
///
/// Invariants, enforced at construction: length is exactly 2^n_qubits, every
/// amplitude finite, sum |a_i|^2 = 1 within 1e-9. Violations throw
/// ContractError. Instances are immutable and safe to share across threads.
class StateVector {
  public:
    StateVector(int n_qubits, std::vector<Complex> amps);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    const std::vector<Complex>& amps() const { return amps_; }
    const Complex& operator[](std::uint64_t i) const { return amps_[i]; }

    /// Cached sum |a_i|^2 (computed once at construction).
    double norm_squared() const { return norm2_; }

    /// Born-rule weights |a_i|^2 for every basis index.
    std::vector<double> probabilities() const;

    /// Most probable basis index; ties resolve to the lower index.
    std::uint64_t argmax_probability() const;

    /// MSB-first bitstring of a basis index, e.g. bitstring(6, 3) == "110".
    static std::string bitstring(std::uint64_t index, int n_qubits);

  private:
    int n_qubits_;
    std::vector<Complex> amps_;
    double norm2_;
};

/// |index> with amplitude 1 at `index` and 0 elsewhere.
StateVector basis_state(int n_qubits, std::uint64_t index);

/// Sum |a_i|^2 over raw amplitudes.
double norm_squared(std::span<const Complex> amps);

/// Largest register supported (memory guard for 2^n amplitudes).
inline constexpr int kMaxQubits = 28;

} // namespace qtones
