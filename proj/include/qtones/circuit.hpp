#pragma once

#include <vector>

#include "qtones/gates.hpp"
#include "qtones/matrix.hpp"
#include "qtones/state.hpp"

namespace qtones {

/// Ordered gate list over a fixed number of wires. Gates apply in list order:
/// the first gate in the list hits the state first.
class Circuit {
  public:
    explicit Circuit(int n_qubits);
    Circuit(int n_qubits, std::vector<Gate> gates);

    Circuit& append(Gate g);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// Reversed gate order with each gate inverted (phases negated).
    Circuit inverse() const;

  private:
    int n_qubits_;
    std::vector<Gate> gates_;
};

/// One gate embedded at its wires. Norm must be preserved within 1e-12 or
/// this throws ContractError (catches kernel bugs immediately).
StateVector apply_gate(const StateVector& state, const Gate& g);

/// All gates in list order. Per-gate drift tolerance 1e-12, final norm within
/// 1e-9 of 1; violations are hard errors.
StateVector apply_circuit(const StateVector& state, const Circuit& c);

/// Dense unitary of the circuit: column j is the circuit applied to basis
/// state j. Guarded to n_qubits <= 12 (dense 2^n x 2^n assembly).
ComplexMatrix circuit_to_unitary(const Circuit& c);

} // namespace qtones
