#include "qtones/gates.hpp"

#include <cmath>
#include <string>

namespace qtones {

namespace {

void check_wire(int wire, int n_qubits, const char* role) {
    if (wire < 0 || wire >= n_qubits) {
        throw ContractError(std::string(role) + " wire " + std::to_string(wire) +
                            " out of range for " + std::to_string(n_qubits) + " qubits");
    }
}

void check_theta(double theta) {
    if (!std::isfinite(theta)) throw ContractError("phase angle must be finite");
}

} // namespace

void validate_gate(const Gate& g, int n_qubits) {
    std::visit(
        [&](const auto& gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, HGate> || std::is_same_v<T, XGate>) {
                check_wire(gate.target, n_qubits, "target");
            } else if constexpr (std::is_same_v<T, PhaseGate>) {
                check_wire(gate.target, n_qubits, "target");
                check_theta(gate.theta);
            } else if constexpr (std::is_same_v<T, ControlledPhaseGate>) {
                check_wire(gate.control, n_qubits, "control");
                check_wire(gate.target, n_qubits, "target");
                check_theta(gate.theta);
                if (gate.control == gate.target)
                    throw ContractError("controlled phase needs distinct control and target");
            } else if constexpr (std::is_same_v<T, SwapGate>) {
                check_wire(gate.a, n_qubits, "swap");
                check_wire(gate.b, n_qubits, "swap");
                if (gate.a == gate.b) throw ContractError("swap needs two distinct wires");
            }
        },
        g);
}

Gate inverse_gate(const Gate& g) {
    return std::visit(
        [](const auto& gate) -> Gate {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, PhaseGate>) {
                return PhaseGate{gate.target, -gate.theta};
            } else if constexpr (std::is_same_v<T, ControlledPhaseGate>) {
                return ControlledPhaseGate{gate.control, gate.target, -gate.theta};
            } else {
                return gate;
            }
        },
        g);
}

} // namespace qtones
