#pragma once

#include <variant>

#include "qtones/types.hpp"

namespace qtones {

struct HGate {
    int target;
};

struct XGate {
    int target;
};

/// diag(1, e^{i theta}) on the target wire.
struct PhaseGate {
    int target;
    double theta;
};

/// Applies e^{i theta} when control and target are both |1>. Diagonal, so it
/// is symmetric under exchanging control and target.
struct ControlledPhaseGate {
    int control;
    int target;
    double theta;
};

struct SwapGate {
    int a;
    int b;
};

using Gate = std::variant<HGate, XGate, PhaseGate, ControlledPhaseGate, SwapGate>;

namespace gate {
inline Gate h(int target) { return HGate{target}; }
inline Gate x(int target) { return XGate{target}; }
inline Gate phase(int target, double theta) { return PhaseGate{target, theta}; }
inline Gate cphase(int control, int target, double theta) {
    return ControlledPhaseGate{control, target, theta};
}
inline Gate swap(int a, int b) { return SwapGate{a, b}; }
} // namespace gate

/// Throws ContractError on out-of-range wires, coincident wires, or a
/// non-finite angle.
void validate_gate(const Gate& g, int n_qubits);

/// H, X and SWAP are involutions; phase gates negate their angle.
Gate inverse_gate(const Gate& g);

} // namespace qtones
