#include "qtones/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qtones/kernels.hpp"

namespace qtones {

namespace {

constexpr double kPerGateDriftTol = 1e-12;
constexpr int kMaxDenseQubits = 12;

void check_norm_drift(double before, double after, const char* what) {
    if (!(std::abs(after - before) <= kPerGateDriftTol)) {
        throw ContractError(std::string(what) + ": norm^2 drifted from " +
                            std::to_string(before) + " to " + std::to_string(after) +
                            " (tolerance 1e-12)");
    }
}

} // namespace

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw ContractError("circuit must span between 1 and " + std::to_string(kMaxQubits) +
                            " qubits, got " + std::to_string(n_qubits));
}

Circuit::Circuit(int n_qubits, std::vector<Gate> gates) : Circuit(n_qubits) {
    for (const Gate& g : gates) validate_gate(g, n_qubits_);
    gates_ = std::move(gates);
}

Circuit& Circuit::append(Gate g) {
    validate_gate(g, n_qubits_);
    gates_.push_back(std::move(g));
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit inv(n_qubits_);
    inv.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
        inv.gates_.push_back(inverse_gate(*it));
    return inv;
}

StateVector apply_gate(const StateVector& state, const Gate& g) {
    validate_gate(g, state.n_qubits());
    std::vector<Complex> amps = state.amps();
    kernels::apply_gate_inplace(amps, state.n_qubits(), g);
    check_norm_drift(state.norm_squared(), norm_squared(amps), "apply_gate");
    return StateVector(state.n_qubits(), std::move(amps));
}

StateVector apply_circuit(const StateVector& state, const Circuit& c) {
    if (state.n_qubits() != c.n_qubits())
        throw ContractError("apply_circuit: state has " + std::to_string(state.n_qubits()) +
                            " qubits but circuit expects " + std::to_string(c.n_qubits()));
    std::vector<Complex> amps = state.amps();
    double prev_norm2 = state.norm_squared();
    for (const Gate& g : c.gates()) {
        kernels::apply_gate_inplace(amps, c.n_qubits(), g);
        const double norm2 = norm_squared(amps);
        check_norm_drift(prev_norm2, norm2, "apply_circuit");
        prev_norm2 = norm2;
    }
    // StateVector construction re-checks the 1e-9 post-circuit invariant.
    return StateVector(state.n_qubits(), std::move(amps));
}

ComplexMatrix circuit_to_unitary(const Circuit& c) {
    const int n = c.n_qubits();
    if (n > kMaxDenseQubits)
        throw ContractError("circuit_to_unitary: dense assembly capped at " +
                            std::to_string(kMaxDenseQubits) + " qubits, got " + std::to_string(n));
    const std::uint64_t dim = std::uint64_t{1} << n;
    ComplexMatrix u(dim);
    std::vector<Complex> col(dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
        std::fill(col.begin(), col.end(), Complex{0.0, 0.0});
        col[j] = Complex{1.0, 0.0};
        for (const Gate& g : c.gates()) kernels::apply_gate_inplace(col, n, g);
        const double norm2 = norm_squared(col);
        if (!(std::abs(norm2 - 1.0) <= 1e-9))
            throw ContractError("circuit_to_unitary: column " + std::to_string(j) +
                                " lost unit norm");
        for (std::uint64_t i = 0; i < dim; ++i) u.at(i, j) = col[i];
    }
    return u;
}

} // namespace qtones
