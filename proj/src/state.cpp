#include "qtones/state.hpp"

#include <cmath>
#include <utility>

namespace qtones {

namespace {

constexpr double kNormTol = 1e-9;

void require(bool cond, const std::string& msg) {
    if (!cond) throw ContractError(msg);
}

} // namespace

double norm_squared(std::span<const Complex> amps) {
    double total = 0.0;
    for (const Complex& a : amps) total += std::norm(a);
    return total;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
    require(n_qubits_ >= 1 && n_qubits_ <= kMaxQubits,
            "state must have between 1 and " + std::to_string(kMaxQubits) + " qubits, got " +
                std::to_string(n_qubits_));
    const std::uint64_t expect = std::uint64_t{1} << n_qubits_;
    require(amps_.size() == expect, "state of " + std::to_string(n_qubits_) + " qubits needs " +
                                        std::to_string(expect) + " amplitudes, got " +
                                        std::to_string(amps_.size()));
    norm2_ = qtones::norm_squared(amps_);
    // A NaN/Inf amplitude poisons the sum, so one check covers both the norm
    // and the finiteness invariants. Written so NaN fails the comparison.
    if (!(std::abs(norm2_ - 1.0) <= kNormTol)) {
        throw ContractError("state norm^2 is " + std::to_string(norm2_) +
                            ", must be 1 within 1e-9 (non-finite amplitudes also land here)");
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
    return p;
}

std::uint64_t StateVector::argmax_probability() const {
    std::uint64_t best = 0;
    double best_p = std::norm(amps_[0]);
    for (std::uint64_t i = 1; i < amps_.size(); ++i) {
        const double p = std::norm(amps_[i]);
        if (p > best_p) {
            best_p = p;
            best = i;
        }
    }
    return best;
}

std::string StateVector::bitstring(std::uint64_t index, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if (index & (std::uint64_t{1} << (n_qubits - 1 - q))) s[static_cast<std::size_t>(q)] = '1';
    }
    return s;
}

StateVector basis_state(int n_qubits, std::uint64_t index) {
    require(n_qubits >= 1 && n_qubits <= kMaxQubits, "basis_state: bad qubit count");
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    require(index < dim, "basis_state: index " + std::to_string(index) + " out of range for " +
                             std::to_string(n_qubits) + " qubits");
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[index] = Complex{1.0, 0.0};
    return StateVector(n_qubits, std::move(amps));
}

} // namespace qtones
