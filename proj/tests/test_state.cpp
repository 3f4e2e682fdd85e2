#include <doctest.h>

#include <cmath>
#include <limits>

#include "qtones/circuit.hpp"
#include "qtones/qft.hpp"
#include "qtones/rng.hpp"
#include "qtones/state.hpp"

using namespace qtones;

namespace {

double max_amp_diff(const StateVector& a, const std::vector<Complex>& b) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::vector<Complex> random_amps(SplitMix64& rng, std::uint64_t dim) {
    std::vector<Complex> amps(dim);
    double norm2 = 0.0;
    for (auto& a : amps) {
        a = Complex{rng.next_double() * 2 - 1, rng.next_double() * 2 - 1};
        norm2 += std::norm(a);
    }
    for (auto& a : amps) a *= 1.0 / std::sqrt(norm2);
    return amps;
}

} // namespace

TEST_CASE("basis states use MSB-first indexing") {
    CHECK(basis_state(3, 6)[6] == Complex{1.0, 0.0});
    CHECK(StateVector::bitstring(6, 3) == "110");
    CHECK(StateVector::bitstring(10, 4) == "1010");
    CHECK(basis_state(4, 10).argmax_probability() == 10);
    CHECK(basis_state(1, 0)[0] == Complex{1.0, 0.0});
    CHECK_THROWS_AS(basis_state(3, 8), ContractError);
    CHECK_THROWS_AS(basis_state(0, 0), ContractError);
}

TEST_CASE("state construction enforces the invariants") {
    CHECK_THROWS_AS(StateVector(2, {Complex{1, 0}, Complex{0, 0}}), ContractError); // bad length
    CHECK_THROWS_AS(StateVector(1, {Complex{1, 0}, Complex{1, 0}}), ContractError); // norm 2
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(StateVector(1, {Complex{nan, 0}, Complex{0, 0}}), ContractError);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(StateVector(1, {Complex{inf, 0}, Complex{0, 0}}), ContractError);
}

TEST_CASE("single gates on small registers") {
    const double s = 1.0 / std::sqrt(2.0);

    SUBCASE("H on |0> gives the even superposition") {
        const StateVector out = apply_gate(basis_state(1, 0), gate::h(0));
        CHECK(max_amp_diff(out, {Complex{s, 0}, Complex{s, 0}}) < 1e-15);
    }
    SUBCASE("phase gate leaves |0> alone") {
        const StateVector out = apply_gate(basis_state(1, 0), gate::phase(0, 1.234));
        CHECK(max_amp_diff(out, {Complex{1, 0}, Complex{0, 0}}) == 0.0);
    }
    SUBCASE("swap permutes |01> to |10>") {
        const StateVector out = apply_gate(basis_state(2, 1), gate::swap(0, 1));
        CHECK(out.argmax_probability() == 2);
    }
    SUBCASE("X flips the target bit") {
        const StateVector out = apply_gate(basis_state(2, 0), gate::x(1));
        CHECK(out.argmax_probability() == 1);
    }
    SUBCASE("wire indices are validated") {
        CHECK_THROWS_AS(apply_gate(basis_state(1, 0), gate::h(1)), ContractError);
        CHECK_THROWS_AS(apply_gate(basis_state(2, 0), gate::swap(0, 2)), ContractError);
    }
}

TEST_CASE("gate-local invariants") {
    Circuit c(2);
    CHECK_THROWS_AS(c.append(gate::cphase(1, 1, 0.5)), ContractError);
    CHECK_THROWS_AS(c.append(gate::swap(0, 0)), ContractError);
    CHECK_THROWS_AS(c.append(gate::phase(0, std::numeric_limits<double>::quiet_NaN())),
                    ContractError);
    CHECK_THROWS_AS(c.append(gate::cphase(0, 1, std::numeric_limits<double>::infinity())),
                    ContractError);
}

TEST_CASE("apply_circuit basics") {
    SUBCASE("empty circuit is the identity") {
        const StateVector in = basis_state(2, 3);
        const StateVector out = apply_circuit(in, Circuit(2));
        CHECK(max_amp_diff(out, in.amps()) == 0.0);
    }
    SUBCASE("[H] maps |1> to |->") {
        const double s = 1.0 / std::sqrt(2.0);
        const StateVector out = apply_circuit(basis_state(1, 1), Circuit(1, {gate::h(0)}));
        CHECK(max_amp_diff(out, {Complex{s, 0}, Complex{-s, 0}}) < 1e-15);
    }
    SUBCASE("2-qubit transform of |01> is (1, i, -1, -i)/2") {
        const Circuit qft2 = qft::build_qft_circuit({.n_qubits = 2});
        const StateVector out = apply_circuit(basis_state(2, 1), qft2);
        CHECK(max_amp_diff(out, {Complex{0.5, 0}, Complex{0, 0.5}, Complex{-0.5, 0},
                                 Complex{0, -0.5}}) < 1e-12);
    }
    SUBCASE("qubit-count mismatch is rejected") {
        CHECK_THROWS_AS(apply_circuit(basis_state(2, 0), Circuit(3)), ContractError);
    }
}

TEST_CASE("circuit_to_unitary") {
    SUBCASE("[H] is the Hadamard matrix") {
        const double s = 1.0 / std::sqrt(2.0);
        const ComplexMatrix u = circuit_to_unitary(Circuit(1, {gate::h(0)}));
        CHECK(std::abs(u.at(0, 0) - Complex{s, 0}) < 1e-15);
        CHECK(std::abs(u.at(0, 1) - Complex{s, 0}) < 1e-15);
        CHECK(std::abs(u.at(1, 0) - Complex{s, 0}) < 1e-15);
        CHECK(std::abs(u.at(1, 1) - Complex{-s, 0}) < 1e-15);
    }
    SUBCASE("empty 2-qubit circuit is the 4x4 identity") {
        const ComplexMatrix u = circuit_to_unitary(Circuit(2));
        CHECK(u.max_abs_diff(ComplexMatrix::identity(4)) == 0.0);
    }
    SUBCASE("dense assembly is capped") {
        CHECK_THROWS_AS(circuit_to_unitary(Circuit(13)), ContractError);
    }
}

TEST_CASE("gate embedding matches the dense unitary route") {
    // Every gate kind at every wire position, n = 1..4, against the
    // independent unitary-times-vector route.
    SplitMix64 rng(77);
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        std::vector<Gate> pool;
        for (int t = 0; t < n; ++t) {
            pool.push_back(gate::h(t));
            pool.push_back(gate::x(t));
            pool.push_back(gate::phase(t, rng.next_double() * 6 - 3));
            for (int c = 0; c < n; ++c) {
                if (c == t) continue;
                pool.push_back(gate::cphase(c, t, rng.next_double() * 6 - 3));
                pool.push_back(gate::swap(c, t));
            }
        }
        for (const Gate& g : pool) {
            const StateVector in(n, random_amps(rng, dim));
            const StateVector direct = apply_gate(in, g);
            const std::vector<Complex> via_matrix =
                circuit_to_unitary(Circuit(n, {g})).apply(in.amps());
            CHECK(max_amp_diff(direct, via_matrix) < 1e-12);
        }
    }
}

TEST_CASE("algebraic gate identities") {
    SplitMix64 rng(88);
    SUBCASE("H is self-inverse") {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 1 + static_cast<int>(rng.next_below(4));
            const int q = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            const StateVector in(n, random_amps(rng, std::uint64_t{1} << n));
            const StateVector back = apply_gate(apply_gate(in, gate::h(q)), gate::h(q));
            CHECK(max_amp_diff(back, in.amps()) < 1e-12);
        }
    }
    SUBCASE("swap twice is the identity") {
        const ComplexMatrix twice =
            circuit_to_unitary(Circuit(3, {gate::swap(0, 2), gate::swap(0, 2)}));
        CHECK(twice.max_abs_diff(ComplexMatrix::identity(8)) == 0.0);
    }
    SUBCASE("controlled phase is symmetric in its wires") {
        const ComplexMatrix a = circuit_to_unitary(Circuit(3, {gate::cphase(0, 2, 0.77)}));
        const ComplexMatrix b = circuit_to_unitary(Circuit(3, {gate::cphase(2, 0, 0.77)}));
        CHECK(a.max_abs_diff(b) == 0.0);
    }
}

TEST_CASE("random circuits preserve the norm") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(6));
        Circuit c(n);
        const std::uint64_t n_gates = rng.next_below(30);
        for (std::uint64_t g = 0; g < n_gates; ++g) {
            const int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            switch (rng.next_below(n >= 2 ? 5 : 3)) {
                case 0:
                    c.append(gate::h(t));
                    break;
                case 1:
                    c.append(gate::x(t));
                    break;
                case 2:
                    c.append(gate::phase(t, rng.next_double() * 12 - 6));
                    break;
                case 3: {
                    int o = t;
                    while (o == t) o = static_cast<int>(rng.next_below(std::uint64_t(n)));
                    c.append(gate::cphase(o, t, rng.next_double() * 12 - 6));
                    break;
                }
                default: {
                    int o = t;
                    while (o == t) o = static_cast<int>(rng.next_below(std::uint64_t(n)));
                    c.append(gate::swap(o, t));
                    break;
                }
            }
        }
        const StateVector out = apply_circuit(StateVector(n, random_amps(rng, 1ull << n)), c);
        CHECK(std::abs(out.norm_squared() - 1.0) < 1e-9);
    }
}
