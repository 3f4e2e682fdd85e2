#include <doctest.h>

#include <cmath>
#include <cstring>

#include <omp.h>

#include "qtones/kernels.hpp"
#include "qtones/qft.hpp"
#include "qtones/rng.hpp"

using namespace qtones;

namespace {

std::vector<Complex> random_state(SplitMix64& rng, std::uint64_t dim) {
    std::vector<Complex> amps(dim);
    double norm2 = 0.0;
    for (auto& a : amps) {
        a = Complex{rng.next_double() * 2 - 1, rng.next_double() * 2 - 1};
        norm2 += std::norm(a);
    }
    for (auto& a : amps) a *= 1.0 / std::sqrt(norm2);
    return amps;
}

std::vector<Gate> random_gates(SplitMix64& rng, int n, std::size_t count) {
    std::vector<Gate> gates;
    const auto wire = [&] { return static_cast<int>(rng.next_below(std::uint64_t(n))); };
    for (std::size_t i = 0; i < count; ++i) {
        const int t = wire();
        switch (rng.next_below(n >= 2 ? 5 : 3)) {
            case 0:
                gates.push_back(gate::h(t));
                break;
            case 1:
                gates.push_back(gate::x(t));
                break;
            case 2:
                gates.push_back(gate::phase(t, rng.next_double() * 12 - 6));
                break;
            case 3: {
                int o = t;
                while (o == t) o = wire();
                gates.push_back(gate::cphase(o, t, rng.next_double() * 12 - 6));
                break;
            }
            default: {
                int o = t;
                while (o == t) o = wire();
                gates.push_back(gate::swap(o, t));
                break;
            }
        }
    }
    return gates;
}

bool bitwise_equal(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(Complex)) == 0;
}

} // namespace

TEST_CASE("parallel kernels match the serial reference bit for bit") {
    SplitMix64 rng(1234);
    for (int n = 1; n <= 10; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        std::vector<Complex> parallel = random_state(rng, dim);
        std::vector<Complex> serial = parallel;
        for (const Gate& g : random_gates(rng, n, 40)) {
            kernels::apply_gate_inplace(parallel, n, g);
            kernels::reference::apply_gate_inplace(serial, n, g);
            REQUIRE(bitwise_equal(parallel, serial));
        }
    }
}

TEST_CASE("results do not depend on the thread count") {
    SplitMix64 rng(4321);
    const int n = 13; // above the parallel threshold
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::vector<Complex> input = random_state(rng, dim);
    const std::vector<Gate> gates = random_gates(rng, n, 30);

    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    std::vector<Complex> one = input;
    for (const Gate& g : gates) kernels::apply_gate_inplace(one, n, g);

    omp_set_num_threads(4);
    std::vector<Complex> four = input;
    for (const Gate& g : gates) kernels::apply_gate_inplace(four, n, g);
    omp_set_num_threads(saved);

    CHECK(bitwise_equal(one, four));
}

TEST_CASE("controlled phase kernels agree for both wire orders") {
    SplitMix64 rng(111);
    const int n = 6;
    std::vector<Complex> a = random_state(rng, 1ull << n);
    std::vector<Complex> b = a;
    kernels::apply_gate_inplace(a, n, gate::cphase(1, 4, 0.37));
    kernels::apply_gate_inplace(b, n, gate::cphase(4, 1, 0.37));
    CHECK(bitwise_equal(a, b));
}

TEST_CASE("full transform circuit matches between kernel paths") {
    SplitMix64 rng(222);
    const int n = 9;
    const Circuit qft = qft::build_qft_circuit({.n_qubits = n});
    std::vector<Complex> parallel = random_state(rng, 1ull << n);
    std::vector<Complex> serial = parallel;
    for (const Gate& g : qft.gates()) {
        kernels::apply_gate_inplace(parallel, n, g);
        kernels::reference::apply_gate_inplace(serial, n, g);
    }
    CHECK(bitwise_equal(parallel, serial));
}
