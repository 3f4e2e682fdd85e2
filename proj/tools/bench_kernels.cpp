#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "qtones/kernels.hpp"
#include "qtones/qft.hpp"
#include "qtones/rng.hpp"

namespace {

using namespace qtones;

std::vector<Complex> random_state(std::uint64_t dim, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Complex> amps(dim);
    double norm2 = 0.0;
    for (auto& a : amps) {
        a = Complex{rng.next_double() * 2.0 - 1.0, rng.next_double() * 2.0 - 1.0};
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    return amps;
}

template <typename Fn>
double time_ms(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Times the OpenMP gate kernels against the serial reference kernels on the "
                 "full transform circuit and checks that both produce bit-identical states."};
    int n = 18;
    int reps = 3;
    app.add_option("--qubits", n, "Register size")->check(CLI::Range(4, 26))
        ->capture_default_str();
    app.add_option("--reps", reps, "Repetitions per measurement (best-of)")
        ->check(CLI::Range(1, 100))
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    const std::uint64_t dim = std::uint64_t{1} << n;
    const Circuit circuit = qft::build_qft_circuit({.n_qubits = n});
    const std::vector<Complex> input = random_state(dim, 42);

    std::printf("register: %d qubits (%llu amplitudes, %.1f MiB)\n", n,
                static_cast<unsigned long long>(dim),
                static_cast<double>(dim * sizeof(Complex)) / (1024.0 * 1024.0));
    std::printf("circuit:  %zu gates, omp threads: %d\n\n", circuit.size(),
                omp_get_max_threads());

    std::vector<Complex> serial_out;
    const double serial_ms = time_ms(reps, [&] {
        serial_out = input;
        for (const Gate& g : circuit.gates())
            kernels::reference::apply_gate_inplace(serial_out, n, g);
    });

    std::vector<Complex> parallel_out;
    const double parallel_ms = time_ms(reps, [&] {
        parallel_out = input;
        for (const Gate& g : circuit.gates()) kernels::apply_gate_inplace(parallel_out, n, g);
    });

    const bool identical = std::memcmp(serial_out.data(), parallel_out.data(),
                                       dim * sizeof(Complex)) == 0;

    std::printf("%-22s %10.2f ms\n", "serial reference", serial_ms);
    std::printf("%-22s %10.2f ms\n", "openmp kernels", parallel_ms);
    std::printf("%-22s %10.2fx\n", "speedup", serial_ms / parallel_ms);
    std::printf("%-22s %10s\n", "bitwise identical", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
