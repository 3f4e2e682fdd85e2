#include "qtones/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "qtones/audio.hpp"
#include "qtones/circuit.hpp"
#include "qtones/detect.hpp"
#include "qtones/kernels.hpp"
#include "qtones/qft.hpp"
#include "qtones/rng.hpp"
#include "qtones/spectral.hpp"

namespace qtones::verify {

namespace {

double uniform_pm1(SplitMix64& rng) { return rng.next_double() * 2.0 - 1.0; }

Gate random_gate(SplitMix64& rng, int n) {
    const auto wire = [&] { return static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n))); };
    const auto angle = [&] { return uniform_pm1(rng) * 2.0 * 3.14159265358979323846; };
    const std::uint64_t kind = rng.next_below(n >= 2 ? 5 : 3);
    switch (kind) {
        case 0:
            return gate::h(wire());
        case 1:
            return gate::x(wire());
        case 2:
            return gate::phase(wire(), angle());
        case 3: {
            const int c = wire();
            int t = wire();
            while (t == c) t = wire();
            return gate::cphase(c, t, angle());
        }
        default: {
            const int a = wire();
            int b = wire();
            while (b == a) b = wire();
            return gate::swap(a, b);
        }
    }
}

std::vector<Complex> random_normalized_amps(SplitMix64& rng, std::uint64_t dim) {
    std::vector<Complex> amps(dim);
    double norm2 = 0.0;
    for (auto& a : amps) {
        a = Complex{uniform_pm1(rng), uniform_pm1(rng)};
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    return amps;
}

audio::SampledSignal random_signal(SplitMix64& rng, std::uint32_t rate, std::size_t len) {
    audio::SampledSignal s{rate, {}};
    s.samples.resize(len);
    for (auto& v : s.samples) v = uniform_pm1(rng);
    return s;
}

double max_amp_error(const StateVector& got, const std::vector<Complex>& expected) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < got.dim(); ++i)
        worst = std::max(worst, std::abs(got[i] - expected[i]));
    return worst;
}

double max_signal_error(const spectral::ComplexSignal& got,
                        const spectral::ComplexSignal& expected) {
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        worst = std::max(worst, std::abs(got[i] - expected[i]));
    return worst;
}

// --- criterion 1 -----------------------------------------------------------

CheckResult check_qft_dft_equivalence() {
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        const ComplexMatrix u = circuit_to_unitary(qft::build_qft_circuit({.n_qubits = n}));
        const ComplexMatrix f =
            qft::dft_matrix(std::size_t{1} << n, {+1, qft::Normalization::Unitary});
        worst = std::max(worst, u.max_abs_diff(f));
    }
    return {"qft_dft_equivalence", worst < 1e-10, worst, 1e-10, false,
            "circuit unitary vs transform matrix, n=1..8"};
}

// --- criterion 2 -----------------------------------------------------------

CheckResult check_paper_worked_examples() {
    using spectral::ComplexSignal;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    double worst = 0.0;

    const Circuit qft2 = qft::build_qft_circuit({.n_qubits = 2});
    worst = std::max(worst, max_amp_error(apply_circuit(basis_state(2, 1), qft2),
                                         {Complex{0.5, 0.0}, Complex{0.0, 0.5},
                                          Complex{-0.5, 0.0}, Complex{0.0, -0.5}}));

    const Circuit qft1 = qft::build_qft_circuit({.n_qubits = 1});
    worst = std::max(worst, max_amp_error(apply_circuit(basis_state(1, 0), qft1),
                                         {Complex{inv_sqrt2, 0.0}, Complex{inv_sqrt2, 0.0}}));
    worst = std::max(worst, max_amp_error(apply_circuit(basis_state(1, 1), qft1),
                                         {Complex{inv_sqrt2, 0.0}, Complex{-inv_sqrt2, 0.0}}));

    const qft::FourierConvention plain_minus{-1, qft::Normalization::Plain};
    worst = std::max(worst, max_signal_error(spectral::dft(ComplexSignal{{1.0, 0.0}, {2.0, 0.0}},
                                                           plain_minus),
                                             {Complex{3.0, 0.0}, Complex{-1.0, 0.0}}));
    worst = std::max(
        worst, max_signal_error(
                   spectral::dft(ComplexSignal{{1.0, 0.0}, {2.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
                                 plain_minus),
                   {Complex{3.0, 0.0}, Complex{1.0, -2.0}, Complex{-1.0, 0.0}, Complex{1.0, 2.0}}));
    worst = std::max(
        worst, max_signal_error(
                   spectral::fft(ComplexSignal{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
                                 plain_minus),
                   {Complex{1.0, 0.0}, Complex{0.0, -1.0}, Complex{-1.0, 0.0}, Complex{0.0, 1.0}}));

    return {"paper_worked_examples", worst < 1e-12, worst, 1e-12, false,
            "F4|01>, 1-qubit transforms, DFT(1,2), DFT(1,2,0,0), FFT(0,1,0,0)"};
}

// --- criterion 3 -----------------------------------------------------------

CheckResult check_fourier_state_roundtrip() {
    const std::pair<std::uint64_t, int> cases[] = {{6, 3}, {10, 4}, {20, 5}};
    double min_weight = 1.0;
    bool argmax_ok = true;
    for (const auto& [j, n] : cases) {
        const Circuit inverse_noswap =
            qft::build_qft_circuit({.n_qubits = n, .inverse = true, .include_final_swaps = false});
        const StateVector out = apply_circuit(qft::prepare_fourier_state(j, n), inverse_noswap);
        const detect::MeasurementHistogram hist = detect::measure_exact(out);
        if (out.argmax_probability() != j) argmax_ok = false;
        min_weight = std::min(min_weight, hist.entries[j]);
    }
    return {"fourier_state_roundtrip", argmax_ok && min_weight > 0.999, min_weight, 0.999, true,
            "inverse transform of encoded (6,3), (10,4), (20,5)"};
}

// --- criterion 4 -----------------------------------------------------------

CheckResult check_a440_detection() {
    const audio::SampledSignal tone = audio::synth_tone({{440.0, 1.0}}, 44100, 1024);
    detect::PipelineOptions opt;
    opt.n_qubits = 10;
    opt.mode = detect::DetectMode::Note;
    const detect::DetectionReport report = detect::detect_pipeline(tone, opt);
    const double expected[] = {430.6640625, 473.73046875};
    double worst = 1.0;
    if (report.peaks.size() == 2) {
        worst = std::max(std::abs(report.peaks[0].frequency_hz - expected[0]),
                         std::abs(report.peaks[1].frequency_hz - expected[1]));
    }
    return {"a440_detection", worst < 1e-9, worst, 1e-9, false,
            "440 Hz at rate 44100, 1024 samples -> 430.6640625, 473.73046875"};
}

// --- criterion 5 -----------------------------------------------------------

CheckResult check_f_major_chord() {
    const audio::SampledSignal chord =
        audio::synth_tone({{130.81, 1.0}, {174.61, 1.0}, {440.0, 1.0}}, 44100, 4096);
    detect::PipelineOptions opt;
    opt.n_qubits = 12;
    opt.mode = detect::DetectMode::Chord;
    const detect::DetectionReport report = detect::detect_pipeline(chord, opt);
    const double one_bin = 44100.0 / 4096.0;
    const double expected[] = {129.19921875, 172.265625, 441.43066406};

    double worst = 0.0;
    for (double e : expected) {
        double best = 1e9;
        for (const auto& p : report.peaks) best = std::min(best, std::abs(p.frequency_hz - e));
        worst = std::max(worst, best);
    }
    std::set<std::string> notes;
    for (const auto& p : report.peaks)
        if (p.note) notes.insert(p.note->label());
    const bool notes_ok = notes == std::set<std::string>{"C3", "F3", "A4"};
    return {"f_major_chord", worst <= one_bin && notes_ok, worst, one_bin, false,
            "triad at rate 44100, 4096 samples -> C3, F3, A4"};
}

// --- criterion 6 -----------------------------------------------------------

CheckResult check_dtmf_keys() {
    const char keys[] = {'1', '2', '3', '4', '5', '6', '7', '8', '9', '0', '*', '#'};
    int decoded = 0;
    double worst = 1.0;
    detect::PipelineOptions opt;
    opt.n_qubits = 10;
    opt.mode = detect::DetectMode::Dtmf;
    for (char key : keys) {
        const audio::SampledSignal tone = audio::synth_dtmf(key, 8000, 1024);
        const detect::DetectionReport report = detect::detect_pipeline(tone, opt);
        if (report.dtmf_key && *report.dtmf_key == key) ++decoded;
        if (key == '1' && report.peaks.size() == 2) {
            double freqs[2] = {report.peaks[0].frequency_hz, report.peaks[1].frequency_hz};
            std::sort(std::begin(freqs), std::end(freqs));
            worst = std::max(std::abs(freqs[0] - 695.3125), std::abs(freqs[1] - 1210.9375));
        }
    }
    return {"dtmf_all_keys", decoded == 12 && worst < 1e-9, worst, 1e-9, false,
            "key '1' -> 695.3125, 1210.9375 exactly; " + std::to_string(decoded) +
                "/12 keys decoded"};
}

// --- criterion 7 -----------------------------------------------------------

CheckResult check_oracle_equivalence() {
    SplitMix64 rng(7001);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(7)); // 4..10
        const std::uint64_t dim = std::uint64_t{1} << n;
        const audio::SampledSignal sig = random_signal(rng, 44100, dim);

        const detect::EncodedRegister reg = detect::amplitude_encode(sig, n);
        const StateVector transformed =
            apply_circuit(reg.state, qft::build_qft_circuit({.n_qubits = n}));
        const std::vector<double> quantum = transformed.probabilities();

        spectral::ComplexSignal x(dim);
        for (std::uint64_t i = 0; i < dim; ++i) x[i] = reg.state[i];
        const spectral::ComplexSignal oracle =
            spectral::fft(x, {-1, qft::Normalization::Unitary});
        for (std::uint64_t i = 0; i < dim; ++i)
            worst = std::max(worst, std::abs(quantum[i] - std::norm(oracle[i])));
    }
    return {"oracle_equivalence", worst < 1e-9, worst, 1e-9, false,
            "quantum power spectrum vs |unitary FFT|^2, 100 random signals"};
}

// --- criterion 8 -----------------------------------------------------------

CheckResult check_sparse_factorization() {
    const spectral::FactorizationReport report = spectral::sparse_factorization_check();
    const bool ok = report.product_matches && report.holding_order == "U2*U1" &&
                    report.u1_nonzeros == 8 && report.u2_nonzeros == 8 &&
                    report.f4_unitary_after_scaling;
    return {"sparse_factorization", ok, ok ? 0.0 : 1.0, 1.0, false,
            "exact Gaussian-integer product holds as " +
                (report.holding_order.empty() ? std::string("(none)") : report.holding_order)};
}

// --- criterion 9 -----------------------------------------------------------

CheckResult check_shot_sampling() {
    constexpr std::uint64_t kShots = 8192;
    constexpr std::uint64_t kSeed = 20220415;
    const audio::SampledSignal tone = audio::synth_tone({{440.0, 1.0}}, 44100, 1024);
    const detect::EncodedRegister reg = detect::amplitude_encode(tone, 10);
    const StateVector transformed =
        apply_circuit(reg.state, qft::build_qft_circuit({.n_qubits = 10}));

    const detect::MeasurementHistogram exact = detect::measure_exact(transformed);
    const detect::MeasurementHistogram shots = detect::sample_shots(transformed, kShots, kSeed);

    std::uint64_t exact_argmax = 0, shot_argmax = 0;
    for (std::size_t i = 1; i < exact.entries.size(); ++i) {
        if (exact.entries[i] > exact.entries[exact_argmax]) exact_argmax = i;
        if (shots.entries[i] > shots.entries[shot_argmax]) shot_argmax = i;
    }
    double tv = 0.0;
    for (std::size_t i = 0; i < exact.entries.size(); ++i)
        tv += std::abs(exact.entries[i] - shots.entries[i] / static_cast<double>(kShots));
    tv *= 0.5;
    return {"shot_sampling", shot_argmax == exact_argmax && tv < 0.05, tv, 0.05, false,
            "8192 shots, seed " + std::to_string(kSeed) + ", argmax bin " +
                std::to_string(shot_argmax)};
}

// --- criterion 10 ----------------------------------------------------------

CheckResult check_property_suites() {
    char detail[256];

    // Norm preservation over 1000 random circuits.
    SplitMix64 rng(10001);
    double norm_err = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(8));
        const std::uint64_t dim = std::uint64_t{1} << n;
        std::vector<Complex> amps = random_normalized_amps(rng, dim);
        const std::uint64_t n_gates = rng.next_below(51);
        for (std::uint64_t g = 0; g < n_gates; ++g)
            kernels::apply_gate_inplace(amps, n, random_gate(rng, n));
        norm_err = std::max(norm_err, std::abs(norm_squared(amps) - 1.0));
    }

    // Gate-count formula.
    bool counts_ok = true;
    for (int n = 1; n <= 16; ++n) {
        const auto expect = static_cast<std::size_t>(n + n * (n - 1) / 2 + n / 2);
        if (qft::build_qft_circuit({.n_qubits = n}).size() != expect) counts_ok = false;
        if (qft::build_qft_circuit({.n_qubits = n, .inverse = true}).size() != expect)
            counts_ok = false;
    }

    // Parseval under the unitary convention.
    double parseval_err = 0.0;
    for (std::size_t len = 2; len <= 4096; len *= 2) {
        spectral::ComplexSignal x(len);
        double norm2 = 0.0;
        for (auto& v : x) {
            v = Complex{uniform_pm1(rng), uniform_pm1(rng)};
            norm2 += std::norm(v);
        }
        const spectral::ComplexSignal c = spectral::dft(x, {-1, qft::Normalization::Unitary});
        double cnorm2 = 0.0;
        for (const auto& v : c) cnorm2 += std::norm(v);
        parseval_err = std::max(parseval_err, std::abs(norm2 - cnorm2) / norm2);
    }

    // Conjugate-symmetry fold of real inputs.
    double fold_err = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 8;
        const std::uint64_t dim = std::uint64_t{1} << n;
        const audio::SampledSignal sig = random_signal(rng, 8000, dim);
        const StateVector transformed = apply_circuit(
            detect::amplitude_encode(sig, n).state, qft::build_qft_circuit({.n_qubits = n}));
        const std::vector<double> w = transformed.probabilities();
        for (std::uint64_t k = 1; k < dim / 2; ++k)
            fold_err = std::max(fold_err, std::abs(w[k] - w[dim - k]));
    }

    // WAV round trip at quantization resolution.
    double wav_err = 0.0;
    bool wav_ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t len = rng.next_below(2000);
        const audio::SampledSignal sig = random_signal(rng, 44100, len);
        const audio::WavFile back = audio::read_wav(audio::write_wav(sig));
        if (back.signal.samples.size() != len || back.signal.sample_rate != 44100) wav_ok = false;
        for (std::size_t i = 0; i < len; ++i)
            wav_err = std::max(wav_err, std::abs(back.signal.samples[i] - sig.samples[i]));
    }
    const double quantum_step = 1.0 / 32768.0;

    const bool passed = norm_err < 1e-9 && counts_ok && parseval_err < 1e-9 &&
                        fold_err < 1e-9 && wav_ok && wav_err <= quantum_step + 1e-15;
    // Normalize each family against its own tolerance for the summary value.
    const double worst_ratio =
        std::max({norm_err / 1e-9, counts_ok ? 0.0 : 2.0, parseval_err / 1e-9, fold_err / 1e-9,
                  wav_err / quantum_step});
    std::snprintf(detail, sizeof(detail),
                  "norm=%.2e counts=%s parseval=%.2e fold=%.2e wav=%.2e", norm_err,
                  counts_ok ? "ok" : "BAD", parseval_err, fold_err, wav_err);
    return {"property_suites", passed, worst_ratio, 1.0, false, detail};
}

} // namespace

std::vector<CheckResult> run_all_checks() {
    return {
        check_qft_dft_equivalence(), check_paper_worked_examples(),
        check_fourier_state_roundtrip(), check_a440_detection(), check_f_major_chord(),
        check_dtmf_keys(), check_oracle_equivalence(), check_sparse_factorization(),
        check_shot_sampling(), check_property_suites(),
    };
}

std::string format_check_line(const CheckResult& r, std::size_t index, std::size_t total) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "[%2zu/%zu] %s  %-26s measured=%.6g tolerance%s%.6g  %s",
                  index, total, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured,
                  r.at_least ? ">" : "<", r.tolerance, r.detail.c_str());
    return buf;
}

} // namespace qtones::verify
