#include <doctest.h>

#include <cmath>

#include "qtones/circuit.hpp"
#include "qtones/detect.hpp"
#include "qtones/qft.hpp"
#include "qtones/rng.hpp"
#include "qtones/spectral.hpp"

using namespace qtones;
using audio::SampledSignal;
using detect::DetectMode;

namespace {

SampledSignal random_signal(SplitMix64& rng, std::uint32_t rate, std::size_t len) {
    SampledSignal s{rate, {}};
    s.samples.resize(len);
    for (auto& v : s.samples) v = rng.next_double() * 2 - 1;
    return s;
}

detect::PipelineOptions options(int n_qubits, DetectMode mode) {
    detect::PipelineOptions opt;
    opt.n_qubits = n_qubits;
    opt.mode = mode;
    return opt;
}

} // namespace

TEST_CASE("amplitude_encode") {
    SUBCASE("(1,2,0,0) normalizes to (1,2,0,0)/sqrt(5)") {
        const SampledSignal s{8000, {1.0, 2.0, 0.0, 0.0}};
        const detect::EncodedRegister reg = detect::amplitude_encode(s, 2);
        const double r = 1.0 / std::sqrt(5.0);
        CHECK(std::abs(reg.state[0] - Complex{r, 0}) < 1e-15);
        CHECK(std::abs(reg.state[1] - Complex{2 * r, 0}) < 1e-15);
        CHECK(std::abs(reg.state[2]) == 0.0);
        CHECK(reg.n_samples == 4);
        CHECK(reg.sample_rate == 8000);
    }
    SUBCASE("constant samples become the uniform state") {
        const SampledSignal s{8000, {0.3, 0.3, 0.3, 0.3}};
        const detect::EncodedRegister reg = detect::amplitude_encode(s, 2);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(reg.state[i] - Complex{0.5, 0}) < 1e-12);
    }
    SUBCASE("encoding is unit norm") {
        SplitMix64 rng(5);
        const detect::EncodedRegister reg =
            detect::amplitude_encode(random_signal(rng, 8000, 256), 8);
        CHECK(std::abs(reg.state.norm_squared() - 1.0) < 1e-12);
    }
    SUBCASE("only the first 2^n samples are used") {
        SampledSignal s{8000, {1.0, 0.0, 0.0, 0.0, 99.0}};
        const detect::EncodedRegister reg = detect::amplitude_encode(s, 2);
        CHECK(std::abs(reg.state[0] - Complex{1, 0}) < 1e-15);
    }
    SUBCASE("all-zero window cannot encode") {
        const SampledSignal s{8000, std::vector<double>(4, 0.0)};
        CHECK_THROWS_AS(detect::amplitude_encode(s, 2), EncodeError);
    }
    SUBCASE("short signals need the explicit pad flag") {
        const SampledSignal s{8000, {1.0, 1.0, 1.0}};
        CHECK_THROWS_AS(detect::amplitude_encode(s, 2), EncodeError);
        const detect::EncodedRegister reg = detect::amplitude_encode(s, 2, /*zero_pad=*/true);
        CHECK(std::abs(reg.state[3]) == 0.0);
    }
}

TEST_CASE("measure_exact") {
    SUBCASE("transform of |01> measures uniformly") {
        const StateVector out =
            apply_circuit(basis_state(2, 1), qft::build_qft_circuit({.n_qubits = 2}));
        const detect::MeasurementHistogram hist = detect::measure_exact(out);
        for (double w : hist.entries) CHECK(w == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(hist.shots == 0);
    }
    SUBCASE("basis state measures to a single outcome") {
        const detect::MeasurementHistogram hist = detect::measure_exact(basis_state(3, 5));
        CHECK(hist.entries[5] == 1.0);
    }
}

TEST_CASE("sample_shots") {
    SUBCASE("basis state puts every shot on one outcome") {
        const detect::MeasurementHistogram hist =
            detect::sample_shots(basis_state(3, 5), 100, 7);
        CHECK(hist.entries[5] == 100.0);
    }
    SUBCASE("counts sum to shots and reproduce from the seed") {
        const StateVector out =
            apply_circuit(basis_state(3, 0), qft::build_qft_circuit({.n_qubits = 3}));
        const detect::MeasurementHistogram a = detect::sample_shots(out, 4096, 99);
        const detect::MeasurementHistogram b = detect::sample_shots(out, 4096, 99);
        double total = 0.0;
        for (double c : a.entries) total += c;
        CHECK(total == 4096.0);
        CHECK(a.entries == b.entries);
        CHECK(a.seed == 99);
        CHECK(a.shots == 4096);
    }
    SUBCASE("shots must be positive") {
        CHECK_THROWS_AS(detect::sample_shots(basis_state(1, 0), 0, 0), ContractError);
    }
}

TEST_CASE("decode_frequencies") {
    SUBCASE("frozen bin arithmetic for the 1024-sample case") {
        detect::MeasurementHistogram hist;
        hist.entries.assign(1024, 0.0);
        hist.entries[10] = 0.6;
        hist.entries[11] = 0.4;
        const detect::DetectionReport report = detect::decode_frequencies(hist, 44100, 10, 2);
        REQUIRE(report.peaks.size() == 2);
        CHECK(report.peaks[0].frequency_hz == 430.6640625);
        CHECK(report.peaks[1].frequency_hz == 473.73046875);
        CHECK(report.bin_resolution_hz == doctest::Approx(43.06640625).epsilon(1e-15));
    }
    SUBCASE("frozen bin arithmetic for the 4096-sample case") {
        detect::MeasurementHistogram hist;
        hist.entries.assign(4096, 0.0);
        hist.entries[12] = 0.5;
        hist.entries[16] = 0.3;
        hist.entries[41] = 0.2;
        const detect::DetectionReport report = detect::decode_frequencies(hist, 44100, 12, 3);
        CHECK(report.peaks[0].frequency_hz == 129.19921875);
        CHECK(report.peaks[1].frequency_hz == 172.265625);
        CHECK(report.peaks[2].frequency_hz == 441.4306640625);
    }
    SUBCASE("bin zero maps to 0 Hz and can be excluded") {
        detect::MeasurementHistogram hist;
        hist.entries.assign(16, 0.0);
        hist.entries[0] = 0.9;
        hist.entries[3] = 0.1;
        const detect::DetectionReport with_dc = detect::decode_frequencies(hist, 8000, 4, 1);
        CHECK(with_dc.peaks[0].frequency_hz == 0.0);
        const detect::DetectionReport no_dc =
            detect::decode_frequencies(hist, 8000, 4, 1, /*exclude_dc=*/true);
        CHECK(no_dc.peaks[0].bin == 3);
    }
    SUBCASE("mirror bins above the fold are never reported") {
        detect::MeasurementHistogram hist;
        hist.entries.assign(16, 0.0);
        hist.entries[13] = 1.0; // would win, but sits in the mirrored half
        hist.entries[2] = 0.5;
        const detect::DetectionReport report = detect::decode_frequencies(hist, 8000, 4, 3);
        for (const auto& p : report.peaks) CHECK(p.bin < 8);
        CHECK(report.peaks[0].bin == 2);
    }
    SUBCASE("equal weights break ties toward the lower bin") {
        detect::MeasurementHistogram hist;
        hist.entries.assign(16, 0.0);
        hist.entries[5] = 0.5;
        hist.entries[2] = 0.5;
        const detect::DetectionReport report = detect::decode_frequencies(hist, 8000, 4, 2);
        CHECK(report.peaks[0].bin == 2);
        CHECK(report.peaks[1].bin == 5);
    }
    SUBCASE("argument validation") {
        detect::MeasurementHistogram hist;
        CHECK_THROWS_AS(detect::decode_frequencies(hist, 8000, 4, 1), ContractError);
        hist.entries.assign(8, 0.125);
        CHECK_THROWS_AS(detect::decode_frequencies(hist, 8000, 4, 1), ContractError);
        hist.entries.assign(16, 0.0625);
        CHECK_THROWS_AS(detect::decode_frequencies(hist, 8000, 4, 0), ContractError);
        CHECK_THROWS_AS(detect::decode_frequencies(hist, 8000, 77, 1), ContractError);
    }
}

TEST_CASE("map_note") {
    SUBCASE("440 Hz is A4 dead on") {
        const detect::NotePeak n = detect::map_note(440.0);
        CHECK(n.label() == "A4");
        CHECK(n.cents == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("chord partials map to their named notes") {
        CHECK(detect::map_note(130.81).label() == "C3");
        CHECK(detect::map_note(174.61).label() == "F3");
        CHECK(detect::map_note(129.19921875).label() == "C3");
        CHECK(detect::map_note(172.265625).label() == "F3");
        CHECK(detect::map_note(441.4306640625).label() == "A4");
    }
    SUBCASE("the detected A440 bin sits 37.13 cents flat") {
        const detect::NotePeak n = detect::map_note(430.6640625);
        CHECK(n.label() == "A4");
        CHECK(n.cents == doctest::Approx(-37.12869996606241).epsilon(1e-9));
    }
    SUBCASE("non-positive frequencies are rejected") {
        CHECK_THROWS_AS(detect::map_note(0.0), ContractError);
        CHECK_THROWS_AS(detect::map_note(-5.0), ContractError);
    }
}

TEST_CASE("decode_dtmf") {
    SUBCASE("quantized key-1 frequencies decode") {
        const double peaks[] = {695.3125, 1210.9375};
        CHECK(detect::decode_dtmf(peaks) == '1');
    }
    SUBCASE("exact table frequencies decode") {
        const double zero[] = {941.0, 1336.0};
        CHECK(detect::decode_dtmf(zero) == '0');
        const double pound[] = {1477.0, 941.0}; // order does not matter
        CHECK(detect::decode_dtmf(pound) == '#');
    }
    SUBCASE("two row tones are not a key") {
        const double rows[] = {697.0, 770.0};
        CHECK_THROWS_AS(detect::decode_dtmf(rows), DtmfDecodeError);
    }
    SUBCASE("unmatched frequency names itself in the error") {
        const double off[] = {500.0, 1209.0};
        CHECK_THROWS_WITH_AS(detect::decode_dtmf(off), doctest::Contains("500"),
                             DtmfDecodeError);
    }
    SUBCASE("one peak is not enough") {
        const double lone[] = {697.0};
        CHECK_THROWS_AS(detect::decode_dtmf(lone), DtmfDecodeError);
    }
}

TEST_CASE("detect_pipeline end to end") {
    SUBCASE("A440 at rate 44100 reports the two frozen bins") {
        const SampledSignal tone = audio::synth_tone({{440.0, 1.0}}, 44100, 1024);
        const detect::DetectionReport report =
            detect::detect_pipeline(tone, options(10, DetectMode::Note));
        REQUIRE(report.peaks.size() == 2);
        CHECK(report.peaks[0].frequency_hz == 430.6640625);
        CHECK(report.peaks[1].frequency_hz == 473.73046875);
        REQUIRE(report.peaks[0].note.has_value());
        CHECK(report.peaks[0].note->label() == "A4");
    }
    SUBCASE("DTMF '1' at rate 8000 decodes") {
        const SampledSignal tone = audio::synth_dtmf('1', 8000, 1024);
        const detect::DetectionReport report =
            detect::detect_pipeline(tone, options(10, DetectMode::Dtmf));
        REQUIRE(report.dtmf_key.has_value());
        CHECK(*report.dtmf_key == '1');
    }
    SUBCASE("three qubits at rate 1764 land on 441 Hz") {
        const SampledSignal tone = audio::synth_tone({{440.0, 1.0}}, 1764, 8);
        detect::PipelineOptions opt = options(3, DetectMode::Raw);
        opt.top_k = 1;
        const detect::DetectionReport report = detect::detect_pipeline(tone, opt);
        REQUIRE(report.peaks.size() == 1);
        CHECK(report.peaks[0].frequency_hz == 441.0);
    }
    SUBCASE("bin-exact tones come back with their exact frequency") {
        const double f = 100.0 * 44100.0 / 1024.0; // 4306.640625 Hz
        const SampledSignal tone = audio::synth_tone({{f, 1.0}}, 44100, 1024);
        detect::PipelineOptions opt = options(10, DetectMode::Raw);
        opt.top_k = 1;
        const detect::DetectionReport report = detect::detect_pipeline(tone, opt);
        CHECK(report.peaks[0].frequency_hz == f);
    }
    SUBCASE("shot measurement finds the same top bin as exact measurement") {
        const SampledSignal tone = audio::synth_tone({{440.0, 1.0}}, 44100, 1024);
        detect::PipelineOptions opt = options(10, DetectMode::Note);
        opt.measurement.use_shots = true;
        opt.measurement.shots = 8192;
        opt.measurement.seed = 11;
        const detect::DetectionReport report = detect::detect_pipeline(tone, opt);
        CHECK(report.peaks[0].bin == 10);
    }
}

TEST_CASE("quantum power spectrum equals the classical oracle") {
    SplitMix64 rng(606);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(6)); // 3..8
        const std::uint64_t dim = std::uint64_t{1} << n;
        const SampledSignal sig = random_signal(rng, 8000, dim);
        const detect::EncodedRegister reg = detect::amplitude_encode(sig, n);
        const StateVector transformed =
            apply_circuit(reg.state, qft::build_qft_circuit({.n_qubits = n}));

        spectral::ComplexSignal x(dim);
        for (std::uint64_t i = 0; i < dim; ++i) x[i] = reg.state[i];
        const spectral::ComplexSignal oracle =
            spectral::fft(x, {-1, qft::Normalization::Unitary});
        for (std::uint64_t k = 0; k < dim; ++k)
            CHECK(std::abs(std::norm(transformed[k]) - std::norm(oracle[k])) < 1e-9);
    }
}

TEST_CASE("real inputs fold symmetrically") {
    SplitMix64 rng(707);
    const int n = 8;
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (int trial = 0; trial < 5; ++trial) {
        const SampledSignal sig = random_signal(rng, 8000, dim);
        const StateVector transformed = apply_circuit(
            detect::amplitude_encode(sig, n).state, qft::build_qft_circuit({.n_qubits = n}));
        const std::vector<double> w = transformed.probabilities();
        for (std::uint64_t k = 1; k < dim / 2; ++k)
            CHECK(std::abs(w[k] - w[dim - k]) < 1e-9);
    }
}

TEST_CASE("serialized reports are byte-stable") {
    const SampledSignal tone = audio::synth_tone({{440.0, 1.0}}, 44100, 1024);
    detect::PipelineOptions opt = options(10, DetectMode::Note);
    opt.measurement.use_shots = true;
    opt.measurement.shots = 2048;
    opt.measurement.seed = 5;
    const detect::DetectionReport a = detect::detect_pipeline(tone, opt);
    const detect::DetectionReport b = detect::detect_pipeline(tone, opt);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_text().find("peak bin=") != std::string::npos);

    SUBCASE("json carries the fixed field names") {
        const std::string j = a.to_json();
        for (const char* field : {"\"bin\"", "\"frequency_hz\"", "\"weight\"", "\"note\"",
                                  "\"cents\"", "\"bin_resolution_hz\""})
            CHECK(j.find(field) != std::string::npos);
    }
}
