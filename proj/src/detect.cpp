#include "qtones/detect.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qtones/qft.hpp"
#include "qtones/rng.hpp"

namespace qtones::detect {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace

std::string NotePeak::label() const { return name + std::to_string(octave); }

EncodedRegister amplitude_encode(const audio::SampledSignal& s, int n_qubits, bool zero_pad) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw ContractError("amplitude_encode: bad qubit count");
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (s.samples.size() < dim && !zero_pad)
        throw EncodeError("signal has " + std::to_string(s.samples.size()) +
                          " samples but the register holds 2^" + std::to_string(n_qubits) + " = " +
                          std::to_string(dim) + " (enable zero padding to extend)");

    const std::uint64_t used = std::min<std::uint64_t>(dim, s.samples.size());
    double norm2 = 0.0;
    for (std::uint64_t i = 0; i < used; ++i) norm2 += s.samples[i] * s.samples[i];
    if (norm2 == 0.0)
        throw EncodeError("encoded window is identically zero and cannot be normalized");

    const double inv_norm = 1.0 / std::sqrt(norm2);
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    for (std::uint64_t i = 0; i < used; ++i) amps[i] = Complex{s.samples[i] * inv_norm, 0.0};
    return {StateVector(n_qubits, std::move(amps)), s.sample_rate, dim};
}

MeasurementHistogram measure_exact(const StateVector& state) {
    return {MeasureMode::ExactProbabilities, state.probabilities(), 0, 0};
}

MeasurementHistogram sample_shots(const StateVector& state, std::uint64_t shots,
                                  std::uint64_t seed) {
    if (shots < 1) throw ContractError("sample_shots: shots must be >= 1");
    const std::vector<double> p = state.probabilities();
    std::vector<double> cumulative(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cumulative[i] = acc;
    }
    const double total = acc; // 1 within 1e-9; scaling keeps draws in range

    SplitMix64 rng(seed);
    std::vector<double> counts(p.size(), 0.0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double() * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
        if (idx >= counts.size()) idx = counts.size() - 1;
        counts[idx] += 1.0;
    }
    return {MeasureMode::ShotCounts, std::move(counts), shots, seed};
}

DetectionReport decode_frequencies(const MeasurementHistogram& hist, std::uint32_t sample_rate,
                                   int n_qubits, std::size_t top_k, bool exclude_dc) {
    if (top_k < 1) throw ContractError("decode_frequencies: top_k must be >= 1");
    if (hist.entries.empty()) throw ContractError("decode_frequencies: empty histogram");
    if (sample_rate == 0) throw ContractError("decode_frequencies: zero sample rate");
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw ContractError("decode_frequencies: bad qubit count");
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (hist.entries.size() != dim)
        throw ContractError("decode_frequencies: histogram has " +
                            std::to_string(hist.entries.size()) + " entries, expected 2^" +
                            std::to_string(n_qubits));

    // Real inputs mirror energy into bins >= 2^(n-1); keep the first half.
    const std::uint64_t half = dim / 2;
    std::vector<std::uint64_t> bins;
    bins.reserve(half);
    for (std::uint64_t b = exclude_dc ? 1 : 0; b < half; ++b) bins.push_back(b);
    // Stable sort keeps ascending bin order among equal weights.
    std::stable_sort(bins.begin(), bins.end(), [&](std::uint64_t a, std::uint64_t b) {
        return hist.entries[a] > hist.entries[b];
    });
    if (bins.size() > top_k) bins.resize(top_k);

    DetectionReport report;
    report.bin_resolution_hz = static_cast<double>(sample_rate) / static_cast<double>(dim);
    report.peaks.reserve(bins.size());
    for (std::uint64_t b : bins) {
        Peak peak;
        peak.bin = b;
        // Exact: integer product below 2^53, then division by a power of two.
        peak.frequency_hz =
            static_cast<double>(b * static_cast<std::uint64_t>(sample_rate)) /
            static_cast<double>(dim);
        peak.weight = hist.entries[b];
        report.peaks.push_back(std::move(peak));
    }
    return report;
}

NotePeak map_note(double freq_hz) {
    if (!(freq_hz > 0.0) || !std::isfinite(freq_hz))
        throw ContractError("map_note: frequency must be positive and finite");
    static const char* kNames[12] = {"C", "C#", "D",  "D#", "E",  "F",
                                     "F#", "G",  "G#", "A",  "A#", "B"};
    const double semitones = 12.0 * std::log2(freq_hz / 440.0);
    const long n = std::lround(semitones);
    const long midi = 69 + n;
    const long idx = ((midi % 12) + 12) % 12;
    const long octave = (midi - idx) / 12 - 1;
    const double exact = 440.0 * std::exp2(static_cast<double>(n) / 12.0);
    const double cents = 1200.0 * std::log2(freq_hz / exact);
    return {kNames[idx], static_cast<int>(octave), cents};
}

char decode_dtmf(std::span<const double> peak_freqs_hz) {
    if (peak_freqs_hz.size() < 2)
        throw DtmfDecodeError("need at least two peak frequencies, got " +
                              std::to_string(peak_freqs_hz.size()));
    constexpr double kRelTol = 0.02;

    struct Match {
        int group = -1; // 0 = row, 1 = column
        int index = -1;
    };
    auto classify = [&](double f) -> Match {
        for (std::size_t i = 0; i < audio::kDtmfRowsHz.size(); ++i)
            if (std::abs(f - audio::kDtmfRowsHz[i]) <= kRelTol * audio::kDtmfRowsHz[i])
                return {0, static_cast<int>(i)};
        for (std::size_t i = 0; i < audio::kDtmfColsHz.size(); ++i)
            if (std::abs(f - audio::kDtmfColsHz[i]) <= kRelTol * audio::kDtmfColsHz[i])
                return {1, static_cast<int>(i)};
        return {};
    };

    const double f0 = peak_freqs_hz[0];
    const double f1 = peak_freqs_hz[1];
    const Match m0 = classify(f0);
    const Match m1 = classify(f1);
    if (m0.group < 0 || m1.group < 0) {
        const double bad = m0.group < 0 ? f0 : f1;
        throw DtmfDecodeError("peak " + fmt_double(bad) +
                              " Hz matches no DTMF row or column tone within 2%");
    }
    if (m0.group == m1.group) {
        throw DtmfDecodeError("peaks " + fmt_double(f0) + " Hz and " + fmt_double(f1) +
                              " Hz are both " + (m0.group == 0 ? "row" : "column") +
                              " tones; a key needs one of each");
    }
    const int row = m0.group == 0 ? m0.index : m1.index;
    const int col = m0.group == 1 ? m0.index : m1.index;
    return audio::kDtmfKeys[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

std::size_t default_top_k(DetectMode mode) {
    switch (mode) {
        case DetectMode::Note:
            return 2;
        case DetectMode::Chord:
            return 3;
        case DetectMode::Dtmf:
            return 2;
        case DetectMode::Raw:
            return 5;
    }
    throw ContractError("unknown detection mode");
}

DetectionReport detect_pipeline(const audio::SampledSignal& s, const PipelineOptions& options,
                                MeasurementHistogram* histogram_out) {
    const EncodedRegister reg = amplitude_encode(s, options.n_qubits, options.zero_pad);
    const Circuit transform = qft::build_qft_circuit({.n_qubits = options.n_qubits});
    const StateVector transformed = apply_circuit(reg.state, transform);
    const MeasurementHistogram hist =
        options.measurement.use_shots
            ? sample_shots(transformed, options.measurement.shots, options.measurement.seed)
            : measure_exact(transformed);
    if (histogram_out) *histogram_out = hist;

    const std::size_t top_k = options.top_k.value_or(default_top_k(options.mode));
    DetectionReport report =
        decode_frequencies(hist, reg.sample_rate, options.n_qubits, top_k, options.exclude_dc);

    if (options.mode == DetectMode::Note || options.mode == DetectMode::Chord) {
        for (Peak& p : report.peaks)
            if (p.frequency_hz > 0.0) p.note = map_note(p.frequency_hz);
    } else if (options.mode == DetectMode::Dtmf) {
        std::vector<double> freqs;
        freqs.reserve(report.peaks.size());
        for (const Peak& p : report.peaks) freqs.push_back(p.frequency_hz);
        report.dtmf_key = decode_dtmf(freqs);
    }
    return report;
}

std::string DetectionReport::to_text() const {
    std::ostringstream out;
    out << "bin_resolution_hz " << fmt_double(bin_resolution_hz) << '\n';
    for (const Peak& p : peaks) {
        out << "peak bin=" << p.bin << " frequency_hz=" << fmt_double(p.frequency_hz)
            << " weight=" << fmt_double(p.weight);
        if (p.note) out << " note=" << p.note->label() << " cents=" << fmt_double(p.note->cents);
        out << '\n';
    }
    if (dtmf_key) out << "dtmf_key " << *dtmf_key << '\n';
    return out.str();
}

std::string DetectionReport::to_json(int indent) const {
    nlohmann::json j;
    j["bin_resolution_hz"] = bin_resolution_hz;
    j["peaks"] = nlohmann::json::array();
    for (const Peak& p : peaks) {
        nlohmann::json jp;
        jp["bin"] = p.bin;
        jp["frequency_hz"] = p.frequency_hz;
        jp["weight"] = p.weight;
        if (p.note) {
            jp["note"] = p.note->label();
            jp["cents"] = p.note->cents;
        }
        j["peaks"].push_back(std::move(jp));
    }
    if (dtmf_key) j["dtmf_key"] = std::string(1, *dtmf_key);
    return j.dump(indent);
}

std::string histogram_to_json(const MeasurementHistogram& hist, int indent) {
    nlohmann::json j;
    j["mode"] = hist.mode == MeasureMode::ExactProbabilities ? "exact-probabilities"
                                                             : "shot-counts";
    j["shots"] = hist.shots;
    j["seed"] = hist.seed;
    if (hist.mode == MeasureMode::ShotCounts) {
        std::vector<std::uint64_t> counts(hist.entries.size());
        for (std::size_t i = 0; i < hist.entries.size(); ++i)
            counts[i] = static_cast<std::uint64_t>(hist.entries[i]);
        j["entries"] = counts;
    } else {
        j["entries"] = hist.entries;
    }
    return j.dump(indent);
}

} // namespace qtones::detect
