#include "qtones/audio.hpp"

#include <cmath>
#include <numbers>

namespace qtones::audio {

SampledSignal synth_tone(const std::vector<Tone>& tones, std::uint32_t sample_rate,
                         std::size_t n_samples, double amplitude) {
    if (sample_rate == 0) throw ContractError("sample rate must be positive");
    if (tones.empty()) throw ContractError("need at least one tone");
    if (!(amplitude >= 0.0 && amplitude <= 1.0))
        throw ContractError("amplitude must be in [0, 1]");

    const double nyquist = static_cast<double>(sample_rate) / 2.0;
    double weight_sum = 0.0;
    for (const Tone& t : tones) {
        if (!std::isfinite(t.freq_hz) || t.freq_hz < 0.0)
            throw ContractError("tone frequency must be finite and non-negative");
        if (t.freq_hz >= nyquist)
            throw AliasingError("frequency " + std::to_string(t.freq_hz) +
                                " Hz is at or above the Nyquist limit " + std::to_string(nyquist) +
                                " Hz for sample rate " + std::to_string(sample_rate));
        if (!std::isfinite(t.weight) || t.weight <= 0.0)
            throw ContractError("tone weight must be positive");
        weight_sum += t.weight;
    }

    SampledSignal out{sample_rate, {}};
    out.samples.resize(n_samples);
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < n_samples; ++i) {
        double acc = 0.0;
        for (const Tone& t : tones)
            acc += t.weight * std::sin(two_pi * t.freq_hz * static_cast<double>(i) /
                                       static_cast<double>(sample_rate));
        out.samples[i] = amplitude * acc / weight_sum;
    }
    return out;
}

SampledSignal synth_dtmf(char key, std::uint32_t sample_rate, std::size_t n_samples) {
    for (std::size_t r = 0; r < kDtmfKeys.size(); ++r) {
        for (std::size_t c = 0; c < kDtmfKeys[r].size(); ++c) {
            if (kDtmfKeys[r][c] == key)
                return synth_tone({{kDtmfRowsHz[r], 1.0}, {kDtmfColsHz[c], 1.0}}, sample_rate,
                                  n_samples, 1.0);
        }
    }
    throw ContractError(std::string("unknown DTMF key '") + key + "', expected 0-9, * or #");
}

SampledSignal resample(const SampledSignal& s, std::uint32_t target_rate) {
    if (s.sample_rate == 0) throw ContractError("source sample rate must be positive");
    if (target_rate == 0) throw ContractError("target sample rate must be positive");
    if (target_rate == s.sample_rate) return s;

    const std::uint64_t out_len = static_cast<std::uint64_t>(s.samples.size()) * target_rate /
                                  s.sample_rate;
    SampledSignal out{target_rate, {}};
    out.samples.resize(out_len);
    if (out_len == 0) return out;

    const double step = static_cast<double>(s.sample_rate) / static_cast<double>(target_rate);
    const std::size_t last = s.samples.size() - 1;
    for (std::uint64_t i = 0; i < out_len; ++i) {
        const double pos = static_cast<double>(i) * step;
        std::size_t i0 = static_cast<std::size_t>(pos);
        if (i0 > last) i0 = last;
        const std::size_t i1 = i0 < last ? i0 + 1 : last;
        const double frac = pos - static_cast<double>(i0);
        out.samples[i] = s.samples[i0] + frac * (s.samples[i1] - s.samples[i0]);
    }
    return out;
}

} // namespace qtones::audio
