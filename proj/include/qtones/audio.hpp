#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qtones/types.hpp"

namespace qtones::audio {

/// Mono samples in [-1, 1] at an integer sample rate.
struct SampledSignal {
    std::uint32_t sample_rate = 0;
    std::vector<double> samples;
};

struct WavMeta {
    std::uint16_t channels = 1;
    std::uint16_t bits_per_sample = 16;
    std::uint32_t sample_rate = 0;
    std::uint32_t data_length = 0; // bytes in the data chunk
};

struct WavFile {
    SampledSignal signal;
    WavMeta meta;
};

/// Parses a RIFF/WAVE container holding 16-bit PCM, 1 or 2 channels. Stereo
/// is downmixed by channel average; sample values are scaled by 1/32768.
/// Unknown chunks between "fmt " and "data" are skipped. Errors are distinct:
/// WavFormatError (broken structure), WavUnsupportedError (codec, bit depth
/// or channel count), WavTruncatedError (data chunk shorter than declared).
WavFile read_wav(std::span<const std::uint8_t> bytes);

/// Canonical 44-byte-header mono 16-bit PCM file. Quantization is
/// round-half-away-from-zero of sample * 32768, with +32768 saturated to
/// +32767 so that amplitude 1.0 is representable; round trip error is at
/// most 1/32768 per sample. Samples outside [-1, 1] throw ClippingError.
std::vector<std::uint8_t> write_wav(const SampledSignal& s);

WavFile read_wav_file(const std::string& path);
void write_wav_file(const SampledSignal& s, const std::string& path);

struct Tone {
    double freq_hz = 0.0;
    double weight = 1.0;
};

/// sample[t] = amplitude * sum_i w_i sin(2 pi f_i t / rate) / sum_i w_i.
/// Every frequency must sit strictly below rate/2 (AliasingError otherwise).
SampledSignal synth_tone(const std::vector<Tone>& tones, std::uint32_t sample_rate,
                         std::size_t n_samples, double amplitude = 1.0);

inline constexpr std::array<double, 4> kDtmfRowsHz{697.0, 770.0, 852.0, 941.0};
inline constexpr std::array<double, 3> kDtmfColsHz{1209.0, 1336.0, 1477.0};
inline constexpr std::array<std::array<char, 3>, 4> kDtmfKeys{{
    {'1', '2', '3'},
    {'4', '5', '6'},
    {'7', '8', '9'},
    {'*', '0', '#'},
}};

/// Equal-weight two-tone signal for one keypad symbol (0-9, '*', '#').
SampledSignal synth_dtmf(char key, std::uint32_t sample_rate, std::size_t n_samples);

/// Linear interpolation onto the new sample grid; output length is
/// floor(len * target / source). No anti-alias filter: when downsampling,
/// content above the new Nyquist limit will alias, so band-limit first.
SampledSignal resample(const SampledSignal& s, std::uint32_t target_rate);

} // namespace qtones::audio
