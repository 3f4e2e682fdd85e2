#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtones/audio.hpp"
#include "qtones/state.hpp"

namespace qtones::detect {

/// A signal loaded into register amplitudes: amps_i = sample_i / ||samples||.
struct EncodedRegister {
    StateVector state;
    std::uint32_t sample_rate = 0;
    std::uint64_t n_samples = 0; // == state.dim()
};

enum class MeasureMode {
    ExactProbabilities,
    ShotCounts,
};

/// Measurement outcomes per basis index. Exact mode stores Born-rule
/// probabilities summing to 1; shot mode stores integer counts summing to
/// `shots`, drawn from SplitMix64(seed) with one draw per shot.
struct MeasurementHistogram {
    MeasureMode mode = MeasureMode::ExactProbabilities;
    std::vector<double> entries;
    std::uint64_t shots = 0; // 0 in exact mode
    std::uint64_t seed = 0;  // meaningful in shot mode only
};

/// Nearest 12-TET note: name, octave and the signed cents offset (at most
/// +-50) from its exact pitch. A4 = 440 Hz reference.
struct NotePeak {
    std::string name;
    int octave = 0;
    double cents = 0.0;

    std::string label() const; // "A4", "C#2", ...
};

struct Peak {
    std::uint64_t bin = 0;
    double frequency_hz = 0.0;
    double weight = 0.0;
    std::optional<NotePeak> note;
};

/// Ranked spectral peaks plus their musical interpretation. Serializes to a
/// line-oriented text form and to JSON with fields: bin, frequency_hz,
/// weight, note, cents, dtmf_key. Both forms are byte-stable for identical
/// inputs and seed.
struct DetectionReport {
    double bin_resolution_hz = 0.0; // sample_rate / 2^n
    std::vector<Peak> peaks;        // sorted by weight descending
    std::optional<char> dtmf_key;

    std::string to_text() const;
    std::string to_json(int indent = -1) const;
};

/// Loads the first 2^n samples into a normalized register. Fewer samples
/// than 2^n is an error unless zero_pad is set; an identically zero window
/// cannot be normalized and throws EncodeError.
EncodedRegister amplitude_encode(const audio::SampledSignal& s, int n_qubits,
                                 bool zero_pad = false);

/// Born rule: entry_i = |amp_i|^2.
MeasurementHistogram measure_exact(const StateVector& state);

/// `shots` i.i.d. draws from the exact distribution. One draw: u =
/// SplitMix64::next_double() * total_weight, outcome = first index whose
/// inclusive cumulative probability exceeds u. Same seed, same counts, on
/// every platform.
MeasurementHistogram sample_shots(const StateVector& state, std::uint64_t shots,
                                  std::uint64_t seed);

/// Keeps the unfolded half spectrum (bins 0 .. 2^(n-1)-1), ranks by weight
/// (ties to the lower bin), converts bin -> bin * sample_rate / 2^n. Set
/// exclude_dc to drop bin 0 for offset-contaminated inputs.
DetectionReport decode_frequencies(const MeasurementHistogram& hist, std::uint32_t sample_rate,
                                   int n_qubits, std::size_t top_k, bool exclude_dc = false);

/// Nearest note n = round(12 log2(f/440)) semitones from A4.
NotePeak map_note(double freq_hz);

/// Matches one row tone and one column tone, each within +-2% relative
/// (absorbs one-bin quantization at rate 8000 / n=10). Anything else --
/// no row, no column, or two tones from the same group -- throws
/// DtmfDecodeError naming the offending frequencies.
char decode_dtmf(std::span<const double> peak_freqs_hz);

enum class DetectMode {
    Note,
    Chord,
    Dtmf,
    Raw,
};

struct MeasurementSpec {
    bool use_shots = false;
    std::uint64_t shots = 8192;
    std::uint64_t seed = 0;
};

struct PipelineOptions {
    int n_qubits = 10;
    DetectMode mode = DetectMode::Note;
    MeasurementSpec measurement{};
    std::optional<std::size_t> top_k; // default per mode: note 2, chord 3, dtmf 2, raw 5
    bool exclude_dc = false;
    bool zero_pad = false;
};

std::size_t default_top_k(DetectMode mode);

/// encode -> forward QFT circuit -> measure -> decode -> interpret. Note and
/// chord modes annotate each nonzero peak with its nearest note; dtmf mode
/// decodes the top two peaks into a keypad symbol. Stage errors propagate.
/// Pass histogram_out to also receive the raw measurement histogram.
DetectionReport detect_pipeline(const audio::SampledSignal& s, const PipelineOptions& options,
                                MeasurementHistogram* histogram_out = nullptr);

/// {"mode", "shots", "seed", "entries"} as a JSON document.
std::string histogram_to_json(const MeasurementHistogram& hist, int indent = -1);

} // namespace qtones::detect
