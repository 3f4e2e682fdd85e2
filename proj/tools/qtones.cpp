#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtones/audio.hpp"
#include "qtones/circuit.hpp"
#include "qtones/detect.hpp"
#include "qtones/qft.hpp"
#include "qtones/verify.hpp"

namespace {

using namespace qtones;

const char* stage_name(const Error& e) {
    if (dynamic_cast<const WavFormatError*>(&e) != nullptr ||
        dynamic_cast<const WavUnsupportedError*>(&e) != nullptr ||
        dynamic_cast<const WavTruncatedError*>(&e) != nullptr)
        return "read-wav";
    if (dynamic_cast<const ClippingError*>(&e) != nullptr) return "write-wav";
    if (dynamic_cast<const AliasingError*>(&e) != nullptr) return "synth";
    if (dynamic_cast<const EncodeError*>(&e) != nullptr) return "amplitude-encode";
    if (dynamic_cast<const DtmfDecodeError*>(&e) != nullptr) return "dtmf-decode";
    return "run";
}

void print_matrix(const ComplexMatrix& m) {
    std::string line;
    char cell[48];
    for (std::size_t r = 0; r < m.dim(); ++r) {
        line.clear();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            const Complex v = m.at(r, c);
            // Snap residue far below the printed precision, -0.000000 included.
            const double re = std::abs(v.real()) < 1e-9 ? 0.0 : v.real();
            const double im = std::abs(v.imag()) < 1e-9 ? 0.0 : v.imag();
            std::snprintf(cell, sizeof(cell), "% .6f%+.6fi", re, im);
            if (c != 0) line += "  ";
            line += cell;
        }
        std::printf("%s\n", line.c_str());
    }
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << body;
    if (!out) throw Error("short write to '" + path + "'");
}

std::uint64_t parse_seed_env() {
    const char* env = std::getenv("QFT_TONES_SEED");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0')
        throw ContractError(std::string("QFT_TONES_SEED is not an integer: '") + env + "'");
    return v;
}

struct SynthCommon {
    std::uint32_t rate = 44100;
    std::size_t samples = 1024;
    double amplitude = 1.0;
    std::string out;
};

int run_synth(const audio::SampledSignal& signal, const std::string& out_path) {
    const std::vector<std::uint8_t> bytes = audio::write_wav(signal);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + out_path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("short write to '" + out_path + "'");
    std::printf("wrote %s (%zu bytes)\n", out_path.c_str(), bytes.size());
    return 0;
}

struct DetectArgs {
    std::vector<std::string> inputs;
    int n_qubits = 10;
    std::string mode = "note";
    std::uint64_t shots = 0; // 0 = exact measurement
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::optional<std::size_t> top_k;
    std::string format = "text";
    bool exclude_dc = false;
    bool zero_pad = false;
    std::string dump_histogram;
};

int run_detect(const DetectArgs& args) {
    detect::PipelineOptions opt;
    opt.n_qubits = args.n_qubits;
    if (args.mode == "note") {
        opt.mode = detect::DetectMode::Note;
    } else if (args.mode == "chord") {
        opt.mode = detect::DetectMode::Chord;
    } else if (args.mode == "dtmf") {
        opt.mode = detect::DetectMode::Dtmf;
    } else {
        opt.mode = detect::DetectMode::Raw;
    }
    if (args.shots > 0) {
        opt.measurement.use_shots = true;
        opt.measurement.shots = args.shots;
        opt.measurement.seed = args.seed_given ? args.seed : parse_seed_env();
    }
    opt.top_k = args.top_k;
    opt.exclude_dc = args.exclude_dc;
    opt.zero_pad = args.zero_pad;

    nlohmann::json json_reports = nlohmann::json::array();
    for (const std::string& path : args.inputs) {
        const audio::WavFile wav = audio::read_wav_file(path);
        detect::MeasurementHistogram hist;
        const detect::DetectionReport report = detect::detect_pipeline(wav.signal, opt, &hist);

        if (!args.dump_histogram.empty())
            write_text_file(args.dump_histogram, detect::histogram_to_json(hist, 2) + "\n");

        if (args.format == "json") {
            json_reports.push_back(nlohmann::json::parse(report.to_json()));
        } else {
            if (args.inputs.size() > 1) std::printf("file %s\n", path.c_str());
            std::fputs(report.to_text().c_str(), stdout);
        }
    }
    if (args.format == "json") {
        const std::string doc =
            args.inputs.size() == 1 ? json_reports[0].dump(2) : json_reports.dump(2);
        std::printf("%s\n", doc.c_str());
    }
    return 0;
}

int run_qft_cmd(int n, bool inverse, bool no_swaps, bool decompose, bool unitary) {
    qft::QftCircuitSpec spec;
    spec.n_qubits = n;
    spec.inverse = inverse;
    spec.include_final_swaps = !no_swaps;
    const Circuit c = qft::build_qft_circuit(spec);
    if (unitary) {
        print_matrix(circuit_to_unitary(c));
    } else if (decompose) {
        std::printf("%s\n", qft::render_decomposition(c).c_str());
    } else {
        std::printf("qubits %d\n", n);
        for (const Gate& g : c.gates()) {
            const Circuit single(n, {g});
            std::printf("%s\n", qft::render_decomposition(single).c_str());
        }
    }
    return 0;
}

int run_verify() {
    const std::vector<verify::CheckResult> results = verify::run_all_checks();
    std::size_t passed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        std::printf("%s\n", verify::format_check_line(results[i], i + 1, results.size()).c_str());
        if (results[i].passed) ++passed;
    }
    std::printf("%zu/%zu checks passed\n", passed, results.size());
    return passed == results.size() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral analysis of audio through a simulated quantum register: synthesize "
                 "test tones, detect notes, chords and DTMF keys, inspect the transform "
                 "circuits, and run the verification suite."};
    app.require_subcommand(1);

    // synth
    CLI::App* synth = app.add_subcommand("synth", "Write a synthesized WAV file");
    synth->require_subcommand(1);

    SynthCommon tone_args, chord_args, dtmf_args;
    double tone_freq = 440.0;
    std::vector<double> chord_freqs;
    std::vector<double> chord_weights;
    std::string dtmf_key;

    CLI::App* tone = synth->add_subcommand("tone", "Single sine tone");
    tone->add_option("--freq", tone_freq, "Frequency in Hz")->required();
    tone->add_option("--rate", tone_args.rate, "Sample rate in Hz")->capture_default_str();
    tone->add_option("--samples", tone_args.samples, "Sample count")->capture_default_str();
    tone->add_option("--amplitude", tone_args.amplitude, "Peak amplitude in [0, 1]")
        ->capture_default_str();
    tone->add_option("--out", tone_args.out, "Output WAV path")->required();

    CLI::App* chord = synth->add_subcommand("chord", "Sum of several tones");
    chord->add_option("--freq", chord_freqs, "Component frequency in Hz (repeatable)")
        ->required();
    chord->add_option("--weight", chord_weights,
                      "Component weight (repeatable; defaults to equal weights)");
    chord->add_option("--rate", chord_args.rate, "Sample rate in Hz")->capture_default_str();
    chord->add_option("--samples", chord_args.samples, "Sample count")->capture_default_str();
    chord->add_option("--amplitude", chord_args.amplitude, "Peak amplitude in [0, 1]")
        ->capture_default_str();
    chord->add_option("--out", chord_args.out, "Output WAV path")->required();

    CLI::App* dtmf = synth->add_subcommand("dtmf", "Dual-tone keypad signal");
    dtmf->add_option("--key", dtmf_key, "Keypad symbol (0-9, *, #)")
        ->required()
        ->check(CLI::IsMember({"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "*", "#"}));
    dtmf_args.rate = 8000;
    dtmf->add_option("--rate", dtmf_args.rate, "Sample rate in Hz")->capture_default_str();
    dtmf->add_option("--samples", dtmf_args.samples, "Sample count")->capture_default_str();
    dtmf->add_option("--out", dtmf_args.out, "Output WAV path")->required();

    // detect
    DetectArgs detect_args;
    CLI::App* detect_cmd = app.add_subcommand("detect", "Detect frequencies in WAV files");
    detect_cmd->add_option("inputs", detect_args.inputs, "Input WAV files")
        ->required()
        ->expected(-1);
    detect_cmd->add_option("--n-qubits", detect_args.n_qubits, "Register size (2^n samples)")
        ->capture_default_str()
        ->check(CLI::Range(1, 20));
    detect_cmd->add_option("--mode", detect_args.mode, "Interpretation mode")
        ->capture_default_str()
        ->check(CLI::IsMember({"note", "chord", "dtmf", "raw"}));
    detect_cmd->add_option("--shots", detect_args.shots,
                           "Sample this many measurement shots instead of exact probabilities");
    CLI::Option* seed_opt = detect_cmd->add_option(
        "--seed", detect_args.seed,
        "Shot-sampling seed (default 0; QFT_TONES_SEED overrides the default, --seed wins)");
    detect_cmd->add_option("--top-k", detect_args.top_k,
                           "Number of peaks to report (default per mode: note 2, chord 3, "
                           "dtmf 2, raw 5)");
    detect_cmd->add_option("--format", detect_args.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    detect_cmd->add_flag("--exclude-dc", detect_args.exclude_dc, "Drop bin 0 before ranking");
    detect_cmd->add_flag("--zero-pad", detect_args.zero_pad,
                         "Zero-pad signals shorter than 2^n samples");
    detect_cmd->add_option("--dump-histogram", detect_args.dump_histogram,
                           "Write the raw measurement histogram as JSON to this path "
                           "(single input only)");

    // qft
    int qft_n = 0;
    bool qft_inverse = false, qft_no_swaps = false, qft_decompose = false, qft_unitary = false;
    CLI::App* qft_cmd = app.add_subcommand("qft", "Inspect the transform circuit");
    qft_cmd->add_option("--n", qft_n, "Number of qubits")->required()->check(CLI::Range(1, 24));
    qft_cmd->add_flag("--inverse", qft_inverse, "Inverse transform");
    qft_cmd->add_flag("--no-swaps", qft_no_swaps, "Omit the final swap layer");
    qft_cmd->add_flag("--decompose", qft_decompose, "Print the operator string");
    qft_cmd->add_flag("--unitary", qft_unitary, "Print the dense unitary (n <= 10)");
    qft_cmd->get_option("--decompose")->excludes(qft_cmd->get_option("--unitary"));

    // verify
    app.add_subcommand("verify", "Run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors exit with 2
    }

    try {
        if (synth->parsed()) {
            if (tone->parsed())
                return run_synth(audio::synth_tone({{tone_freq, 1.0}}, tone_args.rate,
                                                   tone_args.samples, tone_args.amplitude),
                                 tone_args.out);
            if (chord->parsed()) {
                if (!chord_weights.empty() && chord_weights.size() != chord_freqs.size()) {
                    std::fprintf(stderr, "qtones: --weight count must match --freq count\n");
                    return 2;
                }
                std::vector<audio::Tone> tones;
                for (std::size_t i = 0; i < chord_freqs.size(); ++i)
                    tones.push_back(
                        {chord_freqs[i], chord_weights.empty() ? 1.0 : chord_weights[i]});
                return run_synth(audio::synth_tone(tones, chord_args.rate, chord_args.samples,
                                                   chord_args.amplitude),
                                 chord_args.out);
            }
            return run_synth(audio::synth_dtmf(dtmf_key[0], dtmf_args.rate, dtmf_args.samples),
                             dtmf_args.out);
        }
        if (detect_cmd->parsed()) {
            if (!detect_args.dump_histogram.empty() && detect_args.inputs.size() != 1) {
                std::fprintf(stderr, "qtones: --dump-histogram needs exactly one input file\n");
                return 2;
            }
            detect_args.seed_given = seed_opt->count() > 0;
            return run_detect(detect_args);
        }
        if (qft_cmd->parsed()) {
            if (qft_unitary && qft_n > 10) {
                std::fprintf(stderr, "qtones: --unitary supports up to 10 qubits, got %d\n",
                             qft_n);
                return 2;
            }
            return run_qft_cmd(qft_n, qft_inverse, qft_no_swaps, qft_decompose, qft_unitary);
        }
        return run_verify();
    } catch (const Error& e) {
        std::fprintf(stderr, "qtones: %s: %s\n", stage_name(e), e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "qtones: %s\n", e.what());
        return 1;
    }
}
