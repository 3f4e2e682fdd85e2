#include "qtones/audio.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

namespace qtones::audio {

namespace {

std::uint16_t rd_u16(std::span<const std::uint8_t> b, std::size_t off) {
    return static_cast<std::uint16_t>(b[off] | (b[off + 1] << 8));
}

std::uint32_t rd_u32(std::span<const std::uint8_t> b, std::size_t off) {
    return static_cast<std::uint32_t>(b[off]) | (static_cast<std::uint32_t>(b[off + 1]) << 8) |
           (static_cast<std::uint32_t>(b[off + 2]) << 16) |
           (static_cast<std::uint32_t>(b[off + 3]) << 24);
}

bool id_is(std::span<const std::uint8_t> b, std::size_t off, const char* id) {
    return std::memcmp(b.data() + off, id, 4) == 0;
}

void wr_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
}

void wr_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
}

void wr_id(std::vector<std::uint8_t>& out, const char* id) {
    out.insert(out.end(), id, id + 4);
}

} // namespace

WavFile read_wav(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 12) throw WavFormatError("file too short for a RIFF header");
    if (!id_is(bytes, 0, "RIFF") || !id_is(bytes, 8, "WAVE"))
        throw WavFormatError("missing RIFF/WAVE magic");

    WavMeta meta;
    bool have_fmt = false;
    std::size_t off = 12;
    while (true) {
        if (off + 8 > bytes.size())
            throw WavFormatError(have_fmt ? "no data chunk found" : "no fmt chunk found");
        const std::size_t chunk_size = rd_u32(bytes, off + 4);
        const std::size_t body = off + 8;

        if (id_is(bytes, off, "fmt ")) {
            if (chunk_size < 16 || body + 16 > bytes.size())
                throw WavFormatError("fmt chunk too small");
            const std::uint16_t code = rd_u16(bytes, body);
            const std::uint16_t channels = rd_u16(bytes, body + 2);
            const std::uint32_t rate = rd_u32(bytes, body + 4);
            const std::uint16_t bits = rd_u16(bytes, body + 14);
            if (code != 1)
                throw WavUnsupportedError("format code " + std::to_string(code) +
                                          " not supported, only PCM (1)");
            if (bits != 16)
                throw WavUnsupportedError(std::to_string(bits) +
                                          "-bit samples not supported, only 16-bit");
            if (channels != 1 && channels != 2)
                throw WavUnsupportedError(std::to_string(channels) +
                                          " channels not supported, only mono or stereo");
            if (rate == 0) throw WavFormatError("zero sample rate");
            meta.channels = channels;
            meta.bits_per_sample = bits;
            meta.sample_rate = rate;
            have_fmt = true;
        } else if (id_is(bytes, off, "data")) {
            if (!have_fmt) throw WavFormatError("data chunk appears before fmt chunk");
            if (body + chunk_size > bytes.size())
                throw WavTruncatedError("data chunk declares " + std::to_string(chunk_size) +
                                        " bytes but only " + std::to_string(bytes.size() - body) +
                                        " remain");
            const std::size_t frame = std::size_t{2} * meta.channels;
            if (chunk_size % frame != 0)
                throw WavFormatError("data length " + std::to_string(chunk_size) +
                                     " is not a multiple of the frame size " +
                                     std::to_string(frame));
            meta.data_length = static_cast<std::uint32_t>(chunk_size);

            const std::size_t n_frames = chunk_size / frame;
            SampledSignal signal{meta.sample_rate, {}};
            signal.samples.resize(n_frames);
            for (std::size_t f = 0; f < n_frames; ++f) {
                const std::size_t at = body + f * frame;
                const auto s0 = static_cast<std::int16_t>(rd_u16(bytes, at));
                if (meta.channels == 1) {
                    signal.samples[f] = static_cast<double>(s0) / 32768.0;
                } else {
                    const auto s1 = static_cast<std::int16_t>(rd_u16(bytes, at + 2));
                    signal.samples[f] =
                        (static_cast<double>(s0) + static_cast<double>(s1)) * 0.5 / 32768.0;
                }
            }
            return {std::move(signal), meta};
        }
        // Unknown chunks (LIST, fact, ...) are skipped; RIFF pads to even.
        off = body + chunk_size + (chunk_size & 1);
        if (off > bytes.size()) throw WavFormatError("chunk overruns end of file");
    }
}

std::vector<std::uint8_t> write_wav(const SampledSignal& s) {
    if (s.sample_rate == 0) throw ContractError("sample rate must be positive");
    const std::uint64_t data_len = static_cast<std::uint64_t>(s.samples.size()) * 2;
    if (data_len > 0xFFFFFFFFull - 36)
        throw ContractError("signal too long for a WAV container");

    std::vector<std::uint8_t> out;
    out.reserve(44 + data_len);
    wr_id(out, "RIFF");
    wr_u32(out, static_cast<std::uint32_t>(36 + data_len));
    wr_id(out, "WAVE");
    wr_id(out, "fmt ");
    wr_u32(out, 16);
    wr_u16(out, 1); // PCM
    wr_u16(out, 1); // mono
    wr_u32(out, s.sample_rate);
    wr_u32(out, s.sample_rate * 2u); // byte rate
    wr_u16(out, 2);                  // block align
    wr_u16(out, 16);
    wr_id(out, "data");
    wr_u32(out, static_cast<std::uint32_t>(data_len));

    for (double x : s.samples) {
        if (!(std::abs(x) <= 1.0 + 1e-9))
            throw ClippingError("sample value " + std::to_string(x) +
                                " outside [-1, 1]; refusing to clip");
        long q = std::lround(x * 32768.0); // ties away from zero
        if (q > 32767) q = 32767;          // +1.0 saturates to the top code
        if (q < -32768) q = -32768;
        wr_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    }
    return out;
}

WavFile read_wav_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return read_wav(bytes);
}

void write_wav_file(const SampledSignal& s, const std::string& path) {
    const std::vector<std::uint8_t> bytes = write_wav(s);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("short write to '" + path + "'");
}

} // namespace qtones::audio
