#include "phasesteg/wav_io.hpp"

#include "phasesteg/error.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <string>

namespace phasesteg {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kBitsPerSample = 16;
constexpr std::size_t kRiffHeaderSize = 12;
constexpr std::size_t kChunkHeaderSize = 8;
constexpr std::size_t kFmtMinSize = 16;

struct FmtChunk {
    std::uint16_t audio_format = 0;
    std::uint16_t num_channels = 0;
    std::uint32_t sample_rate = 0;
    std::uint32_t byte_rate = 0;
    std::uint16_t block_align = 0;
    std::uint16_t bits_per_sample = 0;
};

std::uint16_t load_u16(std::span<const std::byte> bytes, std::size_t at)
{
    return static_cast<std::uint16_t>(std::to_integer<unsigned>(bytes[at]) |
                                      (std::to_integer<unsigned>(bytes[at + 1]) << 8));
}

std::uint32_t load_u32(std::span<const std::byte> bytes, std::size_t at)
{
    return static_cast<std::uint32_t>(load_u16(bytes, at)) |
           (static_cast<std::uint32_t>(load_u16(bytes, at + 2)) << 16);
}

bool has_tag(std::span<const std::byte> bytes, std::size_t at, const char (&tag)[5])
{
    return std::memcmp(bytes.data() + at, tag, 4) == 0;
}

void store_u16(std::vector<std::byte>& out, std::uint16_t v)
{
    out.push_back(static_cast<std::byte>(v & 0xFF));
    out.push_back(static_cast<std::byte>(v >> 8));
}

void store_u32(std::vector<std::byte>& out, std::uint32_t v)
{
    store_u16(out, static_cast<std::uint16_t>(v & 0xFFFF));
    store_u16(out, static_cast<std::uint16_t>(v >> 16));
}

void store_tag(std::vector<std::byte>& out, const char (&tag)[5])
{
    for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<std::byte>(tag[i]));
    }
}

[[noreturn]] void malformed(const std::string& why)
{
    throw Error(ErrorCode::MalformedContainer, "malformed WAV: " + why);
}

FmtChunk parse_fmt(std::span<const std::byte> body)
{
    if (body.size() < kFmtMinSize) {
        malformed("fmt chunk shorter than 16 bytes");
    }
    FmtChunk fmt;
    fmt.audio_format = load_u16(body, 0);
    fmt.num_channels = load_u16(body, 2);
    fmt.sample_rate = load_u32(body, 4);
    fmt.byte_rate = load_u32(body, 8);
    fmt.block_align = load_u16(body, 12);
    fmt.bits_per_sample = load_u16(body, 14);

    if (fmt.audio_format != kFormatPcm) {
        throw Error(ErrorCode::UnsupportedFormat,
                    "unsupported WAV format code " + std::to_string(fmt.audio_format) +
                        " (only integer PCM is supported)");
    }
    if (fmt.bits_per_sample != kBitsPerSample) {
        throw Error(ErrorCode::UnsupportedFormat,
                    "unsupported bit depth " + std::to_string(fmt.bits_per_sample) +
                        " (only 16-bit PCM is supported)");
    }
    if (fmt.num_channels == 0) {
        malformed("zero channels");
    }
    if (fmt.sample_rate == 0) {
        malformed("zero sample rate");
    }
    if (fmt.block_align != fmt.num_channels * 2u) {
        malformed("block align " + std::to_string(fmt.block_align) +
                  " does not match channel count");
    }
    return fmt;
}

} // namespace

AudioClip parse_wav(std::span<const std::byte> image)
{
    if (image.size() < kRiffHeaderSize || !has_tag(image, 0, "RIFF") ||
        !has_tag(image, 8, "WAVE")) {
        malformed("missing RIFF/WAVE header");
    }
    const std::size_t riff_end = std::size_t{load_u32(image, 4)} + 8;
    if (riff_end > image.size()) {
        malformed("RIFF size exceeds file size");
    }

    std::optional<FmtChunk> fmt;
    std::optional<std::span<const std::byte>> data;

    std::size_t pos = kRiffHeaderSize;
    while (pos + kChunkHeaderSize <= riff_end) {
        const std::size_t body_size = load_u32(image, pos + 4);
        const std::size_t body_at = pos + kChunkHeaderSize;
        if (body_size > riff_end - body_at) {
            malformed("truncated chunk");
        }
        const auto body = image.subspan(body_at, body_size);

        if (has_tag(image, pos, "fmt ")) {
            if (fmt) {
                malformed("duplicate fmt chunk");
            }
            fmt = parse_fmt(body);
        } else if (has_tag(image, pos, "data")) {
            if (!fmt) {
                malformed("data chunk precedes fmt chunk");
            }
            if (data) {
                malformed("duplicate data chunk");
            }
            data = body;
        }
        // Chunks are word aligned; odd bodies carry a pad byte.
        pos = body_at + body_size + (body_size & 1u);
    }

    if (!fmt) {
        malformed("missing fmt chunk");
    }
    if (!data) {
        malformed("missing data chunk");
    }
    if (data->size() % fmt->block_align != 0) {
        malformed("data length " + std::to_string(data->size()) +
                  " is not a whole number of frames");
    }

    const std::size_t frames = data->size() / fmt->block_align;
    AudioClip clip;
    clip.sample_rate = fmt->sample_rate;
    clip.samples.resize(frames);
    for (std::size_t f = 0; f < frames; ++f) {
        clip.samples[f] = static_cast<std::int16_t>(load_u16(*data, f * fmt->block_align));
    }
    return clip;
}

AudioClip read_wav(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
    }
    std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw Error(ErrorCode::IoFailure, "read failed: " + path.string());
    }
    return parse_wav(std::as_bytes(std::span(raw)));
}

std::vector<std::byte> encode_wav(const AudioClip& clip)
{
    if (clip.sample_rate == 0) {
        throw Error(ErrorCode::UnsupportedFormat, "sample rate must be positive");
    }
    const std::size_t data_bytes = clip.samples.size() * 2;
    if (data_bytes > std::numeric_limits<std::uint32_t>::max() - 36) {
        throw Error(ErrorCode::UnsupportedFormat, "clip too long for a RIFF container");
    }

    std::vector<std::byte> out;
    out.reserve(44 + data_bytes);
    store_tag(out, "RIFF");
    store_u32(out, static_cast<std::uint32_t>(36 + data_bytes));
    store_tag(out, "WAVE");

    store_tag(out, "fmt ");
    store_u32(out, 16);
    store_u16(out, kFormatPcm);
    store_u16(out, 1);
    store_u32(out, clip.sample_rate);
    store_u32(out, clip.sample_rate * 2u);
    store_u16(out, 2);
    store_u16(out, kBitsPerSample);

    store_tag(out, "data");
    store_u32(out, static_cast<std::uint32_t>(data_bytes));
    for (const std::int16_t s : clip.samples) {
        store_u16(out, static_cast<std::uint16_t>(s));
    }
    return out;
}

void write_wav(const std::filesystem::path& path, const AudioClip& clip)
{
    const auto image = encode_wav(clip);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(image.data()),
              static_cast<std::streamsize>(image.size()));
    if (!out) {
        throw Error(ErrorCode::IoFailure, "write failed: " + path.string());
    }
}

} // namespace phasesteg
