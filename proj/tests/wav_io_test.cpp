#include "phasesteg/error.hpp"
#include "phasesteg/wav_io.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>

namespace phasesteg {
namespace {

// Hand-assembled RIFF images, independent of encode_wav.
struct RawWav {
    std::vector<std::byte> bytes;

    void tag(const char* t)
    {
        for (int i = 0; i < 4; ++i) {
            bytes.push_back(static_cast<std::byte>(t[i]));
        }
    }
    void u16(unsigned v)
    {
        bytes.push_back(static_cast<std::byte>(v & 0xFF));
        bytes.push_back(static_cast<std::byte>((v >> 8) & 0xFF));
    }
    void u32(std::uint32_t v)
    {
        u16(v & 0xFFFF);
        u16(v >> 16);
    }
    void fix_riff_size()
    {
        const auto size = static_cast<std::uint32_t>(bytes.size() - 8);
        for (int i = 0; i < 4; ++i) {
            bytes[4 + i] = static_cast<std::byte>((size >> (8 * i)) & 0xFF);
        }
    }
};

RawWav header_with_fmt(unsigned format, unsigned channels, std::uint32_t rate, unsigned bits)
{
    RawWav w;
    w.tag("RIFF");
    w.u32(0);
    w.tag("WAVE");
    w.tag("fmt ");
    w.u32(16);
    w.u16(format);
    w.u16(channels);
    w.u32(rate);
    w.u32(rate * channels * bits / 8);
    w.u16(channels * bits / 8);
    w.u16(bits);
    return w;
}

RawWav pcm16(unsigned channels, std::uint32_t rate, const std::vector<std::int16_t>& interleaved)
{
    RawWav w = header_with_fmt(1, channels, rate, 16);
    w.tag("data");
    w.u32(static_cast<std::uint32_t>(interleaved.size() * 2));
    for (const auto s : interleaved) {
        w.u16(static_cast<std::uint16_t>(s));
    }
    w.fix_riff_size();
    return w;
}

ErrorCode code_of(const RawWav& w)
{
    try {
        parse_wav(w.bytes);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected parse_wav to throw";
    return ErrorCode::IoFailure;
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("phasesteg_wav_io_test_" + name);
}

TEST(WavIo, ReadsMonoSamplesVerbatim)
{
    const auto clip = parse_wav(pcm16(1, 8000, {0, 100, -100, 32767}).bytes);
    EXPECT_EQ(clip.samples, (std::vector<std::int16_t>{0, 100, -100, 32767}));
    EXPECT_EQ(clip.sample_rate, 8000u);
}

TEST(WavIo, StereoKeepsFirstChannel)
{
    const auto clip = parse_wav(pcm16(2, 44100, {1, 9, 2, 8}).bytes);
    EXPECT_EQ(clip.samples, (std::vector<std::int16_t>{1, 2}));
}

TEST(WavIo, MultiChannelYieldsChannelZeroSubsequence)
{
    std::mt19937_64 rng(7);
    for (unsigned channels : {2u, 3u, 6u}) {
        const auto frames = testing::random_clip(rng, 257 * channels, 48000);
        std::vector<std::int16_t> expected;
        for (std::size_t i = 0; i < frames.samples.size(); i += channels) {
            expected.push_back(frames.samples[i]);
        }
        const auto clip = parse_wav(pcm16(channels, 48000, frames.samples).bytes);
        EXPECT_EQ(clip.samples, expected) << channels << " channels";
        EXPECT_EQ(clip.samples.size(), 257u);
    }
}

TEST(WavIo, RejectsEightBitPcm)
{
    RawWav w = header_with_fmt(1, 1, 8000, 8);
    w.tag("data");
    w.u32(2);
    w.u16(0x8080);
    w.fix_riff_size();
    EXPECT_EQ(code_of(w), ErrorCode::UnsupportedFormat);
}

TEST(WavIo, RejectsFloatFormat)
{
    RawWav w = header_with_fmt(3, 1, 8000, 32);
    w.tag("data");
    w.u32(4);
    w.u32(0);
    w.fix_riff_size();
    EXPECT_EQ(code_of(w), ErrorCode::UnsupportedFormat);
}

TEST(WavIo, RejectsNonRiff)
{
    RawWav w = pcm16(1, 8000, {1, 2});
    std::memcpy(w.bytes.data(), "RIFX", 4);
    EXPECT_EQ(code_of(w), ErrorCode::MalformedContainer);

    RawWav tiny;
    tiny.tag("RIFF");
    EXPECT_EQ(code_of(tiny), ErrorCode::MalformedContainer);
}

TEST(WavIo, RejectsTruncatedData)
{
    RawWav w = pcm16(1, 8000, {1, 2, 3, 4});
    w.bytes.resize(w.bytes.size() - 3);
    EXPECT_EQ(code_of(w), ErrorCode::MalformedContainer);

    // RIFF size consistent with the shortened file, data chunk still claims 8 bytes.
    w.fix_riff_size();
    EXPECT_EQ(code_of(w), ErrorCode::MalformedContainer);
}

TEST(WavIo, RejectsOddDataLength)
{
    RawWav w = header_with_fmt(1, 1, 8000, 16);
    w.tag("data");
    w.u32(3);
    w.u16(1);
    w.bytes.push_back(std::byte{0});
    w.bytes.push_back(std::byte{0}); // pad
    w.fix_riff_size();
    EXPECT_EQ(code_of(w), ErrorCode::MalformedContainer);
}

TEST(WavIo, RejectsPartialStereoFrame)
{
    EXPECT_EQ(code_of(pcm16(2, 8000, {1, 2, 3})), ErrorCode::MalformedContainer);
}

TEST(WavIo, RejectsMissingChunks)
{
    RawWav no_data = header_with_fmt(1, 1, 8000, 16);
    no_data.fix_riff_size();
    EXPECT_EQ(code_of(no_data), ErrorCode::MalformedContainer);

    RawWav data_first;
    data_first.tag("RIFF");
    data_first.u32(0);
    data_first.tag("WAVE");
    data_first.tag("data");
    data_first.u32(2);
    data_first.u16(5);
    data_first.fix_riff_size();
    EXPECT_EQ(code_of(data_first), ErrorCode::MalformedContainer);
}

TEST(WavIo, SkipsUnknownChunksIncludingPadByte)
{
    RawWav w = header_with_fmt(1, 1, 22050, 16);
    w.tag("LIST");
    w.u32(3);
    w.bytes.insert(w.bytes.end(), {std::byte{'a'}, std::byte{'b'}, std::byte{'c'}, std::byte{0}});
    w.tag("data");
    w.u32(4);
    w.u16(static_cast<std::uint16_t>(-7));
    w.u16(7);
    w.tag("junk");
    w.u32(0);
    w.fix_riff_size();
    const auto clip = parse_wav(w.bytes);
    EXPECT_EQ(clip.samples, (std::vector<std::int16_t>{-7, 7}));
    EXPECT_EQ(clip.sample_rate, 22050u);
}

TEST(WavIo, EncodesLittleEndianDataChunk)
{
    const auto image = encode_wav(AudioClip{{0, 1, -1}, 8000});
    ASSERT_EQ(image.size(), 44u + 6u);
    const std::vector<std::byte> data(image.begin() + 44, image.end());
    const std::vector<std::byte> expected{std::byte{0x00}, std::byte{0x00}, std::byte{0x01},
                                          std::byte{0x00}, std::byte{0xFF}, std::byte{0xFF}};
    EXPECT_EQ(data, expected);
    EXPECT_EQ(std::memcmp(image.data() + 36, "data", 4), 0);
    EXPECT_EQ(std::to_integer<int>(image[40]), 6);
}

TEST(WavIo, HeaderDeclaresMono16BitAtClipRate)
{
    const auto image = encode_wav(AudioClip{{1, 2, 3}, 44100});
    auto u16 = [&](std::size_t at) {
        return std::to_integer<unsigned>(image[at]) | (std::to_integer<unsigned>(image[at + 1]) << 8);
    };
    auto u32 = [&](std::size_t at) { return u16(at) | (u16(at + 2) << 16); };
    EXPECT_EQ(std::memcmp(image.data(), "RIFF", 4), 0);
    EXPECT_EQ(u32(4), 36u + 6u);
    EXPECT_EQ(std::memcmp(image.data() + 8, "WAVEfmt ", 8), 0);
    EXPECT_EQ(u32(16), 16u);
    EXPECT_EQ(u16(20), 1u);     // PCM
    EXPECT_EQ(u16(22), 1u);     // channels
    EXPECT_EQ(u32(24), 44100u); // sample rate
    EXPECT_EQ(u32(28), 88200u); // byte rate
    EXPECT_EQ(u16(32), 2u);     // block align
    EXPECT_EQ(u16(34), 16u);    // bits
}

TEST(WavIo, RejectsZeroSampleRateOnWrite)
{
    EXPECT_THROW(encode_wav(AudioClip{{1}, 0}), Error);
}

TEST(WavIo, RoundTripPropertyInMemory)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> len(0, 2000);
    std::uniform_int_distribution<std::uint32_t> rate(1, 192000);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto clip = testing::random_clip(rng, len(rng), rate(rng));
        ASSERT_EQ(parse_wav(encode_wav(clip)), clip) << "trial " << trial;
    }
}

TEST(WavIo, RoundTripThroughFile)
{
    std::mt19937_64 rng(99);
    const auto path = temp_path("roundtrip.wav");
    for (int trial = 0; trial < 20; ++trial) {
        const auto clip = testing::random_clip(rng, 1000 + 37 * trial, 44100);
        write_wav(path, clip);
        ASSERT_EQ(read_wav(path), clip);
    }
    std::filesystem::remove(path);
}

TEST(WavIo, ReportsIoFailures)
{
    try {
        read_wav(temp_path("does_not_exist.wav"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IoFailure);
    }
    try {
        write_wav(temp_path("no_such_dir") / "out.wav", AudioClip{{1}, 8000});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IoFailure);
    }
}

} // namespace
} // namespace phasesteg
