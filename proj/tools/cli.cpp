#include "cli.hpp"

#include "phasesteg/codec.hpp"
#include "phasesteg/error.hpp"
#include "phasesteg/experiments.hpp"
#include "phasesteg/fixture.hpp"
#include "phasesteg/metrics.hpp"
#include "phasesteg/segments.hpp"
#include "phasesteg/wav_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

namespace phasesteg::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MessageSource {
    std::string text;
    std::string file;
};

void add_message_options(CLI::App& cmd, MessageSource& src)
{
    auto* text = cmd.add_option("--message,-m", src.text, "Message to embed (bytes)");
    auto* file = cmd.add_option("--message-file", src.file, "Read the message as raw bytes");
    text->excludes(file);
}

std::string load_message(const MessageSource& src)
{
    std::string message = src.text;
    if (!src.file.empty()) {
        std::ifstream in(src.file, std::ios::binary);
        if (!in) {
            throw Error(ErrorCode::IoFailure, "cannot open message file " + src.file);
        }
        message.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    if (message.empty()) {
        throw UsageError("message must not be empty");
    }
    return message;
}

std::ofstream open_csv(const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    }
    return out;
}

void finish_csv(std::ofstream& out, const std::string& path)
{
    out.flush();
    if (!out) {
        throw Error(ErrorCode::IoFailure, "write failed: " + path);
    }
}

std::string format_ber(double ber)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", ber);
    return buf;
}

void print_params(std::ostream& out, const StegoParams& p)
{
    out << "msg_bits=" << p.msg_len_bits << '\n'
        << "seg_len=" << p.seg_len << '\n'
        << "seg_num=" << p.seg_num << '\n';
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::MalformedContainer:
    case ErrorCode::UnsupportedFormat:
    case ErrorCode::IoFailure:
        return kIoError;
    default:
        return kUsageError;
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Phase-coding audio steganography"};
    app.name("phasesteg");
    app.require_subcommand(1);

    std::string codec_name = "improved";
    auto add_codec = [&](CLI::App& cmd) {
        cmd.add_option("--codec", codec_name, "improved (default) or traditional")
            ->check(CLI::IsMember({"improved", "traditional"}));
    };

    std::string in_path;
    std::string out_path;
    MessageSource message_src;

    auto* embed_cmd = app.add_subcommand("embed", "Hide a message in a WAV file");
    embed_cmd->add_option("--in,-i", in_path, "Cover WAV")->required();
    embed_cmd->add_option("--out,-o", out_path, "Stego WAV to write")->required();
    add_message_options(*embed_cmd, message_src);
    add_codec(*embed_cmd);

    std::size_t chars = 0;
    auto* extract_cmd = app.add_subcommand("extract", "Recover a message of known length");
    extract_cmd->add_option("--in,-i", in_path, "Stego WAV")->required();
    extract_cmd->add_option("--chars,-n", chars, "Message length in characters")
        ->required()
        ->check(CLI::PositiveNumber);
    add_codec(*extract_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Embed, write, re-read, extract and score");
    verify_cmd->add_option("--in,-i", in_path, "Cover WAV")->required();
    verify_cmd->add_option("--out,-o", out_path, "Stego WAV to write")->required();
    add_message_options(*verify_cmd, message_src);
    add_codec(*verify_cmd);

    std::size_t max_chars = 127;
    std::string sweep_codec = "both";
    auto* sweep_cmd = app.add_subcommand("sweep", "BER against message length");
    sweep_cmd->add_option("--in,-i", in_path, "Cover WAV")->required();
    sweep_cmd->add_option("--max-chars", max_chars, "Longest message, in characters")
        ->check(CLI::Range(std::size_t{1}, kMaxSweepChars));
    sweep_cmd->add_option("--csv,--out,-o", out_path, "CSV to write")->required();
    sweep_cmd->add_option("--codec", sweep_codec, "improved, traditional or both")
        ->check(CLI::IsMember({"improved", "traditional", "both"}));

    std::string mode = "post";
    auto* dump_cmd = app.add_subcommand("phase-dump", "Cover and stego phases per segment and bin");
    dump_cmd->add_option("--in,-i", in_path, "Cover WAV")->required();
    add_message_options(*dump_cmd, message_src);
    add_codec(*dump_cmd);
    dump_cmd->add_option("--csv,--out,-o", out_path, "CSV to write")->required();
    dump_cmd->add_option("--mode", mode, "post (read back from audio) or pre (as written)")
        ->check(CLI::IsMember({"post", "pre"}));

    FixtureOptions fixture;
    auto* fixture_cmd = app.add_subcommand("make-fixture", "Write the synthetic cover");
    fixture_cmd->add_option("--out,-o", out_path, "WAV to write")->required();
    fixture_cmd->add_option("--seconds", fixture.seconds, "Duration")
        ->check(CLI::NonNegativeNumber);
    fixture_cmd->add_option("--seed", fixture.seed, "Noise seed");
    fixture_cmd->add_option("--rate", fixture.sample_rate, "Sample rate in Hz")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    const Codec codec = parse_codec(codec_name).value_or(Codec::improved);

    try {
        if (*embed_cmd) {
            const std::string message = load_message(message_src);
            const AudioClip cover = read_wav(in_path);
            const AudioClip stego = embed(codec, cover, message);
            write_wav(out_path, stego);
            print_params(out, derive_params(8 * message.size(), cover.samples.size()));
            out << "samples=" << stego.samples.size() << '\n';
            return kSuccess;
        }
        if (*extract_cmd) {
            const AudioClip stego = read_wav(in_path);
            out << "message=" << extract(codec, stego, 8 * chars) << '\n';
            return kSuccess;
        }
        if (*verify_cmd) {
            const std::string message = load_message(message_src);
            const AudioClip cover = read_wav(in_path);
            write_wav(out_path, embed(codec, cover, message));
            const std::string recovered = extract(codec, read_wav(out_path), 8 * message.size());
            const VerificationReport report = verify(message, recovered);
            print_params(out, derive_params(8 * message.size(), cover.samples.size()));
            out << "message=" << recovered << '\n'
                << "ber=" << format_ber(report.bit_error_rate) << '\n'
                << "accuracy=" << (report.message_accuracy ? "correct" : "incorrect") << '\n';
            return report.message_accuracy ? kSuccess : kVerificationFailed;
        }
        if (*sweep_cmd) {
            const AudioClip cover = read_wav(in_path);
            std::vector<Codec> codecs;
            if (sweep_codec == "both") {
                codecs = {Codec::improved, Codec::traditional};
            } else {
                codecs = {*parse_codec(sweep_codec)};
            }
            std::vector<SweepRecord> records;
            for (const Codec c : codecs) {
                const auto part = ber_sweep(cover, max_chars, c);
                double mean = 0.0;
                for (const auto& r : part) {
                    mean += r.ber;
                }
                mean /= static_cast<double>(part.size());
                out << "mean_ber_" << to_string(c) << '=' << format_ber(mean) << '\n';
                records.insert(records.end(), part.begin(), part.end());
            }
            auto csv = open_csv(out_path);
            write_sweep_csv(csv, records);
            finish_csv(csv, out_path);
            out << "rows=" << records.size() << '\n';
            return kSuccess;
        }
        if (*dump_cmd) {
            const std::string message = load_message(message_src);
            const AudioClip cover = read_wav(in_path);
            const DumpMode dump_mode =
                mode == "pre" ? DumpMode::pre_quantization : DumpMode::post_quantization;
            const auto records = phase_dump(cover, message, codec, dump_mode);
            auto csv = open_csv(out_path);
            write_phase_csv(csv, records);
            finish_csv(csv, out_path);
            print_params(out, derive_params(8 * message.size(), cover.samples.size()));
            out << "rows=" << records.size() << '\n';
            return kSuccess;
        }
        if (*fixture_cmd) {
            const AudioClip clip = make_fixture(fixture);
            write_wav(out_path, clip);
            out << "samples=" << clip.samples.size() << '\n'
                << "sample_rate=" << clip.sample_rate << '\n';
            return kSuccess;
        }
    } catch (const UsageError& e) {
        err << "phasesteg: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "phasesteg: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kUsageError;
}

} // namespace phasesteg::cli
