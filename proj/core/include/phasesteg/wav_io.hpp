#pragma once

#include "phasesteg/audio_clip.hpp"

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace phasesteg {

// RIFF/WAVE reader and writer for 16-bit integer PCM.
//
// Multi-channel input is reduced to channel 0. Output is always mono.
// Chunks other than "fmt " and "data" are skipped on read and dropped on
// write.

/// Throws Error{MalformedContainer} or Error{UnsupportedFormat};
/// Error{IoFailure} if the file cannot be opened.
AudioClip read_wav(const std::filesystem::path& path);

/// Parses an in-memory WAV image. Same error contract as read_wav.
AudioClip parse_wav(std::span<const std::byte> image);

/// Throws Error{IoFailure} on filesystem errors.
void write_wav(const std::filesystem::path& path, const AudioClip& clip);

/// Serializes a mono 16-bit PCM file image (44-byte canonical header).
std::vector<std::byte> encode_wav(const AudioClip& clip);

} // namespace phasesteg
