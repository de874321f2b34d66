#pragma once

#include "phasesteg/audio_clip.hpp"
#include "phasesteg/segments.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace phasesteg {

enum class Codec { improved, traditional };

std::string_view to_string(Codec codec) noexcept;
std::optional<Codec> parse_codec(std::string_view name) noexcept;

AudioClip embed(Codec codec, const AudioClip& cover, std::string_view message);
std::string extract(Codec codec, const AudioClip& stego, std::size_t msg_len_bits);
EmbedTrace embed_spectra(Codec codec, std::span<const std::int16_t> cover,
                         std::string_view message);

} // namespace phasesteg
