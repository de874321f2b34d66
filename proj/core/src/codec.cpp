#include "phasesteg/codec.hpp"

#include "phasesteg/bits.hpp"
#include "phasesteg/codec_improved.hpp"
#include "phasesteg/codec_traditional.hpp"

namespace phasesteg {

std::string_view to_string(Codec codec) noexcept
{
    return codec == Codec::improved ? "improved" : "traditional";
}

std::optional<Codec> parse_codec(std::string_view name) noexcept
{
    if (name == "improved") {
        return Codec::improved;
    }
    if (name == "traditional") {
        return Codec::traditional;
    }
    return std::nullopt;
}

AudioClip embed(Codec codec, const AudioClip& cover, std::string_view message)
{
    return codec == Codec::improved ? improved::embed(cover, message)
                                    : traditional::embed(cover, message);
}

std::string extract(Codec codec, const AudioClip& stego, std::size_t msg_len_bits)
{
    return codec == Codec::improved ? improved::extract(stego, msg_len_bits)
                                    : traditional::extract(stego, msg_len_bits);
}

EmbedTrace embed_spectra(Codec codec, std::span<const std::int16_t> cover,
                         std::string_view message)
{
    const BitVector bits = text_to_bits(message);
    return codec == Codec::improved ? improved::embed_spectra(cover, bits)
                                    : traditional::embed_spectra(cover, bits);
}

} // namespace phasesteg
