#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcp/codec.hpp"
#include "lcp/quantize.hpp"

namespace lcp {

// .bin container, all multi-byte integers little-endian:
//
//   magic "LCP1" | version u8 | flags u8 | channel_count u8
//   sample_rate_mHz u32 | t0_us u64
//   per channel: name_len u8, name bytes, decimal_places u8, lca u8,
//                value_count u64, payload_len u64, payload_bit_count u64
//   then the channel payloads back to back, each byte-aligned.
//
// One timestamp plus the sample rate reconstructs every timestamp; the
// per-channel junk count lives inside the payload, not in the header.

inline constexpr std::uint8_t kMagic[4] = {'L', 'C', 'P', '1'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::uint8_t kFlagAnyChannelLca = 0x01;

struct ChannelMeta {
    std::string name;
    std::uint8_t decimal_places = 0;
    bool lca = false;
    std::uint64_t value_count = 0;       // original count, before junk splicing
    std::uint64_t payload_len = 0;       // bytes, == ceil(payload_bit_count / 8)
    std::uint64_t payload_bit_count = 0;
};

struct ContainerHeader {
    std::uint8_t version = kFormatVersion;
    std::uint8_t flags = 0;
    std::uint32_t sample_rate_mHz = 0;  // 50 Hz -> 50000
    std::uint64_t t0_us = 0;            // microseconds since the Unix epoch
    std::vector<ChannelMeta> channels;

    std::size_t header_size() const;
    std::uint64_t total_payload_len() const;
};

struct ChannelData {
    ChannelSpec spec;
    std::vector<std::int16_t> values;
};

struct ContainerWriteOptions {
    int obfuscation_count = 0;
    std::uint64_t seed = 0;
};

// Serializes header plus per-channel obfuscated payloads. All channels must
// carry the same nonzero value count.
std::vector<std::uint8_t> write_container(std::uint32_t sample_rate_mHz,
                                          std::uint64_t t0_us,
                                          std::span<const ChannelData> channels,
                                          const ContainerWriteOptions& opt = {});

struct DecodedContainer {
    ContainerHeader header;
    std::vector<std::vector<std::int16_t>> channels;
};

// Full strict parse: validates magic/version/structure, decodes every
// payload, rejects trailing bytes.
DecodedContainer read_container(std::span<const std::uint8_t> bytes);

// Header only (for inspection); still checks the declared payload sizes
// against the file length.
ContainerHeader read_header(std::span<const std::uint8_t> bytes);

// t0_us + round(index * 1e9 / sample_rate_mHz). Exact whenever 1e9 is a
// multiple of the rate (50 Hz: exactly 20000 us per step).
std::uint64_t timestamp_of(std::uint64_t index, const ContainerHeader& header);

}  // namespace lcp
