#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lcp/bitstream.hpp"
#include "lcp/codec.hpp"
#include "lcp/rng.hpp"

namespace lcp {

// Junk-splice plan. Each index is a raw 16-bit pattern reduced modulo the
// growing sequence length at its insertion step, so any pattern is valid for
// any input length. This layer obscures which stream positions carry real
// data; it is obfuscation, not cryptography.
struct ObfuscationPlan {
    std::vector<std::uint16_t> indices;
    std::vector<std::int16_t> junk;

    std::size_t count() const { return indices.size(); }
};

// Inserts junk[j] at position indices[j] mod (current length + 1), in order.
std::vector<std::int16_t> splice(std::span<const std::int16_t> values,
                                 const ObfuscationPlan& plan);

// Removes spliced positions in reverse insertion order, recovering the
// original sequence of length `original_len`.
std::vector<std::int16_t> unsplice(std::span<const std::int16_t> spliced,
                                   std::span<const std::uint16_t> indices,
                                   std::size_t original_len);

struct ObfuscatedEncoding {
    std::size_t bit_count = 0;
    ObfuscationPlan plan;
};

// Payload wire format: 8-bit junk count N, then one codec stream over the
// logical sequence [N index patterns] ++ splice(values). Indices and junk
// participate in the XOR chain exactly like data, so nothing in the stream
// marks which positions are junk.
ObfuscatedEncoding encode_obfuscated(std::span<const std::int16_t> values, int count,
                                     Rng& rng, BitWriter& w, EncodeStats* stats = nullptr);

// Reads the count, decodes N + original_len + N values, strips indices and
// junk, and returns exactly original_len values.
std::vector<std::int16_t> decode_obfuscated(BitReader& r, std::size_t original_len);

}  // namespace lcp
