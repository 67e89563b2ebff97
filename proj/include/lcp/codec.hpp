#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lcp/bitstream.hpp"

namespace lcp {

// Leading-run / meaningful / trailing-run split of a nonzero 16-bit XOR
// pattern. The meaningful part keeps its top and bottom bit set because the
// zero runs are maximal.
struct XorParts {
    int leading;                  // zero bits from the MSB, [0,15]
    int trailing;                 // zero bits from the LSB, [0,15]
    int meaningful_len;           // 16 - leading - trailing, [1,16]
    std::uint16_t meaningful_bits;
};

XorParts xor_parts(std::uint16_t x);

// Per-stream codec state: the previous value's bit pattern and the zero-run
// lengths of the previous nonzero XOR. kNoRun equals no real count, so the
// first nonzero XOR of a stream always takes the '11' branch. Zero XORs
// leave the run lengths untouched.
struct XorWindow {
    static constexpr int kNoRun = -1;

    std::uint16_t prev_bits = 0;
    int prev_leading = kNoRun;
    int prev_trailing = kNoRun;
};

// Code classes in grammar order: '0' for a repeated value, otherwise '1'
// plus two control bits selecting which zero-run lengths are reused from the
// previous XOR.
enum class CodeClass : int {
    kRepeat = 0,     // '0'
    kReuseBoth,      // '1' + '00': both run lengths match, nothing retransmitted
    kReuseLeading,   // '1' + '01': leading matches, trailing sent in 4 bits
    kReuseTrailing,  // '1' + '10': trailing matches, leading sent in 4 bits
    kFresh,          // '1' + '11': both run lengths sent in 4 bits each
};

inline constexpr int kCodeClassCount = 5;

// Everything after the first value costs at most 1 + 2 + 4 + 4 + 16 bits.
inline constexpr int kMaxBitsPerValue = 27;

// Per-class value counts and bit totals, filled by the encoder on request.
struct EncodeStats {
    std::array<std::uint64_t, kCodeClassCount> count{};
    std::array<std::uint64_t, kCodeClassCount> bits{};

    std::uint64_t total_count() const {
        std::uint64_t n = 0;
        for (auto c : count) n += c;
        return n;
    }
    std::uint64_t total_bits() const {
        std::uint64_t n = 0;
        for (auto b : bits) n += b;
        return n;
    }
    EncodeStats& operator+=(const EncodeStats& other) {
        for (int i = 0; i < kCodeClassCount; ++i) {
            count[std::size_t(i)] += other.count[std::size_t(i)];
            bits[std::size_t(i)] += other.bits[std::size_t(i)];
        }
        return *this;
    }
};

// Encodes one value against the window and updates it. Signed values are
// XORed as raw two's-complement bit patterns. Run-length comparison is
// strict equality on both counts.
CodeClass encode_next(XorWindow& win, std::int16_t value, BitWriter& w);

// Exact inverse of encode_next. In the '00' branch the meaningful length is
// derived as 16 - prev_leading - prev_trailing, never transmitted.
std::int16_t decode_next(XorWindow& win, BitReader& r);

// First value raw as 16 bits, then encode_next for the rest starting from a
// fresh window. Returns the bits written.
std::size_t encode_sequence(std::span<const std::int16_t> values, BitWriter& w,
                            EncodeStats* stats = nullptr);

// Inverse of encode_sequence; `count` must equal the encoded value count.
std::vector<std::int16_t> decode_sequence(BitReader& r, std::size_t count);

}  // namespace lcp
