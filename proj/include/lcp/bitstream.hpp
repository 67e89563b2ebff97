#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lcp/errors.hpp"

namespace lcp {

struct FinishedStream {
    std::vector<std::uint8_t> bytes;  // zero-padded to a byte boundary
    std::size_t bit_count = 0;        // exact bits written, padding excluded
};

// Append-only bit sink, MSB-first within each byte.
//
// Bits are staged in a 64-bit accumulator and flushed byte-wise, so a write
// of up to 32 bits never touches the vector more than five times.
class BitWriter {
public:
    // Appends the `count` low-order bits of `value`, most significant first.
    void write_bits(std::uint32_t value, int count) {
        if (count < 1 || count > 32)
            throw UsageError("write_bits: count must be in [1,32]");
        if (count < 32 && (value >> count) != 0)
            throw UsageError("write_bits: value does not fit in count bits");
        acc_ = (acc_ << count) | std::uint64_t(value);
        acc_bits_ += count;
        total_bits_ += std::size_t(count);
        while (acc_bits_ >= 8) {
            acc_bits_ -= 8;
            bytes_.push_back(std::uint8_t(acc_ >> acc_bits_));
        }
    }

    void write_bit(bool bit) { write_bits(bit ? 1u : 0u, 1); }

    std::size_t bit_count() const { return total_bits_; }

    void reserve_bits(std::size_t bits) { bytes_.reserve((bits + 7) / 8); }

    // Zero-pads to a byte boundary and hands the buffer over. Decoders stop
    // on value counts from the container header, never on padding. The
    // writer is spent afterwards.
    FinishedStream finish() {
        if (acc_bits_ > 0) {
            bytes_.push_back(std::uint8_t(acc_ << (8 - acc_bits_)));
            acc_bits_ = 0;
        }
        return FinishedStream{std::move(bytes_), total_bits_};
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t acc_ = 0;
    int acc_bits_ = 0;
    std::size_t total_bits_ = 0;
};

// Strictly sequential bit reader over a borrowed byte buffer, MSB-first.
class BitReader {
public:
    BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_count)
        : bytes_(bytes), bit_limit_(bit_count) {
        if (bit_count > bytes.size() * 8)
            throw UsageError("BitReader: bit count exceeds buffer");
    }

    explicit BitReader(std::span<const std::uint8_t> bytes)
        : BitReader(bytes, bytes.size() * 8) {}

    // Next `count` bits MSB-first. Throws TruncatedStream past the end.
    std::uint32_t read_bits(int count) {
        if (count < 1 || count > 32)
            throw UsageError("read_bits: count must be in [1,32]");
        if (pos_ + std::size_t(count) > bit_limit_)
            throw TruncatedStream("bit stream exhausted");
        std::uint64_t value = 0;
        int need = count;
        while (need > 0) {
            const std::size_t byte = pos_ >> 3;
            const int avail = 8 - int(pos_ & 7);
            const int take = need < avail ? need : avail;
            const std::uint32_t chunk =
                (std::uint32_t(bytes_[byte]) >> (avail - take)) & ((1u << take) - 1u);
            value = (value << take) | chunk;
            pos_ += std::size_t(take);
            need -= take;
        }
        return std::uint32_t(value);
    }

    bool read_bit() { return read_bits(1) != 0; }

    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return bit_limit_ - pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t bit_limit_;
    std::size_t pos_ = 0;
};

}  // namespace lcp
