#include "lcp/codec.hpp"

#include <bit>

#include "lcp/errors.hpp"

namespace lcp {

XorParts xor_parts(std::uint16_t x) {
    if (x == 0)
        throw UsageError("xor_parts: zero pattern has no meaningful part");
    XorParts p;
    p.leading = std::countl_zero(x);
    p.trailing = std::countr_zero(x);
    p.meaningful_len = 16 - p.leading - p.trailing;
    p.meaningful_bits = std::uint16_t(x >> p.trailing);
    return p;
}

CodeClass encode_next(XorWindow& win, std::int16_t value, BitWriter& w) {
    const auto bits = std::uint16_t(value);
    const auto x = std::uint16_t(bits ^ win.prev_bits);

    if (x == 0) {
        w.write_bit(false);
        win.prev_bits = bits;
        return CodeClass::kRepeat;
    }

    const XorParts p = xor_parts(x);
    w.write_bit(true);

    const bool same_leading = p.leading == win.prev_leading;
    const bool same_trailing = p.trailing == win.prev_trailing;
    CodeClass cls;
    if (same_leading && same_trailing) {
        w.write_bits(0b00, 2);
        cls = CodeClass::kReuseBoth;
    } else if (same_leading) {
        w.write_bits(0b01, 2);
        w.write_bits(std::uint32_t(p.trailing), 4);
        cls = CodeClass::kReuseLeading;
    } else if (same_trailing) {
        w.write_bits(0b10, 2);
        w.write_bits(std::uint32_t(p.leading), 4);
        cls = CodeClass::kReuseTrailing;
    } else {
        w.write_bits(0b11, 2);
        w.write_bits(std::uint32_t(p.leading), 4);
        w.write_bits(std::uint32_t(p.trailing), 4);
        cls = CodeClass::kFresh;
    }
    w.write_bits(p.meaningful_bits, p.meaningful_len);

    win.prev_bits = bits;
    win.prev_leading = p.leading;
    win.prev_trailing = p.trailing;
    return cls;
}

std::int16_t decode_next(XorWindow& win, BitReader& r) {
    if (!r.read_bit())
        return std::int16_t(win.prev_bits);

    int leading;
    int trailing;
    switch (r.read_bits(2)) {
        case 0b00:
            leading = win.prev_leading;
            trailing = win.prev_trailing;
            break;
        case 0b01:
            leading = win.prev_leading;
            trailing = int(r.read_bits(4));
            break;
        case 0b10:
            trailing = win.prev_trailing;
            leading = int(r.read_bits(4));
            break;
        default:
            leading = int(r.read_bits(4));
            trailing = int(r.read_bits(4));
            break;
    }

    // kNoRun in either slot means the stream reused run lengths before any
    // nonzero XOR established them.
    if (leading < 0 || trailing < 0)
        throw CorruptStream("control bits reuse zero-run lengths before any nonzero XOR");
    const int len = 16 - leading - trailing;
    if (len < 1)
        throw CorruptStream("zero-run lengths leave no meaningful bits");

    const auto meaningful = std::uint16_t(r.read_bits(len));
    const auto x = std::uint16_t(meaningful << trailing);
    win.prev_bits = std::uint16_t(win.prev_bits ^ x);
    win.prev_leading = leading;
    win.prev_trailing = trailing;
    return std::int16_t(win.prev_bits);
}

std::size_t encode_sequence(std::span<const std::int16_t> values, BitWriter& w,
                            EncodeStats* stats) {
    if (values.empty())
        throw UsageError("encode_sequence: empty input");
    const std::size_t start = w.bit_count();
    w.write_bits(std::uint16_t(values[0]), 16);
    XorWindow win;
    win.prev_bits = std::uint16_t(values[0]);
    for (std::size_t i = 1; i < values.size(); ++i) {
        const std::size_t before = w.bit_count();
        const CodeClass cls = encode_next(win, values[i], w);
        if (stats) {
            stats->count[std::size_t(cls)] += 1;
            stats->bits[std::size_t(cls)] += w.bit_count() - before;
        }
    }
    return w.bit_count() - start;
}

std::vector<std::int16_t> decode_sequence(BitReader& r, std::size_t count) {
    if (count < 1)
        throw UsageError("decode_sequence: count must be >= 1");
    std::vector<std::int16_t> out;
    out.reserve(count);
    XorWindow win;
    win.prev_bits = std::uint16_t(r.read_bits(16));
    out.push_back(std::int16_t(win.prev_bits));
    for (std::size_t i = 1; i < count; ++i)
        out.push_back(decode_next(win, r));
    return out;
}

}  // namespace lcp
