#include "lcp/container.hpp"

#include <cstring>

#include "lcp/obfuscate.hpp"
#include "lcp/rng.hpp"

namespace lcp {

namespace {

constexpr std::size_t kFixedHeaderSize = 4 + 1 + 1 + 1 + 4 + 8;
constexpr std::size_t kChannelMetaFixedSize = 1 + 1 + 1 + 8 + 8 + 8;

void put_u8(std::vector<std::uint8_t>& out, std::uint8_t v) { out.push_back(v); }

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
        out.push_back(std::uint8_t(v >> (8 * i)));
}

void put_u64le(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        out.push_back(std::uint8_t(v >> (8 * i)));
}

// Cursor over the raw file bytes; underruns are TruncatedStream.
struct ByteReader {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    std::span<const std::uint8_t> take(std::size_t n) {
        if (pos + n > bytes.size())
            throw TruncatedStream("container ends inside the header");
        const auto view = bytes.subspan(pos, n);
        pos += n;
        return view;
    }

    std::uint8_t u8() { return take(1)[0]; }

    std::uint32_t u32le() {
        const auto v = take(4);
        std::uint32_t r = 0;
        for (int i = 3; i >= 0; --i)
            r = (r << 8) | v[std::size_t(i)];
        return r;
    }

    std::uint64_t u64le() {
        const auto v = take(8);
        std::uint64_t r = 0;
        for (int i = 7; i >= 0; --i)
            r = (r << 8) | v[std::size_t(i)];
        return r;
    }
};

ContainerHeader parse_header(ByteReader& in) {
    const auto magic = in.take(4);
    if (std::memcmp(magic.data(), kMagic, 4) != 0)
        throw BadMagic("not an LCP container");

    ContainerHeader h;
    h.version = in.u8();
    if (h.version != kFormatVersion)
        throw UnsupportedVersion("container version " + std::to_string(h.version) +
                                 " not supported (expected " +
                                 std::to_string(kFormatVersion) + ")");
    h.flags = in.u8();
    const std::uint8_t channel_count = in.u8();
    if (channel_count < 1)
        throw CorruptStream("container declares zero channels");
    h.sample_rate_mHz = in.u32le();
    if (h.sample_rate_mHz == 0)
        throw CorruptStream("container declares a zero sample rate");
    h.t0_us = in.u64le();

    bool any_lca = false;
    h.channels.reserve(channel_count);
    for (std::uint8_t c = 0; c < channel_count; ++c) {
        ChannelMeta m;
        const std::uint8_t name_len = in.u8();
        const auto name = in.take(name_len);
        m.name.assign(name.begin(), name.end());
        m.decimal_places = in.u8();
        if (m.decimal_places > 4)
            throw CorruptStream("channel '" + m.name + "' declares " +
                                std::to_string(m.decimal_places) + " decimal places");
        const std::uint8_t lca_byte = in.u8();
        if (lca_byte > 1)
            throw CorruptStream("channel '" + m.name + "' has a malformed lca flag");
        m.lca = lca_byte == 1;
        any_lca = any_lca || m.lca;
        m.value_count = in.u64le();
        if (m.value_count == 0)
            throw CorruptStream("channel '" + m.name + "' declares zero values");
        m.payload_len = in.u64le();
        m.payload_bit_count = in.u64le();
        if (m.payload_len != (m.payload_bit_count + 7) / 8)
            throw CorruptStream("channel '" + m.name +
                                "' payload length disagrees with its bit count");
        h.channels.push_back(std::move(m));
    }

    if (((h.flags & kFlagAnyChannelLca) != 0) != any_lca)
        throw CorruptStream("header LCA flag disagrees with the channel table");

    return h;
}

void check_total_size(const ContainerHeader& h, std::size_t header_size,
                      std::size_t file_size) {
    const std::uint64_t expected = header_size + h.total_payload_len();
    if (file_size < expected)
        throw TruncatedStream("container is " + std::to_string(file_size) +
                              " bytes, payloads need " + std::to_string(expected));
    if (file_size > expected)
        throw CorruptStream("container has " +
                            std::to_string(file_size - expected) +
                            " trailing bytes");
}

}  // namespace

std::size_t ContainerHeader::header_size() const {
    std::size_t n = kFixedHeaderSize;
    for (const auto& m : channels)
        n += kChannelMetaFixedSize + m.name.size();
    return n;
}

std::uint64_t ContainerHeader::total_payload_len() const {
    std::uint64_t n = 0;
    for (const auto& m : channels)
        n += m.payload_len;
    return n;
}

std::vector<std::uint8_t> write_container(std::uint32_t sample_rate_mHz,
                                          std::uint64_t t0_us,
                                          std::span<const ChannelData> channels,
                                          const ContainerWriteOptions& opt) {
    if (channels.empty())
        throw UsageError("write_container: no channels");
    if (channels.size() > 255)
        throw UsageError("write_container: at most 255 channels");
    if (sample_rate_mHz == 0)
        throw UsageError("write_container: sample rate must be positive");

    const std::size_t value_count = channels[0].values.size();
    if (value_count == 0)
        throw UsageError("write_container: channels must be nonempty");
    bool any_lca = false;
    for (const auto& ch : channels) {
        validate_spec(ch.spec);
        if (ch.values.size() != value_count)
            throw UsageError("write_container: channel '" + ch.spec.name +
                             "' has a different value count");
        any_lca = any_lca || ch.spec.lca;
    }

    // Encode payloads first so the channel table can carry their sizes.
    std::vector<FinishedStream> payloads;
    payloads.reserve(channels.size());
    for (std::size_t i = 0; i < channels.size(); ++i) {
        BitWriter w;
        Rng rng(Rng::derive_seed(opt.seed, i));
        encode_obfuscated(channels[i].values, opt.obfuscation_count, rng, w);
        payloads.push_back(w.finish());
    }

    std::vector<std::uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + 4);
    put_u8(out, kFormatVersion);
    put_u8(out, any_lca ? kFlagAnyChannelLca : 0);
    put_u8(out, std::uint8_t(channels.size()));
    put_u32le(out, sample_rate_mHz);
    put_u64le(out, t0_us);
    for (std::size_t i = 0; i < channels.size(); ++i) {
        const auto& spec = channels[i].spec;
        put_u8(out, std::uint8_t(spec.name.size()));
        out.insert(out.end(), spec.name.begin(), spec.name.end());
        put_u8(out, std::uint8_t(spec.decimal_places));
        put_u8(out, spec.lca ? 1 : 0);
        put_u64le(out, value_count);
        put_u64le(out, payloads[i].bytes.size());
        put_u64le(out, payloads[i].bit_count);
    }
    for (const auto& p : payloads)
        out.insert(out.end(), p.bytes.begin(), p.bytes.end());
    return out;
}

ContainerHeader read_header(std::span<const std::uint8_t> bytes) {
    ByteReader in{bytes};
    ContainerHeader h = parse_header(in);
    check_total_size(h, in.pos, bytes.size());
    return h;
}

DecodedContainer read_container(std::span<const std::uint8_t> bytes) {
    ByteReader in{bytes};
    DecodedContainer dc;
    dc.header = parse_header(in);
    check_total_size(dc.header, in.pos, bytes.size());

    dc.channels.reserve(dc.header.channels.size());
    for (const auto& m : dc.header.channels) {
        const auto payload = in.take(std::size_t(m.payload_len));
        BitReader r(payload, std::size_t(m.payload_bit_count));
        dc.channels.push_back(decode_obfuscated(r, std::size_t(m.value_count)));
        if (r.remaining() != 0)
            throw CorruptStream("channel '" + m.name + "' payload has " +
                                std::to_string(r.remaining()) +
                                " undecoded bits");
    }
    return dc;
}

std::uint64_t timestamp_of(std::uint64_t index, const ContainerHeader& header) {
    if (header.channels.empty() || header.sample_rate_mHz == 0)
        throw UsageError("timestamp_of: header has no channels or no rate");
    if (index >= header.channels[0].value_count)
        throw UsageError("timestamp_of: index " + std::to_string(index) +
                         " out of range");
    const unsigned __int128 num =
        (unsigned __int128)index * 1000000000u + header.sample_rate_mHz / 2;
    return header.t0_us + std::uint64_t(num / header.sample_rate_mHz);
}

}  // namespace lcp
