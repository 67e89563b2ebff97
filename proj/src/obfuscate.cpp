#include "lcp/obfuscate.hpp"

#include "lcp/errors.hpp"

namespace lcp {

std::vector<std::int16_t> splice(std::span<const std::int16_t> values,
                                 const ObfuscationPlan& plan) {
    if (values.empty())
        throw UsageError("splice: empty input");
    if (plan.indices.size() != plan.junk.size())
        throw UsageError("splice: plan index/junk length mismatch");

    std::vector<std::int16_t> out(values.begin(), values.end());
    out.reserve(values.size() + plan.count());
    for (std::size_t j = 0; j < plan.count(); ++j) {
        const std::size_t pos = plan.indices[j] % (out.size() + 1);
        out.insert(out.begin() + std::ptrdiff_t(pos), plan.junk[j]);
    }
    return out;
}

std::vector<std::int16_t> unsplice(std::span<const std::int16_t> spliced,
                                   std::span<const std::uint16_t> indices,
                                   std::size_t original_len) {
    if (spliced.size() != original_len + indices.size())
        throw CorruptStream("unsplice: spliced length != original length + junk count");

    std::vector<std::int16_t> out(spliced.begin(), spliced.end());
    for (std::size_t j = indices.size(); j-- > 0;) {
        const std::size_t pos = indices[j] % (original_len + j + 1);
        out.erase(out.begin() + std::ptrdiff_t(pos));
    }
    return out;
}

ObfuscatedEncoding encode_obfuscated(std::span<const std::int16_t> values, int count,
                                     Rng& rng, BitWriter& w, EncodeStats* stats) {
    if (values.empty())
        throw UsageError("encode_obfuscated: empty input");
    if (count < 0 || count > 255)
        throw UsageError("obfuscation count must be in [0,255], got " +
                         std::to_string(count));

    const std::size_t start = w.bit_count();
    w.write_bits(std::uint32_t(count), 8);

    ObfuscationPlan plan;
    plan.indices.reserve(std::size_t(count));
    plan.junk.reserve(std::size_t(count));
    for (int i = 0; i < count; ++i)
        plan.indices.push_back(rng.next_u16());
    for (int i = 0; i < count; ++i)
        plan.junk.push_back(std::int16_t(rng.next_u16()));

    std::vector<std::int16_t> stream;
    stream.reserve(values.size() + 2 * std::size_t(count));
    for (const std::uint16_t ix : plan.indices)
        stream.push_back(std::int16_t(ix));
    const std::vector<std::int16_t> spliced = splice(values, plan);
    stream.insert(stream.end(), spliced.begin(), spliced.end());

    encode_sequence(stream, w, stats);
    return ObfuscatedEncoding{w.bit_count() - start, std::move(plan)};
}

std::vector<std::int16_t> decode_obfuscated(BitReader& r, std::size_t original_len) {
    if (original_len < 1)
        throw UsageError("decode_obfuscated: original length must be >= 1");

    const std::size_t n = r.read_bits(8);
    const std::vector<std::int16_t> all = decode_sequence(r, original_len + 2 * n);

    std::vector<std::uint16_t> indices(n);
    for (std::size_t i = 0; i < n; ++i)
        indices[i] = std::uint16_t(all[i]);
    const std::span<const std::int16_t> spliced(all.data() + n, all.size() - n);
    return unsplice(spliced, indices, original_len);
}

}  // namespace lcp
