#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "lcp/errors.hpp"
#include "lcp/obfuscate.hpp"
#include "lcp/rng.hpp"

using namespace lcp;

namespace {

std::vector<std::int16_t> obfuscated_roundtrip(const std::vector<std::int16_t>& values,
                                               int count, std::uint64_t seed) {
    Rng rng(seed);
    BitWriter w;
    encode_obfuscated(values, count, rng, w);
    const auto s = w.finish();
    BitReader r(s.bytes, s.bit_count);
    return decode_obfuscated(r, values.size());
}

}  // namespace

TEST_CASE("splice inserts junk at reduced positions") {
    const std::vector<std::int16_t> values{10, 20, 30};
    ObfuscationPlan plan;
    plan.indices = {1};
    plan.junk = {99};
    CHECK(splice(values, plan) == std::vector<std::int16_t>{10, 99, 20, 30});
}

TEST_CASE("splice reduces indices modulo the growing length") {
    const std::vector<std::int16_t> values{10, 20, 30};
    ObfuscationPlan plan;
    plan.indices = {4, 5};  // 4 mod 4 = 0; then 5 mod 5 = 0
    plan.junk = {-7, -8};
    const auto spliced = splice(values, plan);
    CHECK(spliced == std::vector<std::int16_t>{-8, -7, 10, 20, 30});
}

TEST_CASE("unsplice inverts splice for arbitrary plans") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t len = 1 + rng() % 50;
        std::vector<std::int16_t> values;
        for (std::size_t i = 0; i < len; ++i)
            values.push_back(std::int16_t(rng()));
        ObfuscationPlan plan;
        const int n = int(rng() % 40);
        for (int j = 0; j < n; ++j) {
            plan.indices.push_back(std::uint16_t(rng()));
            plan.junk.push_back(std::int16_t(rng()));
        }
        const auto spliced = splice(values, plan);
        CHECK(spliced.size() == values.size() + plan.count());
        CHECK(unsplice(spliced, plan.indices, values.size()) == values);
    }
}

TEST_CASE("unsplice rejects a length mismatch") {
    const std::vector<std::int16_t> spliced{1, 2, 3};
    const std::vector<std::uint16_t> indices{0};
    CHECK_THROWS_AS(unsplice(spliced, indices, 3), CorruptStream);
}

TEST_CASE("junk count six leads the payload as one byte") {
    const std::vector<std::int16_t> values{100, 100, 101};
    Rng rng(1);
    BitWriter w;
    encode_obfuscated(values, 6, rng, w);
    const auto s = w.finish();
    CHECK(s.bytes[0] == 0b00000110);
}

TEST_CASE("count zero costs exactly the 8-bit field") {
    const std::vector<std::int16_t> values{23, 25, 47, 48, 3074, 3075, 3076, 3076};
    BitWriter plain;
    const std::size_t plain_bits = encode_sequence(values, plain);

    Rng rng(99);
    BitWriter w;
    const auto enc = encode_obfuscated(values, 0, rng, w);
    CHECK(enc.bit_count == plain_bits + 8);
    CHECK(enc.plan.count() == 0);

    const auto s = w.finish();
    BitReader r(s.bytes, s.bit_count);
    CHECK(decode_obfuscated(r, values.size()) == values);
}

TEST_CASE("roundtrip across counts, lengths and seeds") {
    std::mt19937 mt(43);
    for (const int count : {0, 1, 5, 128, 255}) {
        for (const std::size_t len : {std::size_t(1), std::size_t(2), std::size_t(64)}) {
            std::vector<std::int16_t> values;
            for (std::size_t i = 0; i < len; ++i)
                values.push_back(std::int16_t(mt()));
            CHECK(obfuscated_roundtrip(values, count, mt()) == values);
        }
    }
}

TEST_CASE("different seeds give different bytes, identical decodes") {
    std::vector<std::int16_t> values;
    for (int i = 0; i < 200; ++i)
        values.push_back(std::int16_t(1000 + (i % 7)));

    const auto encode_with = [&](std::uint64_t seed) {
        Rng rng(seed);
        BitWriter w;
        encode_obfuscated(values, 16, rng, w);
        return w.finish();
    };
    const auto a = encode_with(1);
    const auto b = encode_with(2);
    CHECK(a.bytes != b.bytes);

    BitReader ra(a.bytes, a.bit_count);
    BitReader rb(b.bytes, b.bit_count);
    CHECK(decode_obfuscated(ra, values.size()) == values);
    CHECK(decode_obfuscated(rb, values.size()) == values);
}

TEST_CASE("same seed reproduces the byte stream") {
    const std::vector<std::int16_t> values{5, 5, 7, 7, 9};
    const auto encode_with = [&](std::uint64_t seed) {
        Rng rng(seed);
        BitWriter w;
        encode_obfuscated(values, 32, rng, w);
        return w.finish();
    };
    const auto a = encode_with(1234);
    const auto b = encode_with(1234);
    CHECK(a.bytes == b.bytes);
    CHECK(a.bit_count == b.bit_count);
}

TEST_CASE("count outside [0,255] is rejected") {
    const std::vector<std::int16_t> values{1};
    Rng rng(0);
    BitWriter w;
    CHECK_THROWS_AS(encode_obfuscated(values, -1, rng, w), UsageError);
    CHECK_THROWS_AS(encode_obfuscated(values, 256, rng, w), UsageError);
}

TEST_CASE("decode_obfuscated needs at least one real value") {
    const std::vector<std::uint8_t> bytes{0};
    BitReader r(bytes);
    CHECK_THROWS_AS(decode_obfuscated(r, 0), UsageError);
}
