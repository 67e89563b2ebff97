#pragma once

#include <cstdint>
#include <string>

#include "lcp/errors.hpp"

namespace lcp {

inline constexpr std::int16_t kValueMin = -32768;
inline constexpr std::int16_t kValueMax = 32767;

// Per-channel storage policy: fixed decimal precision (scale 10^decimal_places)
// plus the optional round-to-multiples-of-5 pre-pass.
struct ChannelSpec {
    std::string name;
    int decimal_places = 0;  // [0,4]
    bool lca = false;
};

// 10^dp for dp in [0,4]; UsageError otherwise.
std::int32_t pow10i(int dp);

void validate_spec(const ChannelSpec& spec);

// Nearest multiple of 5. Integer residues are never 2.5, so |result - v| <= 2
// with no tie rule needed. Single exception: -32768 would round to the
// unrepresentable -32770 and returns -32765, the nearest in-range multiple.
std::int16_t lca_round(std::int16_t v) noexcept;

// round(x * 10^decimal_places), ties away from zero, then lca_round when
// spec.lca. Scaled values outside [-32768, 32767] throw OutOfRange unless
// `clamp` saturates them instead.
std::int16_t quantize(double x, const ChannelSpec& spec, bool clamp = false);

// v / 10^decimal_places.
double dequantize(std::int16_t v, const ChannelSpec& spec);

}  // namespace lcp
