#include "lcp/quantize.hpp"

#include <cmath>

namespace lcp {

std::int32_t pow10i(int dp) {
    static constexpr std::int32_t kPowers[5] = {1, 10, 100, 1000, 10000};
    if (dp < 0 || dp > 4)
        throw UsageError("decimal_places must be in [0,4], got " + std::to_string(dp));
    return kPowers[dp];
}

void validate_spec(const ChannelSpec& spec) {
    pow10i(spec.decimal_places);
    if (spec.name.size() > 255)
        throw UsageError("channel name longer than 255 bytes: " + spec.name);
}

std::int16_t lca_round(std::int16_t v) noexcept {
    if (v == kValueMin)
        return -32765;  // -32770 is not representable
    const int r = v % 5;  // sign follows v
    int out;
    if (r >= 3)
        out = v + (5 - r);
    else if (r <= -3)
        out = v - (5 + r);
    else
        out = v - r;
    return std::int16_t(out);
}

std::int16_t quantize(double x, const ChannelSpec& spec, bool clamp) {
    if (!std::isfinite(x))
        throw UsageError("quantize: input is not finite");
    validate_spec(spec);
    const double scaled = x * double(pow10i(spec.decimal_places));

    long long q;
    if (std::abs(scaled) < 4.0e9) {
        q = std::llround(scaled);  // ties away from zero
    } else {
        // Far outside the representable range; skip llround to avoid its
        // domain limits and go straight to the range handling below.
        q = scaled < 0 ? -4000000000LL : 4000000000LL;
    }

    if (q < kValueMin || q > kValueMax) {
        if (!clamp)
            throw OutOfRange("value " + std::to_string(x) + " scales to " +
                             std::to_string(q) + ", outside [-32768, 32767]");
        q = q < kValueMin ? kValueMin : kValueMax;
    }
    const auto v = std::int16_t(q);
    return spec.lca ? lca_round(v) : v;
}

double dequantize(std::int16_t v, const ChannelSpec& spec) {
    return double(v) / double(pow10i(spec.decimal_places));
}

}  // namespace lcp
