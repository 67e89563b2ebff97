#pragma once

#include <cmath>
#include <cstdint>

namespace lcp {

// splitmix64 stream: tiny and bit-identical on every platform, which the
// golden-file tests rely on. std::mt19937 would do, but the standard
// distributions on top of it are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint16_t next_u16() { return std::uint16_t(next_u64() & 0xFFFF); }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double next_exponential(double mean) {
        double u = next_double();
        if (u >= 1.0) u = 0.0;
        return -mean * std::log1p(-u);
    }

    // Box-Muller; the spare deviate is cached unscaled.
    double next_gaussian(double sd) {
        if (have_spare_) {
            have_spare_ = false;
            return spare_ * sd;
        }
        double u1 = next_double();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double u2 = next_double();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle) * sd;
    }

    // Independent stream for substream `index` of a user-facing seed.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
        Rng mixer(seed ^ (0xA0761D6478BD642Full * (index + 1)));
        return mixer.next_u64();
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace lcp
