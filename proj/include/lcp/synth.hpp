#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcp/quantize.hpp"

namespace lcp {

struct ApplianceState {
    double power_w = 0;
    double dwell_mean_s = 0;  // exponential dwell mean in this state
};

struct TransientShape {
    int duration_samples = 0;
    double overshoot_frac = 0;  // fraction of the power step; upward steps only
};

// Steady-state/transient load model of one appliance: it cycles through its
// states in order, holding each for an exponential dwell, with a linear ramp
// plus a single-sample overshoot spike at every upward state change. Steady
// samples carry integer-rounded Gaussian noise.
struct ApplianceProfile {
    std::string name;
    std::vector<ApplianceState> states;
    TransientShape transient;
    double noise_sd = 0;  // in quantized (1 W) units
};

struct SynthResult {
    std::vector<std::string> channel_names;              // appliances..., "aggregate"
    std::vector<std::vector<std::int16_t>> channels;     // same order
};

// Five appliances with their common state powers in watts: kettle {1027},
// vacuum {1002}, steamer {775}, refrigerator {42, 124, 165}, washing
// machine {172, 250}. Noise defaults keep roughly nine in ten consecutive
// samples identical.
std::vector<ApplianceProfile> default_profiles();

// Deterministic under (profiles, duration, rate, seed). The aggregate is the
// exact elementwise integer sum of the appliance streams.
SynthResult generate(std::span<const ApplianceProfile> profiles, double duration_s,
                     double rate_hz, std::uint64_t seed);

}  // namespace lcp
