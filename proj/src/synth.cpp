#include "lcp/synth.hpp"

#include <algorithm>
#include <cmath>

#include "lcp/rng.hpp"

namespace lcp {

namespace {

double peak_power(const ApplianceProfile& p) {
    double max_power = 0;
    for (const auto& s : p.states)
        max_power = std::max(max_power, s.power_w);
    if (p.states.size() > 1 && p.transient.overshoot_frac > 0) {
        // worst upward step: from the lowest state to the highest
        double min_power = p.states[0].power_w;
        for (const auto& s : p.states)
            min_power = std::min(min_power, s.power_w);
        max_power += p.transient.overshoot_frac * (max_power - min_power);
    }
    return max_power + 6.0 * p.noise_sd;
}

void validate_profile(const ApplianceProfile& p, double rate_hz) {
    if (p.states.empty())
        throw UsageError("profile '" + p.name + "' has no states");
    for (const auto& s : p.states) {
        if (s.power_w < 0)
            throw UsageError("profile '" + p.name + "' has a negative state power");
        if (s.dwell_mean_s <= 0)
            throw UsageError("profile '" + p.name + "' has a non-positive dwell mean");
        if (s.dwell_mean_s * rate_hz < double(p.transient.duration_samples))
            throw UsageError("profile '" + p.name +
                             "': dwell mean shorter than the transient");
    }
    if (p.transient.duration_samples < 0 || p.transient.overshoot_frac < 0)
        throw UsageError("profile '" + p.name + "' has a negative transient shape");
    if (p.noise_sd < 0)
        throw UsageError("profile '" + p.name + "' has a negative noise level");
}

std::vector<std::int16_t> generate_appliance(const ApplianceProfile& p,
                                             std::size_t samples, double rate_hz,
                                             std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::int16_t> out;
    out.reserve(samples);

    const auto noisy = [&](double power) {
        long long v = std::llround(power);
        if (p.noise_sd > 0)
            v += std::llround(rng.next_gaussian(p.noise_sd));
        return std::int16_t(std::clamp(v, (long long)kValueMin, (long long)kValueMax));
    };

    std::size_t state = 0;
    while (out.size() < samples) {
        // steady dwell in the current state
        const auto& st = p.states[state];
        const std::size_t dwell = std::max<std::size_t>(
            1, std::size_t(std::llround(rng.next_exponential(st.dwell_mean_s) * rate_hz)));
        for (std::size_t k = 0; k < dwell && out.size() < samples; ++k)
            out.push_back(noisy(st.power_w));
        if (out.size() >= samples || p.states.size() == 1)
            break;

        // transient ramp into the next state
        const std::size_t next = (state + 1) % p.states.size();
        const double from = st.power_w;
        const double to = p.states[next].power_w;
        const int T = p.transient.duration_samples;
        for (int s = 1; s <= T && out.size() < samples; ++s) {
            double level = from + (to - from) * double(s) / double(T);
            if (s == T && to > from)
                level = to + p.transient.overshoot_frac * (to - from);
            out.push_back(std::int16_t(std::clamp(
                std::llround(level), (long long)kValueMin, (long long)kValueMax)));
        }
        state = next;
    }
    // single-state profiles fill the remainder above; multi-state loops exit
    // mid-dwell or mid-transient once `samples` is reached
    while (out.size() < samples)
        out.push_back(noisy(p.states[state].power_w));
    return out;
}

}  // namespace

std::vector<ApplianceProfile> default_profiles() {
    const TransientShape compressor{15, 0.5};
    const TransientShape motor{10, 0.3};
    const TransientShape none{0, 0.0};
    const double noise = 0.25;
    return {
        {"kettle", {{1027, 60}}, none, noise},
        {"vacuum", {{1002, 60}}, none, noise},
        {"steamer", {{775, 60}}, none, noise},
        {"refrigerator", {{42, 60}, {124, 45}, {165, 30}}, compressor, noise},
        {"washing_machine", {{172, 40}, {250, 40}}, motor, noise},
    };
}

SynthResult generate(std::span<const ApplianceProfile> profiles, double duration_s,
                     double rate_hz, std::uint64_t seed) {
    if (profiles.empty())
        throw UsageError("generate: no profiles");
    if (duration_s <= 0 || rate_hz <= 0)
        throw UsageError("generate: duration and rate must be positive");
    for (const auto& p : profiles)
        validate_profile(p, rate_hz);

    double aggregate_peak = 0;
    for (const auto& p : profiles)
        aggregate_peak += peak_power(p);
    if (aggregate_peak > double(kValueMax))
        throw UsageError("generate: aggregate of profile peaks (" +
                         std::to_string(std::llround(aggregate_peak)) +
                         " W) can exceed 32767");

    const auto samples = std::size_t(std::llround(duration_s * rate_hz));
    if (samples == 0)
        throw UsageError("generate: duration too short for one sample");

    SynthResult result;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        result.channel_names.push_back(profiles[i].name);
        result.channels.push_back(
            generate_appliance(profiles[i], samples, rate_hz, Rng::derive_seed(seed, i)));
    }

    std::vector<std::int16_t> aggregate(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        int sum = 0;
        for (const auto& ch : result.channels)
            sum += ch[k];
        if (sum < kValueMin || sum > kValueMax)
            throw OutOfRange("aggregate sample exceeds the 16-bit range");
        aggregate[k] = std::int16_t(sum);
    }
    result.channel_names.push_back("aggregate");
    result.channels.push_back(std::move(aggregate));
    return result;
}

}  // namespace lcp
