#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcp/codec.hpp"
#include "lcp/csvio.hpp"

namespace lcp {

// Reference figures reported for the LIFTED household dataset; printed next
// to measured numbers for context, never asserted (that dataset is not
// bundled and these are specific to it).
struct ReferenceFigures {
    static constexpr double kLcpRatio = 39.90;
    static constexpr double kLcaRatio = 45.86;
    static constexpr double kGorillaRatio = 5.74;
    static constexpr double kZipRatio = 9.22;
    static constexpr double kZeroBitShare = 0.91;
    static constexpr double kMeanBitsPerValue = 1.768;
    static constexpr double kFreshClassMeanBits = 13.919;
    static constexpr double kValuesPerSecond = 1837982.0;
};

struct BenchOptions {
    bool lca = false;
    int obfuscation_count = 0;
    std::uint64_t seed = 0;
    bool clamp = false;
    bool with_deflate = true;
    bool with_throughput = true;
    std::size_t throughput_min_values = 1'000'000;
};

struct BenchReport {
    std::size_t csv_bytes = 0;
    std::size_t raw16_bytes = 0;
    std::size_t lcp_payload_bytes = 0;  // byte-rounded payloads, header excluded
    std::size_t lcp_file_bytes = 0;     // whole container
    std::optional<std::size_t> deflate_bytes;  // host DEFLATE on the CSV bytes
    double ratio_vs_csv = 0;            // csv_bytes / lcp_file_bytes
    double bits_per_value = 0;          // codec bits (8-bit count fields excluded)
                                        // per original value; junk included when on
    std::uint64_t value_count = 0;      // original values across all channels
    std::uint64_t channel_count = 0;
    bool obfuscated = false;
    EncodeStats classes;                // plain-codec histogram over the data values
    std::optional<double> encode_values_per_s;
    std::optional<double> decode_values_per_s;
    std::string cpu_model;
};

// Control-class histogram of a plain codec pass over `values` (the stream's
// first value is not classified).
EncodeStats class_histogram(std::span<const std::int16_t> values);

// Host DEFLATE-class compressed size of `bytes`; nullopt when unavailable.
std::optional<std::size_t> deflate_size(std::string_view bytes);

// Compress, decompress, verify the roundtrip (hard failure on mismatch),
// then measure everything in the report.
BenchReport run_bench(std::string_view csv_text, const CsvConfig& cfg,
                      const BenchOptions& opt);

// Human-readable table with the reference lines.
std::string render_report(const BenchReport& report);

// Just the control-class table (shared by the bench report and `verify`
// / `stats` output).
std::string render_class_histogram(const EncodeStats& stats);

}  // namespace lcp
