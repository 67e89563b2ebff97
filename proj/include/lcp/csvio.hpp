#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcp/container.hpp"
#include "lcp/quantize.hpp"

namespace lcp {

// V, I, P, Q with 2, 2, 0, 0 decimal places.
std::vector<ChannelSpec> default_channel_specs();

// Column mapping and format options for measurement CSVs.
struct CsvConfig {
    bool has_header = true;
    char delimiter = ',';
    std::optional<std::size_t> timestamp_column = std::size_t{0};
    std::vector<std::size_t> value_columns = {1, 2, 3, 4};
    std::vector<ChannelSpec> specs = default_channel_specs();
    std::optional<double> rate_hz;  // declared; inferred from timestamps when absent
    std::optional<double> t0_s;     // required when there is no timestamp column
};

struct ParsedCsv {
    std::uint64_t t0_us = 0;
    std::uint32_t sample_rate_mHz = 0;
    std::vector<std::vector<double>> channels;  // one per value column, equal lengths
    std::size_t spacing_warnings = 0;  // rows whose spacing is off the rate by >1%
};

// Streams rows out of `in`. A declared rate is validated against row spacing
// within +-1% (violations count as warnings, not failures); without one the
// rate is inferred from the first two timestamps.
ParsedCsv parse_csv(std::istream& in, const CsvConfig& cfg);
ParsedCsv parse_csv(std::string_view text, const CsvConfig& cfg);

// Writes "t,<names...>" rows: timestamps as seconds with 2 decimals, values
// fixed-point at each channel's declared precision.
void emit_csv(std::ostream& out, const ContainerHeader& header,
              std::span<const std::vector<std::int16_t>> channels,
              bool write_header = true, char delimiter = ',');

// "120.13" for (12013, 2); "1027" for (1027, 0).
std::string format_fixed(std::int64_t scaled, int decimal_places);

// 50 Hz -> 50000; UsageError outside (0, 2^32) mHz.
std::uint32_t rate_to_mHz(double rate_hz);

// Byte size with newlines normalized to LF (CRLF counts as one byte); the
// baseline of every compression ratio reported here.
std::size_t csv_size(std::string_view text);

}  // namespace lcp
