#include "lcp/csvio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace lcp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_cell(std::string_view cell, std::size_t row, std::size_t col) {
    const std::string_view t = trim(cell);
    double value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(value))
        throw ParseError("row " + std::to_string(row) + ", column " +
                             std::to_string(col) + ": cannot parse '" +
                             std::string(t) + "' as a finite number",
                         row, col);
    return value;
}

std::vector<std::string_view> split_row(std::string_view line, char delimiter,
                                        std::vector<std::string_view>& cells) {
    cells.clear();
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return cells;
}

void validate_config(const CsvConfig& cfg) {
    if (cfg.value_columns.empty())
        throw UsageError("csv config: no value columns");
    if (cfg.value_columns.size() != cfg.specs.size())
        throw UsageError("csv config: " + std::to_string(cfg.value_columns.size()) +
                         " value columns but " + std::to_string(cfg.specs.size()) +
                         " channel specs");
    std::vector<std::size_t> cols = cfg.value_columns;
    if (cfg.timestamp_column)
        cols.push_back(*cfg.timestamp_column);
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
        throw UsageError("csv config: column indices must be distinct");
    for (const auto& spec : cfg.specs)
        validate_spec(spec);
    if (cfg.rate_hz && *cfg.rate_hz <= 0)
        throw UsageError("csv config: rate must be positive");
    if (!cfg.timestamp_column && !cfg.rate_hz)
        throw UsageError("csv config: need a timestamp column or a declared rate");
    if (!cfg.timestamp_column && !cfg.t0_s)
        throw UsageError("csv config: need a timestamp column or a declared t0");
}

}  // namespace

std::uint32_t rate_to_mHz(double rate_hz) {
    const auto mHz = std::llround(rate_hz * 1000.0);
    if (mHz < 1 || mHz > 0xFFFFFFFFll)
        throw UsageError("rate out of range: " + std::to_string(rate_hz) + " Hz");
    return std::uint32_t(mHz);
}

std::vector<ChannelSpec> default_channel_specs() {
    return {
        {"V", 2, false},
        {"I", 2, false},
        {"P", 0, false},
        {"Q", 0, false},
    };
}

ParsedCsv parse_csv(std::istream& in, const CsvConfig& cfg) {
    validate_config(cfg);

    std::size_t max_col = cfg.value_columns.empty() ? 0 : *std::max_element(
        cfg.value_columns.begin(), cfg.value_columns.end());
    if (cfg.timestamp_column)
        max_col = std::max(max_col, *cfg.timestamp_column);

    ParsedCsv result;
    result.channels.resize(cfg.value_columns.size());

    std::vector<std::int64_t> timestamps_us;
    std::vector<std::string_view> cells;
    std::string line;
    std::size_t row = 0;
    std::size_t expected_cells = 0;
    bool first_data_row = true;

    while (std::getline(in, line)) {
        ++row;
        if (cfg.has_header && row == 1)
            continue;
        // A trailing newline leaves a final empty line; skip blank lines.
        if (trim(line).empty())
            continue;

        split_row(line, cfg.delimiter, cells);
        if (first_data_row) {
            expected_cells = cells.size();
            first_data_row = false;
        } else if (cells.size() != expected_cells) {
            throw ParseError("row " + std::to_string(row) + ": has " +
                                 std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(expected_cells),
                             row, cells.size());
        }
        if (cells.size() <= max_col)
            throw ParseError("row " + std::to_string(row) + ": needs at least " +
                                 std::to_string(max_col + 1) + " cells",
                             row, cells.size());

        if (cfg.timestamp_column) {
            const double t =
                parse_cell(cells[*cfg.timestamp_column], row, *cfg.timestamp_column + 1);
            timestamps_us.push_back(std::llround(t * 1e6));
        }
        for (std::size_t c = 0; c < cfg.value_columns.size(); ++c) {
            const std::size_t col = cfg.value_columns[c];
            result.channels[c].push_back(parse_cell(cells[col], row, col + 1));
        }
    }

    if (result.channels[0].empty())
        throw ParseError("no data rows", row, 0);

    if (cfg.timestamp_column) {
        if (timestamps_us[0] < 0)
            throw ParseError("first timestamp is negative", 1, *cfg.timestamp_column + 1);
        result.t0_us = std::uint64_t(timestamps_us[0]);
    } else {
        result.t0_us = std::uint64_t(std::llround(*cfg.t0_s * 1e6));
    }

    if (cfg.rate_hz) {
        result.sample_rate_mHz = rate_to_mHz(*cfg.rate_hz);
    } else {
        if (timestamps_us.size() < 2)
            throw UsageError("cannot infer the sample rate from a single row; declare one");
        const std::int64_t dt = timestamps_us[1] - timestamps_us[0];
        if (dt <= 0)
            throw ParseError("timestamps do not increase", 2, *cfg.timestamp_column + 1);
        result.sample_rate_mHz = std::uint32_t(std::llround(1e9 / double(dt)));
    }

    if (cfg.timestamp_column && timestamps_us.size() >= 2) {
        const double period_us = 1e9 / double(result.sample_rate_mHz);
        for (std::size_t i = 1; i < timestamps_us.size(); ++i) {
            const double dt = double(timestamps_us[i] - timestamps_us[i - 1]);
            if (std::abs(dt - period_us) > 0.01 * period_us)
                ++result.spacing_warnings;
        }
    }

    return result;
}

ParsedCsv parse_csv(std::string_view text, const CsvConfig& cfg) {
    std::istringstream in{std::string(text)};
    return parse_csv(in, cfg);
}

std::string format_fixed(std::int64_t scaled, int decimal_places) {
    const std::int64_t scale = pow10i(decimal_places);
    const bool negative = scaled < 0;
    const std::uint64_t mag = negative ? std::uint64_t(-(scaled + 1)) + 1
                                       : std::uint64_t(scaled);
    const std::uint64_t whole = mag / std::uint64_t(scale);
    const std::uint64_t frac = mag % std::uint64_t(scale);

    std::string out;
    if (negative)
        out.push_back('-');
    out += std::to_string(whole);
    if (decimal_places > 0) {
        std::string f = std::to_string(frac);
        out.push_back('.');
        out.append(std::size_t(decimal_places) - f.size(), '0');
        out += f;
    }
    return out;
}

void emit_csv(std::ostream& out, const ContainerHeader& header,
              std::span<const std::vector<std::int16_t>> channels,
              bool write_header, char delimiter) {
    if (channels.size() != header.channels.size())
        throw UsageError("emit_csv: header and data channel counts differ");
    const std::size_t count = channels.empty() ? 0 : channels[0].size();
    for (const auto& ch : channels)
        if (ch.size() != count)
            throw UsageError("emit_csv: channels have different lengths");
    for (const auto& m : header.channels)
        if (m.name.find(delimiter) != std::string::npos ||
            m.name.find('\n') != std::string::npos)
            throw UsageError("emit_csv: channel name '" + m.name +
                             "' cannot appear in a CSV header");

    std::string line;
    if (write_header) {
        line = "t";
        for (const auto& m : header.channels) {
            line.push_back(delimiter);
            line += m.name;
        }
        line.push_back('\n');
        out.write(line.data(), std::streamsize(line.size()));
    }

    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t t_us = timestamp_of(i, header);
        // seconds with 2 decimals == centiseconds, rounded half up
        line = format_fixed(std::int64_t((t_us + 5000) / 10000), 2);
        for (std::size_t c = 0; c < channels.size(); ++c) {
            line.push_back(delimiter);
            line += format_fixed(channels[c][i], header.channels[c].decimal_places);
        }
        line.push_back('\n');
        out.write(line.data(), std::streamsize(line.size()));
    }
}

std::size_t csv_size(std::string_view text) {
    std::size_t crlf = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i)
        if (text[i] == '\r' && text[i + 1] == '\n')
            ++crlf;
    return text.size() - crlf;
}

}  // namespace lcp
