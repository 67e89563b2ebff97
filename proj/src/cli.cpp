#include "lcp/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcp/bench.hpp"
#include "lcp/container.hpp"
#include "lcp/csvio.hpp"
#include "lcp/errors.hpp"
#include "lcp/quantize.hpp"
#include "lcp/synth.hpp"

namespace lcp {
namespace {

using nlohmann::json;

std::string read_all(std::istream& s) {
    std::ostringstream buf;
    buf << s.rdbuf();
    if (s.bad())
        throw IoError("read from stream failed");
    return std::move(buf).str();
}

// "-" means the session's stdin.
std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-")
        return read_all(in);
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for reading");
    return read_all(f);
}

// "-" means the session's stdout.
void write_output(const std::string& path, std::ostream& out, std::string_view bytes) {
    if (path == "-") {
        out.write(bytes.data(), std::streamsize(bytes.size()));
        out.flush();
        if (!out)
            throw IoError("write to stdout failed");
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    f.write(bytes.data(), std::streamsize(bytes.size()));
    f.flush();
    if (!f)
        throw IoError("write to '" + path + "' failed");
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

int parse_small_int(const std::string& token, const char* flag) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw UsageError(std::string(flag) + ": '" + token + "' is not an integer");
    return v;
}

// The measurement defaults: volts and amps keep two decimals, watts and vars
// are stored whole.
int default_decimals(std::string_view name) {
    if (name == "V" || name == "I")
        return 2;
    if (name == "P" || name == "Q")
        return 0;
    return 2;
}

// CSV-shaped flags shared by compress, verify and bench --csv.
struct CsvFlags {
    std::string columns = "t,V,I,P,Q";
    std::string decimals;  // empty -> per-name defaults
    bool no_header = false;
    std::string delimiter = ",";
    std::optional<double> rate_hz;
    std::optional<double> t0_s;
};

void add_csv_flags(CLI::App* cmd, CsvFlags& f) {
    cmd->add_option("--columns", f.columns,
                    "column roles, comma-separated: 't' = timestamp, '_' = skip, "
                    "anything else names a channel")
        ->capture_default_str();
    cmd->add_option("--decimals", f.decimals,
                    "decimal places per channel, one value or a comma-separated "
                    "list (default: 2 for V/I, 0 for P/Q, 2 otherwise)");
    cmd->add_flag("--no-header", f.no_header, "input has no header row");
    cmd->add_option("--delimiter", f.delimiter, "field delimiter")
        ->capture_default_str();
    cmd->add_option("--rate", f.rate_hz,
                    "sample rate in Hz (default: inferred from the first two "
                    "timestamps)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--t0", f.t0_s,
                    "first-sample time, seconds since the epoch (default: the "
                    "first timestamp; required when there is no 't' column)")
        ->check(CLI::NonNegativeNumber);
}

CsvConfig build_csv_config(const CsvFlags& f) {
    CsvConfig cfg;
    cfg.has_header = !f.no_header;
    if (f.delimiter.size() != 1)
        throw UsageError("--delimiter: must be a single character");
    cfg.delimiter = f.delimiter[0];
    cfg.rate_hz = f.rate_hz;
    cfg.t0_s = f.t0_s;

    cfg.timestamp_column.reset();
    cfg.value_columns.clear();
    cfg.specs.clear();
    const auto tokens = split(f.columns, ',');
    std::vector<std::string> names;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto& tok = tokens[i];
        if (tok == "t") {
            if (cfg.timestamp_column)
                throw UsageError("--columns: more than one 't' column");
            cfg.timestamp_column = i;
        } else if (tok == "_") {
            continue;
        } else if (tok.empty()) {
            throw UsageError("--columns: empty name at position " +
                             std::to_string(i + 1));
        } else {
            cfg.value_columns.push_back(i);
            names.push_back(tok);
        }
    }
    if (names.empty())
        throw UsageError("--columns: no channel columns named");

    std::vector<int> dps;
    if (f.decimals.empty()) {
        dps.reserve(names.size());
        for (const auto& name : names)
            dps.push_back(default_decimals(name));
    } else {
        for (const auto& tok : split(f.decimals, ','))
            dps.push_back(parse_small_int(tok, "--decimals"));
        if (dps.size() == 1)
            dps.assign(names.size(), dps[0]);
        if (dps.size() != names.size())
            throw UsageError("--decimals: " + std::to_string(dps.size()) +
                             " values for " + std::to_string(names.size()) +
                             " channels");
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        ChannelSpec spec{names[i], dps[i], false};
        validate_spec(spec);
        cfg.specs.push_back(std::move(spec));
    }
    return cfg;
}

std::vector<ChannelData> quantize_channels(const ParsedCsv& parsed,
                                           const CsvConfig& cfg, bool clamp) {
    std::vector<ChannelData> out;
    out.reserve(parsed.channels.size());
    for (std::size_t c = 0; c < parsed.channels.size(); ++c) {
        ChannelData ch;
        ch.spec = cfg.specs[c];
        ch.values.reserve(parsed.channels[c].size());
        for (std::size_t i = 0; i < parsed.channels[c].size(); ++i) {
            try {
                ch.values.push_back(quantize(parsed.channels[c][i], ch.spec, clamp));
            } catch (const OutOfRange& e) {
                throw OutOfRange(std::string(e.what()) + " (channel '" +
                                 ch.spec.name + "', data row " +
                                 std::to_string(i + 1) + ")");
            }
        }
        out.push_back(std::move(ch));
    }
    return out;
}

// Codec bits per original value, with the fixed 8-bit junk-count fields
// taken out. Junk values themselves stay in: they are real payload cost.
double bits_per_value(const ContainerHeader& header) {
    std::uint64_t bits = 0;
    std::uint64_t values = 0;
    for (const auto& ch : header.channels) {
        bits += ch.payload_bit_count;
        values += ch.value_count;
    }
    bits -= 8 * header.channels.size();
    return values == 0 ? 0.0 : double(bits) / double(values);
}

json classes_json(const EncodeStats& stats) {
    static constexpr const char* kKeys[kCodeClassCount] = {
        "repeat", "reuse_both", "reuse_leading", "reuse_trailing", "fresh"};
    json counts, bits;
    for (int i = 0; i < kCodeClassCount; ++i) {
        counts[kKeys[std::size_t(i)]] = stats.count[std::size_t(i)];
        bits[kKeys[std::size_t(i)]] = stats.bits[std::size_t(i)];
    }
    return json{{"counts", counts}, {"bits", bits}};
}

json header_json(const ContainerHeader& header) {
    json channels = json::array();
    for (const auto& ch : header.channels) {
        channels.push_back(json{{"name", ch.name},
                                {"decimal_places", ch.decimal_places},
                                {"lca", ch.lca},
                                {"value_count", ch.value_count},
                                {"payload_len", ch.payload_len},
                                {"payload_bit_count", ch.payload_bit_count}});
    }
    return json{{"magic", "LCP1"},
                {"version", header.version},
                {"flags", header.flags},
                {"channel_count", header.channels.size()},
                {"sample_rate_mHz", header.sample_rate_mHz},
                {"t0_us", header.t0_us},
                {"header_size", header.header_size()},
                {"channels", channels}};
}

std::string rate_string(std::uint32_t mHz) {
    std::ostringstream s;
    s << format_fixed(mHz, 3) << " Hz";
    return s.str();
}

std::string epoch_string(std::uint64_t t_us) {
    std::ostringstream s;
    s << t_us / 1'000'000 << '.' << std::setw(6) << std::setfill('0')
      << t_us % 1'000'000 << " s";
    return s.str();
}

struct CompressFlags {
    std::string input;
    std::string output;
    CsvFlags csv;
    bool lca = false;
    int obfuscate = 0;
    std::uint64_t seed = 0;
    bool clamp = false;
    bool as_json = false;
};

int do_compress(const CompressFlags& f, std::istream& in, std::ostream& out,
                std::ostream& err) {
    const std::string text = read_input(f.input, in);
    CsvConfig cfg = build_csv_config(f.csv);
    for (auto& spec : cfg.specs)
        spec.lca = f.lca;

    const ParsedCsv parsed = parse_csv(text, cfg);
    const auto channels = quantize_channels(parsed, cfg, f.clamp);
    const auto bytes = write_container(
        parsed.sample_rate_mHz, parsed.t0_us, channels,
        ContainerWriteOptions{f.obfuscate, f.seed});
    write_output(f.output, out,
                 std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                  bytes.size()));

    // The binary owns stdout when the output is "-"; the summary moves aside.
    std::ostream& s = (f.output == "-") ? err : out;
    const ContainerHeader header = read_header(bytes);
    const std::size_t csv_bytes = csv_size(text);
    const double ratio = double(csv_bytes) / double(bytes.size());
    const std::uint64_t values =
        header.channels.size() * header.channels.front().value_count;

    if (f.as_json) {
        json j{{"csv_bytes", csv_bytes},
               {"file_bytes", bytes.size()},
               {"header_bytes", header.header_size()},
               {"payload_bytes", header.total_payload_len()},
               {"ratio_vs_csv", ratio},
               {"bits_per_value", bits_per_value(header)},
               {"value_count", values},
               {"channel_count", header.channels.size()},
               {"lca", f.lca},
               {"obfuscation_count", f.obfuscate},
               {"spacing_warnings", parsed.spacing_warnings}};
        s << j.dump(2) << "\n";
        return exit_code::kOk;
    }

    s.setf(std::ios::fixed);
    s.precision(3);
    s << "csv bytes           " << csv_bytes << "\n";
    s << "bin bytes           " << bytes.size() << " (header "
      << header.header_size() << ", payloads " << header.total_payload_len()
      << ")\n";
    s << "ratio vs csv        " << ratio << "\n";
    s << "bits per value      " << bits_per_value(header)
      << (f.obfuscate > 0 ? " (includes junk-value overhead)" : "") << "\n";
    s << "values              " << values << " across " << header.channels.size()
      << " channel(s)\n";
    if (parsed.spacing_warnings > 0)
        s << "warning: " << parsed.spacing_warnings
          << " row(s) deviate >1% from the sample rate\n";
    return exit_code::kOk;
}

struct DecompressFlags {
    std::string input;
    std::string output;
    bool no_header = false;
    std::string delimiter = ",";
};

int do_decompress(const DecompressFlags& f, std::istream& in, std::ostream& out) {
    if (f.delimiter.size() != 1)
        throw UsageError("--delimiter: must be a single character");
    const std::string bytes = read_input(f.input, in);
    const auto decoded = read_container(std::span(
        reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
    std::ostringstream csv;
    emit_csv(csv, decoded.header, decoded.channels, !f.no_header, f.delimiter[0]);
    write_output(f.output, out, csv.view());
    return exit_code::kOk;
}

struct VerifyFlags {
    std::string input;
    CsvFlags csv;
    bool lca = false;
    int obfuscate = 0;
    std::uint64_t seed = 0;
    bool clamp = false;
    bool as_json = false;
};

int do_verify(const VerifyFlags& f, std::istream& in, std::ostream& out,
              std::ostream& err) {
    const std::string text = read_input(f.input, in);
    CsvConfig cfg = build_csv_config(f.csv);
    for (auto& spec : cfg.specs)
        spec.lca = f.lca;

    const ParsedCsv parsed = parse_csv(text, cfg);
    // Under --lca the reference is the rounded stream: the codec is lossless,
    // the rounding pre-pass is not meant to be.
    const auto channels = quantize_channels(parsed, cfg, f.clamp);
    const auto bytes = write_container(
        parsed.sample_rate_mHz, parsed.t0_us, channels,
        ContainerWriteOptions{f.obfuscate, f.seed});
    const auto decoded = read_container(bytes);

    for (std::size_t c = 0; c < channels.size(); ++c) {
        for (std::size_t i = 0; i < channels[c].values.size(); ++i) {
            if (decoded.channels[c][i] == channels[c].values[i])
                continue;
            const std::size_t file_row = i + 1 + (cfg.has_header ? 1 : 0);
            const std::size_t file_col = cfg.value_columns[c] + 1;
            if (f.as_json) {
                json j{{"ok", false},
                       {"first_mismatch",
                        json{{"row", file_row},
                             {"column", file_col},
                             {"channel", channels[c].spec.name},
                             {"expected", channels[c].values[i]},
                             {"actual", decoded.channels[c][i]}}}};
                out << j.dump(2) << "\n";
            }
            err << "verify: mismatch at row " << file_row << ", column "
                << file_col << " (channel '" << channels[c].spec.name
                << "'): wrote " << channels[c].values[i] << ", read back "
                << decoded.channels[c][i] << "\n";
            return exit_code::kMismatch;
        }
    }

    EncodeStats classes;
    for (const auto& ch : channels)
        classes += class_histogram(ch.values);
    const double bpv = bits_per_value(decoded.header);
    const std::uint64_t values =
        channels.size() * channels.front().values.size();

    if (f.as_json) {
        json j{{"ok", true},
               {"value_count", values},
               {"channel_count", channels.size()},
               {"bits_per_value", bpv},
               {"lca", f.lca},
               {"obfuscation_count", f.obfuscate},
               {"classes", classes_json(classes)},
               {"spacing_warnings", parsed.spacing_warnings}};
        out << j.dump(2) << "\n";
        return exit_code::kOk;
    }

    out << "OK: " << values << " value(s) across " << channels.size()
        << " channel(s) round-trip losslessly"
        << (f.lca ? " (after LCA rounding)" : "") << "\n";
    out.setf(std::ios::fixed);
    out.precision(3);
    out << "bits per value      " << bpv
        << (f.obfuscate > 0 ? " (includes junk-value overhead)" : "") << "\n";
    out << render_class_histogram(classes);
    return exit_code::kOk;
}

int do_inspect(const std::string& input, std::istream& in, std::ostream& out) {
    const std::string bytes = read_input(input, in);
    const ContainerHeader header = read_header(std::span(
        reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
    out << header_json(header).dump(2) << "\n";
    return exit_code::kOk;
}

int do_stats(const std::string& input, bool as_json, std::istream& in,
             std::ostream& out) {
    const std::string bytes = read_input(input, in);
    const auto decoded = read_container(std::span(
        reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
    const ContainerHeader& header = decoded.header;

    EncodeStats totals;
    std::vector<EncodeStats> per_channel;
    per_channel.reserve(decoded.channels.size());
    for (const auto& values : decoded.channels) {
        per_channel.push_back(class_histogram(values));
        totals += per_channel.back();
    }

    if (as_json) {
        json channels = json::array();
        for (std::size_t c = 0; c < header.channels.size(); ++c) {
            const auto& ch = header.channels[c];
            channels.push_back(
                json{{"name", ch.name},
                     {"decimal_places", ch.decimal_places},
                     {"lca", ch.lca},
                     {"value_count", ch.value_count},
                     {"payload_len", ch.payload_len},
                     {"payload_bit_count", ch.payload_bit_count},
                     {"bits_per_value", double(ch.payload_bit_count - 8) /
                                            double(ch.value_count)},
                     {"classes", classes_json(per_channel[c])}});
        }
        json j{{"file_bytes", bytes.size()},
               {"header_bytes", header.header_size()},
               {"sample_rate_mHz", header.sample_rate_mHz},
               {"t0_us", header.t0_us},
               {"value_count_per_channel", header.channels.front().value_count},
               {"channels", channels},
               {"classes", classes_json(totals)}};
        out << j.dump(2) << "\n";
        return exit_code::kOk;
    }

    out.setf(std::ios::fixed);
    out.precision(3);
    out << "file bytes          " << bytes.size() << " (header "
        << header.header_size() << ", payloads " << header.total_payload_len()
        << ")\n";
    out << "sample rate         " << rate_string(header.sample_rate_mHz) << "\n";
    out << "t0                  " << epoch_string(header.t0_us) << "\n";
    out << "values per channel  " << header.channels.front().value_count << "\n";
    for (std::size_t c = 0; c < header.channels.size(); ++c) {
        const auto& ch = header.channels[c];
        out << "channel '" << ch.name << "': dp " << int(ch.decimal_places)
            << (ch.lca ? ", lca" : "") << ", " << ch.payload_len << " bytes ("
            << ch.payload_bit_count << " bits), "
            << double(ch.payload_bit_count - 8) / double(ch.value_count)
            << " bits/value\n";
    }
    out << render_class_histogram(totals);
    return exit_code::kOk;
}

struct SynthFlags {
    std::string output;
    double duration_s = 600;
    double rate_hz = 50;
    std::uint64_t seed = 0;
    double t0_s = 0;
};

// The synthetic header carries the metadata emit_csv needs; every synth
// channel is whole watts.
ContainerHeader synth_header(const SynthResult& result, double rate_hz,
                             double t0_s, std::uint64_t value_count) {
    ContainerHeader header;
    header.sample_rate_mHz = rate_to_mHz(rate_hz);
    header.t0_us = std::uint64_t(std::llround(t0_s * 1e6));
    for (const auto& name : result.channel_names) {
        ChannelMeta meta;
        meta.name = name;
        meta.decimal_places = 0;
        meta.value_count = value_count;
        header.channels.push_back(std::move(meta));
    }
    return header;
}

int do_synth(const SynthFlags& f, std::ostream& out, std::ostream& err) {
    const SynthResult result =
        generate(default_profiles(), f.duration_s, f.rate_hz, f.seed);
    const auto header = synth_header(result, f.rate_hz, f.t0_s,
                                     result.channels.front().size());
    std::ostringstream csv;
    emit_csv(csv, header, result.channels);
    write_output(f.output, out, csv.view());

    std::ostream& s = (f.output == "-") ? err : out;
    s << "wrote " << result.channels.front().size() << " samples x "
      << result.channels.size() << " channels at " << rate_string(header.sample_rate_mHz)
      << " (seed " << f.seed << ")\n";
    return exit_code::kOk;
}

struct BenchFlags {
    std::string csv_path;
    bool synth = false;
    double duration_s = 600;
    double rate_hz = 50;
    std::uint64_t synth_seed = 0;
    CsvFlags csv;
    bool lca = false;
    int obfuscate = 0;
    std::uint64_t seed = 0;
    bool clamp = false;
    bool no_deflate = false;
    bool no_throughput = false;
    bool as_json = false;
};

json report_json(const BenchReport& r) {
    json j{{"csv_bytes", r.csv_bytes},
           {"raw16_bytes", r.raw16_bytes},
           {"lcp_payload_bytes", r.lcp_payload_bytes},
           {"lcp_file_bytes", r.lcp_file_bytes},
           {"deflate_bytes", r.deflate_bytes ? json(*r.deflate_bytes) : json(nullptr)},
           {"ratio_vs_csv", r.ratio_vs_csv},
           {"bits_per_value", r.bits_per_value},
           {"value_count", r.value_count},
           {"channel_count", r.channel_count},
           {"obfuscated", r.obfuscated},
           {"classes", classes_json(r.classes)},
           {"encode_values_per_s",
            r.encode_values_per_s ? json(*r.encode_values_per_s) : json(nullptr)},
           {"decode_values_per_s",
            r.decode_values_per_s ? json(*r.decode_values_per_s) : json(nullptr)},
           {"cpu_model", r.cpu_model}};
    json ref{{"dataset", "LIFTED household dataset (reported, not measured here)"},
             {"lcp_ratio", ReferenceFigures::kLcpRatio},
             {"lca_ratio", ReferenceFigures::kLcaRatio},
             {"gorilla_ratio", ReferenceFigures::kGorillaRatio},
             {"zip_ratio", ReferenceFigures::kZipRatio},
             {"zero_bit_share", ReferenceFigures::kZeroBitShare},
             {"mean_bits_per_value", ReferenceFigures::kMeanBitsPerValue},
             {"fresh_class_mean_bits", ReferenceFigures::kFreshClassMeanBits},
             {"values_per_second", ReferenceFigures::kValuesPerSecond}};
    j["reference"] = ref;
    return j;
}

int do_bench(const BenchFlags& f, std::istream& in, std::ostream& out) {
    std::string text;
    CsvConfig cfg;
    if (!f.csv_path.empty()) {
        text = read_input(f.csv_path, in);
        cfg = build_csv_config(f.csv);
    } else {
        const SynthResult result =
            generate(default_profiles(), f.duration_s, f.rate_hz, f.synth_seed);
        const auto header =
            synth_header(result, f.rate_hz, 0, result.channels.front().size());
        std::ostringstream csv;
        emit_csv(csv, header, result.channels);
        text = std::move(csv).str();

        cfg = CsvConfig{};
        cfg.timestamp_column = 0;
        cfg.value_columns.clear();
        cfg.specs.clear();
        for (std::size_t i = 0; i < result.channel_names.size(); ++i) {
            cfg.value_columns.push_back(i + 1);
            cfg.specs.push_back(ChannelSpec{result.channel_names[i], 0, false});
        }
        cfg.rate_hz = f.rate_hz;
    }

    BenchOptions opt;
    opt.lca = f.lca;
    opt.obfuscation_count = f.obfuscate;
    opt.seed = f.seed;
    opt.clamp = f.clamp;
    opt.with_deflate = !f.no_deflate;
    opt.with_throughput = !f.no_throughput;
    const BenchReport report = run_bench(text, cfg, opt);

    if (f.as_json)
        out << report_json(report).dump(2) << "\n";
    else
        out << render_report(report);
    return exit_code::kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"XOR-delta compression for fixed-precision electrical load "
                 "measurements"};
    app.name("lcp");
    app.require_subcommand(1);

    CompressFlags compress;
    auto* c_cmd = app.add_subcommand("compress", "pack a measurement CSV into a .bin container");
    c_cmd->add_option("input", compress.input, "CSV path, or - for stdin")->required();
    c_cmd->add_option("output", compress.output, "container path, or - for stdout")->required();
    add_csv_flags(c_cmd, compress.csv);
    c_cmd->add_flag("--lca", compress.lca, "round every value to a multiple of 5 quantized units first");
    c_cmd->add_option("--obfuscate", compress.obfuscate, "junk values spliced into each channel")
        ->check(CLI::Range(0, 255));
    c_cmd->add_option("--seed", compress.seed, "seed for the junk generator");
    c_cmd->add_flag("--clamp", compress.clamp, "saturate out-of-range values instead of failing");
    c_cmd->add_flag("--json", compress.as_json, "machine-readable summary");

    DecompressFlags decompress;
    auto* d_cmd = app.add_subcommand("decompress", "unpack a .bin container back to CSV");
    d_cmd->add_option("input", decompress.input, "container path, or - for stdin")->required();
    d_cmd->add_option("output", decompress.output, "CSV path, or - for stdout")->required();
    d_cmd->add_flag("--no-header", decompress.no_header, "omit the header row");
    d_cmd->add_option("--delimiter", decompress.delimiter, "field delimiter")
        ->capture_default_str();

    VerifyFlags verify;
    auto* v_cmd = app.add_subcommand("verify", "compress and decompress in memory, compare, report");
    v_cmd->add_option("input", verify.input, "CSV path, or - for stdin")->required();
    add_csv_flags(v_cmd, verify.csv);
    v_cmd->add_flag("--lca", verify.lca, "verify against the LCA-rounded values, not the originals");
    v_cmd->add_option("--obfuscate", verify.obfuscate, "junk values spliced into each channel")
        ->check(CLI::Range(0, 255));
    v_cmd->add_option("--seed", verify.seed, "seed for the junk generator");
    v_cmd->add_flag("--clamp", verify.clamp, "saturate out-of-range values instead of failing");
    v_cmd->add_flag("--json", verify.as_json, "machine-readable report");

    std::string inspect_input;
    auto* i_cmd = app.add_subcommand("inspect", "dump a container header as JSON");
    i_cmd->add_option("input", inspect_input, "container path, or - for stdin")->required();

    std::string stats_input;
    bool stats_json = false;
    auto* s_cmd = app.add_subcommand("stats", "decode a container and report per-channel coding stats");
    s_cmd->add_option("input", stats_input, "container path, or - for stdin")->required();
    s_cmd->add_flag("--json", stats_json, "machine-readable report");

    SynthFlags synth;
    auto* y_cmd = app.add_subcommand("synth", "generate a synthetic five-appliance load CSV");
    y_cmd->add_option("output", synth.output, "CSV path, or - for stdout")->required();
    y_cmd->add_option("--duration", synth.duration_s, "seconds of data")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    y_cmd->add_option("--rate", synth.rate_hz, "sample rate in Hz")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    y_cmd->add_option("--seed", synth.seed, "generator seed")->capture_default_str();
    y_cmd->add_option("--t0", synth.t0_s, "first-sample time, seconds since the epoch")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    BenchFlags bench;
    auto* b_cmd = app.add_subcommand("bench", "measure sizes, ratios and throughput");
    auto* b_csv = b_cmd->add_option("--csv", bench.csv_path, "benchmark this CSV file");
    auto* b_synth = b_cmd->add_flag("--synth", bench.synth,
                                    "benchmark generated data (the default)");
    b_csv->excludes(b_synth);
    b_cmd->add_option("--duration", bench.duration_s, "seconds of generated data")
        ->capture_default_str()
        ->check(CLI::PositiveNumber)
        ->excludes(b_csv);
    b_cmd->add_option("--synth-rate", bench.rate_hz, "generated sample rate in Hz")
        ->capture_default_str()
        ->check(CLI::PositiveNumber)
        ->excludes(b_csv);
    b_cmd->add_option("--synth-seed", bench.synth_seed, "generator seed")
        ->capture_default_str()
        ->excludes(b_csv);
    add_csv_flags(b_cmd, bench.csv);
    b_cmd->add_flag("--lca", bench.lca, "benchmark the LCA variant");
    b_cmd->add_option("--obfuscate", bench.obfuscate, "junk values spliced into each channel")
        ->check(CLI::Range(0, 255));
    b_cmd->add_option("--seed", bench.seed, "seed for the junk generator");
    b_cmd->add_flag("--clamp", bench.clamp, "saturate out-of-range values instead of failing");
    b_cmd->add_flag("--no-deflate", bench.no_deflate, "skip the DEFLATE baseline");
    b_cmd->add_flag("--no-throughput", bench.no_throughput, "skip the timing runs");
    b_cmd->add_flag("--json", bench.as_json, "machine-readable report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? exit_code::kOk : exit_code::kUsage;
    }

    try {
        if (c_cmd->parsed())
            return do_compress(compress, in, out, err);
        if (d_cmd->parsed())
            return do_decompress(decompress, in, out);
        if (v_cmd->parsed())
            return do_verify(verify, in, out, err);
        if (i_cmd->parsed())
            return do_inspect(inspect_input, in, out);
        if (s_cmd->parsed())
            return do_stats(stats_input, stats_json, in, out);
        if (y_cmd->parsed())
            return do_synth(synth, out, err);
        if (b_cmd->parsed())
            return do_bench(bench, in, out);
        err << "error: no subcommand\n";
        return exit_code::kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_code::kParse;
    } catch (const OutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kOutOfRange;
    } catch (const BadMagic& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kBadMagic;
    } catch (const UnsupportedVersion& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kUnsupportedVersion;
    } catch (const TruncatedStream& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kTruncated;
    } catch (const CorruptStream& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kCorrupt;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kIo;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::kInternal;
    }
}

}  // namespace lcp
