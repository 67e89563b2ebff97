#include "lcp/bench.hpp"

#include <zlib.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lcp/container.hpp"

namespace lcp {

namespace {

std::string read_cpu_model() {
    std::ifstream in("/proc/cpuinfo");
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find("model name");
        if (pos == std::string::npos)
            continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            break;
        auto name = line.substr(colon + 1);
        const auto first = name.find_first_not_of(' ');
        return first == std::string::npos ? name : name.substr(first);
    }
    return "unknown CPU";
}

// Tiles `values` up to at least min_values and times f(buffer) per value.
template <typename F>
double time_per_second(const std::vector<std::int16_t>& values,
                       std::size_t min_values, F&& f) {
    std::vector<std::int16_t> buffer = values;
    while (buffer.size() < min_values)
        buffer.insert(buffer.end(), values.begin(), values.end());

    f(buffer);  // warmup
    using clock = std::chrono::steady_clock;
    std::size_t done = 0;
    const auto start = clock::now();
    double elapsed = 0;
    do {
        f(buffer);
        done += buffer.size();
        elapsed = std::chrono::duration<double>(clock::now() - start).count();
    } while (elapsed < 0.25);
    return double(done) / elapsed;
}

}  // namespace

EncodeStats class_histogram(std::span<const std::int16_t> values) {
    EncodeStats stats;
    BitWriter w;
    w.reserve_bits(values.size() * kMaxBitsPerValue);
    encode_sequence(values, w, &stats);
    return stats;
}

std::optional<std::size_t> deflate_size(std::string_view bytes) {
    uLongf bound = compressBound(uLong(bytes.size()));
    std::vector<Bytef> out(bound);
    const int rc = compress2(out.data(), &bound,
                             reinterpret_cast<const Bytef*>(bytes.data()),
                             uLong(bytes.size()), Z_BEST_COMPRESSION);
    if (rc != Z_OK)
        return std::nullopt;
    return std::size_t(bound);
}

BenchReport run_bench(std::string_view csv_text, const CsvConfig& cfg,
                      const BenchOptions& opt) {
    BenchReport report;
    report.csv_bytes = csv_size(csv_text);
    report.obfuscated = opt.obfuscation_count > 0;
    report.cpu_model = read_cpu_model();

    const ParsedCsv parsed = parse_csv(csv_text, cfg);

    std::vector<ChannelData> channels(cfg.specs.size());
    for (std::size_t c = 0; c < cfg.specs.size(); ++c) {
        channels[c].spec = cfg.specs[c];
        channels[c].spec.lca = cfg.specs[c].lca || opt.lca;
        channels[c].values.reserve(parsed.channels[c].size());
        for (const double x : parsed.channels[c])
            channels[c].values.push_back(quantize(x, channels[c].spec, opt.clamp));
    }

    const std::vector<std::uint8_t> file = write_container(
        parsed.sample_rate_mHz, parsed.t0_us, channels,
        {opt.obfuscation_count, opt.seed});

    const DecodedContainer decoded = read_container(file);
    for (std::size_t c = 0; c < channels.size(); ++c)
        if (decoded.channels[c] != channels[c].values)
            throw Error("bench: roundtrip mismatch on channel '" +
                        channels[c].spec.name + "'; refusing to report");

    report.channel_count = channels.size();
    report.value_count = channels.size() * channels[0].values.size();
    report.raw16_bytes = std::size_t(report.value_count) * 2;
    report.lcp_file_bytes = file.size();

    std::uint64_t payload_bits = 0;
    for (const auto& m : decoded.header.channels) {
        report.lcp_payload_bytes += std::size_t(m.payload_len);
        payload_bits += m.payload_bit_count;
    }
    report.bits_per_value =
        double(payload_bits - 8 * report.channel_count) / double(report.value_count);
    report.ratio_vs_csv = double(report.csv_bytes) / double(report.lcp_file_bytes);

    for (const auto& ch : channels)
        report.classes += class_histogram(ch.values);

    if (opt.with_deflate)
        report.deflate_bytes = deflate_size(csv_text);

    if (opt.with_throughput) {
        // one concatenated stream, codec only, single thread
        std::vector<std::int16_t> all;
        all.reserve(report.value_count);
        for (const auto& ch : channels)
            all.insert(all.end(), ch.values.begin(), ch.values.end());

        report.encode_values_per_s =
            time_per_second(all, opt.throughput_min_values, [](const auto& buf) {
                BitWriter w;
                w.reserve_bits(buf.size() * kMaxBitsPerValue);
                encode_sequence(buf, w);
            });

        std::vector<std::int16_t> buffer = all;
        while (buffer.size() < opt.throughput_min_values)
            buffer.insert(buffer.end(), all.begin(), all.end());
        BitWriter w;
        w.reserve_bits(buffer.size() * kMaxBitsPerValue);
        encode_sequence(buffer, w);
        const FinishedStream encoded = w.finish();
        const std::size_t n = buffer.size();

        const auto decode_once = [&] {
            BitReader r(encoded.bytes, encoded.bit_count);
            return decode_sequence(r, n).size();
        };
        decode_once();  // warmup
        using clock = std::chrono::steady_clock;
        std::size_t done = 0;
        const auto start = clock::now();
        double elapsed = 0;
        do {
            done += decode_once();
            elapsed = std::chrono::duration<double>(clock::now() - start).count();
        } while (elapsed < 0.25);
        report.decode_values_per_s = double(done) / elapsed;
    }

    return report;
}

std::string render_class_histogram(const EncodeStats& stats) {
    std::ostringstream out;
    const auto pct = [](std::uint64_t part, std::uint64_t whole) {
        return whole == 0 ? 0.0 : 100.0 * double(part) / double(whole);
    };
    const auto mean_bits = [](std::uint64_t bits, std::uint64_t n) {
        return n == 0 ? 0.0 : double(bits) / double(n);
    };

    out.setf(std::ios::fixed);
    out.precision(3);
    static constexpr const char* kClassNames[kCodeClassCount] = {
        "'0'  repeat  ", "'100' reuse L+T", "'101' reuse L  ", "'110' reuse T  ",
        "'111' fresh    "};
    const std::uint64_t coded = stats.total_count();
    out << "control classes (" << coded << " coded values):\n";
    for (int i = 0; i < kCodeClassCount; ++i) {
        const auto idx = std::size_t(i);
        out << "  " << kClassNames[idx] << "  " << stats.count[idx] << "  ("
            << pct(stats.count[idx], coded) << "%, mean "
            << mean_bits(stats.bits[idx], stats.count[idx]) << " bits)\n";
    }
    return out.str();
}

std::string render_report(const BenchReport& report) {
    std::ostringstream out;

    out.setf(std::ios::fixed);
    out.precision(3);
    out << "values              " << report.value_count << " across "
        << report.channel_count << " channel(s)\n";
    out << "csv bytes           " << report.csv_bytes << "\n";
    out << "raw 16-bit bytes    " << report.raw16_bytes << "\n";
    out << "lcp payload bytes   " << report.lcp_payload_bytes << "\n";
    out << "lcp file bytes      " << report.lcp_file_bytes << "\n";
    if (report.deflate_bytes)
        out << "deflate bytes       " << *report.deflate_bytes << " (ratio "
            << double(report.csv_bytes) / double(*report.deflate_bytes) << ")\n";
    else
        out << "deflate bytes       n/a\n";
    out << "ratio vs csv        " << report.ratio_vs_csv << "\n";
    out << "bits per value      " << report.bits_per_value
        << (report.obfuscated ? " (includes junk-value overhead)\n" : "\n");
    out << render_class_histogram(report.classes);

    if (report.encode_values_per_s)
        out << "encode throughput   " << std::uint64_t(*report.encode_values_per_s)
            << " values/s (single thread, " << report.cpu_model << ")\n";
    if (report.decode_values_per_s)
        out << "decode throughput   " << std::uint64_t(*report.decode_values_per_s)
            << " values/s (single thread)\n";

    out << "reference (reported on the LIFTED household dataset, not measured "
           "here): ratio LCP "
        << ReferenceFigures::kLcpRatio << ", LCA " << ReferenceFigures::kLcaRatio
        << ", Gorilla " << ReferenceFigures::kGorillaRatio << ", Zip "
        << ReferenceFigures::kZipRatio << "; zero-bit share "
        << 100.0 * ReferenceFigures::kZeroBitShare << "%; mean "
        << ReferenceFigures::kMeanBitsPerValue << " bits/value; '111' class mean "
        << ReferenceFigures::kFreshClassMeanBits << " bits; throughput "
        << std::uint64_t(ReferenceFigures::kValuesPerSecond) << " values/s\n";
    return out.str();
}

}  // namespace lcp
