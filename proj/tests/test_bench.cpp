#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "lcp/bench.hpp"
#include "lcp/codec.hpp"
#include "lcp/csvio.hpp"
#include "lcp/synth.hpp"

using namespace lcp;

namespace {

const std::string kEightValues =
    "t,P\n"
    "0.00,23\n0.02,25\n0.04,47\n0.06,48\n"
    "0.08,3074\n0.10,3075\n0.12,3076\n0.14,3076\n";

CsvConfig watts_only() {
    CsvConfig cfg;
    cfg.value_columns = {1};
    cfg.specs = {{"P", 0, false}};
    return cfg;
}

BenchOptions quick() {
    BenchOptions opt;
    opt.with_deflate = false;
    opt.with_throughput = false;
    return opt;
}

std::string synth_csv(double duration_s) {
    const SynthResult r = generate(default_profiles(), duration_s, 50, 0);
    ContainerHeader h;
    h.sample_rate_mHz = 50000;
    h.t0_us = 0;
    for (const auto& name : r.channel_names)
        h.channels.push_back(ChannelMeta{name, 0, false,
                                         r.channels.front().size(), 0, 0});
    std::ostringstream out;
    emit_csv(out, h, r.channels);
    return std::move(out).str();
}

CsvConfig synth_config() {
    CsvConfig cfg;
    cfg.value_columns.clear();
    cfg.specs.clear();
    const auto names = {"kettle", "vacuum", "steamer", "refrigerator",
                        "washing_machine", "aggregate"};
    std::size_t col = 1;
    for (const auto* name : names) {
        cfg.value_columns.push_back(col++);
        cfg.specs.push_back(ChannelSpec{name, 0, false});
    }
    return cfg;
}

}  // namespace

TEST_CASE("the worked example measures 12.875 bits per value") {
    const BenchReport r = run_bench(kEightValues, watts_only(), quick());
    CHECK(r.value_count == 8);
    CHECK(r.channel_count == 1);
    CHECK(r.lcp_payload_bytes == 14);  // 8 count bits + 103 codec bits
    CHECK(r.bits_per_value == 103.0 / 8.0);
    CHECK(r.raw16_bytes == 16);
    CHECK(r.classes.count[int(CodeClass::kRepeat)] == 1);
    CHECK(r.classes.count[int(CodeClass::kReuseTrailing)] == 2);
    CHECK(r.classes.count[int(CodeClass::kFresh)] == 4);
    CHECK(r.classes.total_count() == 7);
}

TEST_CASE("a constant stream approaches one bit per value") {
    std::string csv = "t,P\n";
    const std::size_t n = 100000;
    for (std::size_t i = 0; i < n; ++i) {
        csv += format_fixed(std::int64_t(i * 2), 2);  // 0.02 s steps
        csv += ",500\n";
    }
    const BenchReport r = run_bench(csv, watts_only(), quick());
    CHECK(r.value_count == n);
    // 16 first-value bits + (n-1) repeat bits over n values
    CHECK(r.bits_per_value == double(n + 15) / double(n));
    CHECK(r.classes.count[int(CodeClass::kRepeat)] == n - 1);
}

TEST_CASE("junk inflates the payload but not the class counts") {
    BenchOptions opt = quick();
    opt.obfuscation_count = 6;
    opt.seed = 5;
    const BenchReport r = run_bench(kEightValues, watts_only(), opt);
    CHECK(r.obfuscated);
    CHECK(r.bits_per_value > 103.0 / 8.0);
    // histogram still describes the data values alone
    CHECK(r.classes.total_count() == 7);
}

TEST_CASE("lca mode never compresses worse than plain on synth data") {
    const std::string csv = synth_csv(60);
    const BenchReport plain = run_bench(csv, synth_config(), quick());
    BenchOptions lca = quick();
    lca.lca = true;
    const BenchReport rounded = run_bench(csv, synth_config(), lca);
    CHECK(rounded.ratio_vs_csv >= plain.ratio_vs_csv);
    CHECK(plain.ratio_vs_csv > 5);
}

TEST_CASE("deflate baseline compresses but less than the codec") {
    const std::string csv = synth_csv(30);
    BenchOptions opt = quick();
    opt.with_deflate = true;
    const BenchReport r = run_bench(csv, synth_config(), opt);
    REQUIRE(r.deflate_bytes.has_value());
    CHECK(*r.deflate_bytes < r.csv_bytes);
    CHECK(*r.deflate_bytes > r.lcp_file_bytes);
}

TEST_CASE("throughput measurements run when asked") {
    BenchOptions opt = quick();
    opt.with_throughput = true;
    opt.throughput_min_values = 10000;  // keep the test quick
    const BenchReport r = run_bench(kEightValues, watts_only(), opt);
    REQUIRE(r.encode_values_per_s.has_value());
    REQUIRE(r.decode_values_per_s.has_value());
    CHECK(*r.encode_values_per_s > 0);
    CHECK(*r.decode_values_per_s > 0);
    CHECK_FALSE(r.cpu_model.empty());
}

TEST_CASE("the report renders every section") {
    BenchOptions opt = quick();
    opt.with_deflate = true;
    const BenchReport r = run_bench(kEightValues, watts_only(), opt);
    const std::string text = render_report(r);
    CHECK(text.find("bits per value") != std::string::npos);
    CHECK(text.find("12.875") != std::string::npos);
    CHECK(text.find("control classes") != std::string::npos);
    CHECK(text.find("'111' fresh") != std::string::npos);
    CHECK(text.find("reference (reported on the LIFTED household dataset") !=
          std::string::npos);
    CHECK(text.find("39.900") != std::string::npos);
}

TEST_CASE("class_histogram matches a manual encode") {
    const std::vector<std::int16_t> values{23, 25, 47, 48, 3074, 3075, 3076, 3076};
    const EncodeStats stats = class_histogram(values);
    CHECK(stats.total_bits() == 103 - 16);
    CHECK(stats.count[int(CodeClass::kFresh)] == 4);
}

TEST_CASE("deflate_size is a plausible DEFLATE") {
    const std::string a(10000, 'a');
    const auto sz = deflate_size(a);
    REQUIRE(sz.has_value());
    CHECK(*sz < 100);
    CHECK(*sz > 0);
}
