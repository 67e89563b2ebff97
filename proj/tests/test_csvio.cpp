#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "lcp/container.hpp"
#include "lcp/csvio.hpp"
#include "lcp/errors.hpp"

using namespace lcp;

namespace {

const std::string kFourChannel =
    "t,V,I,P,Q\n"
    "0.00,120.13,1.52,1027,15\n"
    "0.02,120.15,1.52,1027,15\n"
    "0.04,120.14,1.53,1028,16\n";

}  // namespace

TEST_CASE("default mapping reads t,V,I,P,Q") {
    const ParsedCsv parsed = parse_csv(kFourChannel, CsvConfig{});
    CHECK(parsed.t0_us == 0);
    CHECK(parsed.sample_rate_mHz == 50000);  // inferred from 0.02 s spacing
    REQUIRE(parsed.channels.size() == 4);
    CHECK(parsed.channels[0] == std::vector<double>{120.13, 120.15, 120.14});
    CHECK(parsed.channels[2] == std::vector<double>{1027, 1027, 1028});
    CHECK(parsed.spacing_warnings == 0);
}

TEST_CASE("a declared rate overrides inference") {
    CsvConfig cfg;
    cfg.rate_hz = 100;
    const ParsedCsv parsed = parse_csv(kFourChannel, cfg);
    CHECK(parsed.sample_rate_mHz == 100000);
    // every 0.02 s gap is now off the declared 0.01 s period
    CHECK(parsed.spacing_warnings == 2);
}

TEST_CASE("fractional rates carry through in millihertz") {
    CsvConfig cfg;
    cfg.rate_hz = 0.5;
    const ParsedCsv parsed = parse_csv(
        "t,V,I,P,Q\n0,1,1,1,1\n2,1,1,1,1\n", cfg);
    CHECK(parsed.sample_rate_mHz == 500);
    CHECK(parsed.spacing_warnings == 0);
}

TEST_CASE("blank lines and CRLF endings are tolerated") {
    const std::string text =
        "t,V,I,P,Q\r\n"
        "0.00,1,2,3,4\r\n"
        "\r\n"
        "0.02,1,2,3,4\r\n";
    const ParsedCsv parsed = parse_csv(text, CsvConfig{});
    CHECK(parsed.channels[0].size() == 2);
    CHECK(parsed.channels[3] == std::vector<double>{4, 4});
}

TEST_CASE("headerless input with explicit metadata") {
    CsvConfig cfg;
    cfg.has_header = false;
    cfg.timestamp_column.reset();
    cfg.value_columns = {0, 1};
    cfg.specs = {{"V", 2, false}, {"I", 2, false}};
    cfg.rate_hz = 50;
    cfg.t0_s = 12.5;
    const ParsedCsv parsed = parse_csv("1.0,2.0\n3.0,4.0\n", cfg);
    CHECK(parsed.t0_us == 12500000);
    CHECK(parsed.channels[0] == std::vector<double>{1.0, 3.0});
    CHECK(parsed.channels[1] == std::vector<double>{2.0, 4.0});
}

TEST_CASE("skipped columns never get parsed") {
    CsvConfig cfg;
    cfg.value_columns = {2};
    cfg.specs = {{"P", 0, false}};
    const ParsedCsv parsed =
        parse_csv("t,junk,P\n0.0,not-a-number,7\n0.5,x,9\n", cfg);
    CHECK(parsed.channels[0] == std::vector<double>{7, 9});
    CHECK(parsed.sample_rate_mHz == 2000);
}

TEST_CASE("bad cells report 1-based row and column") {
    try {
        parse_csv("t,V,I,P,Q\n0.00,1,2,3,4\n0.02,1,oops,3,4\n", CsvConfig{});
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.row == 3);
        CHECK(e.column == 3);
        CHECK(std::string(e.what()).find("oops") != std::string::npos);
    }
}

TEST_CASE("non-finite cells are parse errors, not data") {
    CHECK_THROWS_AS(parse_csv("t,V,I,P,Q\n0,1,2,inf,4\n0.02,1,2,3,4\n", CsvConfig{}),
                    ParseError);
    CHECK_THROWS_AS(parse_csv("t,V,I,P,Q\n0,1,2,nan,4\n0.02,1,2,3,4\n", CsvConfig{}),
                    ParseError);
}

TEST_CASE("ragged rows are rejected") {
    CHECK_THROWS_AS(parse_csv("t,V,I,P,Q\n0,1,2,3,4\n0.02,1,2,3\n", CsvConfig{}),
                    ParseError);
}

TEST_CASE("structural failures") {
    CHECK_THROWS_AS(parse_csv("t,V,I,P,Q\n", CsvConfig{}), ParseError);  // no data
    CHECK_THROWS_AS(parse_csv("t,V,I,P,Q\n0,1,2,3,4\n", CsvConfig{}),
                    UsageError);  // one row, no declared rate
    CHECK_THROWS_AS(
        parse_csv("t,V,I,P,Q\n0.02,1,2,3,4\n0.02,1,2,3,4\n", CsvConfig{}),
        ParseError);  // non-increasing timestamps
    CHECK_THROWS_AS(
        parse_csv("t,V,I,P,Q\n-1.0,1,2,3,4\n-0.98,1,2,3,4\n", CsvConfig{}),
        ParseError);  // negative epoch
}

TEST_CASE("config validation") {
    CsvConfig no_channels;
    no_channels.value_columns.clear();
    no_channels.specs.clear();
    CHECK_THROWS_AS(parse_csv(kFourChannel, no_channels), UsageError);

    CsvConfig dup;
    dup.value_columns = {1, 1};
    dup.specs = {{"V", 2, false}, {"I", 2, false}};
    CHECK_THROWS_AS(parse_csv(kFourChannel, dup), UsageError);

    CsvConfig no_time;
    no_time.timestamp_column.reset();
    CHECK_THROWS_AS(parse_csv(kFourChannel, no_time), UsageError);
}

TEST_CASE("format_fixed renders exact decimals") {
    CHECK(format_fixed(12013, 2) == "120.13");
    CHECK(format_fixed(1027, 0) == "1027");
    CHECK(format_fixed(-12013, 2) == "-120.13");
    CHECK(format_fixed(5, 2) == "0.05");
    CHECK(format_fixed(-5, 2) == "-0.05");
    CHECK(format_fixed(0, 3) == "0.000");
    CHECK(format_fixed(-32768, 0) == "-32768");
    CHECK(format_fixed(-32768, 4) == "-3.2768");
}

TEST_CASE("emit_csv writes timestamps and fixed-point values") {
    ContainerHeader h;
    h.sample_rate_mHz = 50000;
    h.t0_us = 1000000;
    h.channels = {ChannelMeta{"V", 2, false, 3, 0, 0},
                  ChannelMeta{"P", 0, false, 3, 0, 0}};
    const std::vector<std::vector<std::int16_t>> channels{{12013, 12015, -5},
                                                          {1027, 1028, 0}};
    std::ostringstream out;
    emit_csv(out, h, channels);
    CHECK(out.str() ==
          "t,V,P\n"
          "1.00,120.13,1027\n"
          "1.02,120.15,1028\n"
          "1.04,-0.05,0\n");
}

TEST_CASE("emit and parse are inverse at declared precision") {
    ContainerHeader h;
    h.sample_rate_mHz = 50000;
    h.t0_us = 0;
    h.channels = {ChannelMeta{"V", 2, false, 4, 0, 0}};
    const std::vector<std::vector<std::int16_t>> channels{{-32768, 32767, 0, 5}};
    std::ostringstream out;
    emit_csv(out, h, channels);

    CsvConfig cfg;
    cfg.value_columns = {1};
    cfg.specs = {{"V", 2, false}};
    const ParsedCsv parsed = parse_csv(out.str(), cfg);
    CHECK(parsed.channels[0] == std::vector<double>{-327.68, 327.67, 0, 0.05});
}

TEST_CASE("emit_csv rejects names that break the format") {
    ContainerHeader h;
    h.sample_rate_mHz = 50000;
    h.t0_us = 0;
    h.channels = {ChannelMeta{"a,b", 0, false, 1, 0, 0}};
    const std::vector<std::vector<std::int16_t>> channels{{1}};
    std::ostringstream out;
    CHECK_THROWS_AS(emit_csv(out, h, channels), UsageError);
}

TEST_CASE("csv_size counts CRLF line endings as one byte") {
    CHECK(csv_size("a,b\nc,d\n") == 8);
    CHECK(csv_size("a,b\r\nc,d\r\n") == 8);
    CHECK(csv_size("") == 0);
}

TEST_CASE("alternative delimiters") {
    CsvConfig cfg;
    cfg.delimiter = ';';
    const ParsedCsv parsed =
        parse_csv("t;V;I;P;Q\n0.00;1;2;3;4\n0.02;1;2;3;4\n", cfg);
    CHECK(parsed.channels[1] == std::vector<double>{2, 2});
}
