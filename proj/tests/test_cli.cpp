// The command surface: input parsing (digit words, streams, doubly infinite
// words, rational points), CSV/JSON emitters, and the command functions
// driven through in-memory streams plus the file-writing paths.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "elag/cli.hpp"

namespace elag {
namespace {

std::string run(RunConfig cfg) {
    std::ostringstream os;
    EXPECT_EQ(run_command(cfg, os), 0);
    return os.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    EXPECT_TRUE(in.good()) << path;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

TEST(Parsing, WordsAndStreams) {
    EXPECT_EQ(parse_word_digits("223"), (Word{2, 2, 3}));
    EXPECT_THROW(parse_word_digits(""), ParseError);
    EXPECT_THROW(parse_word_digits("2a3"), ParseError);
    EXPECT_THROW(parse_word_digits("607"), ParseError);

    EXPECT_EQ(parse_stream("3inf"), DigitStream({}, {3}));
    EXPECT_EQ(parse_stream("(223)inf"), DigitStream({}, {2, 2, 3}));
    EXPECT_EQ(parse_stream("3(2)inf"), DigitStream({3}, {2}));
    EXPECT_EQ(parse_stream("32inf"), DigitStream({}, {3, 2}));  // purely periodic
    EXPECT_THROW(parse_stream("12(3"), ParseError);
    EXPECT_THROW(parse_stream("(23inf"), ParseError);
    EXPECT_THROW(parse_stream("inf"), ParseError);
}

TEST(Parsing, BiWords) {
    EXPECT_EQ(parse_biword("(23)inf"), BiWord::periodic({2, 3}));
    EXPECT_EQ(parse_biword("23inf"), BiWord::periodic({2, 3}));
    EXPECT_EQ(parse_biword("2inf.3.2inf"), BiWord::spliced({2}, {3}, {2}));
    EXPECT_EQ(parse_biword("2inf..2inf"), BiWord::spliced({2}, {}, {2}));
    EXPECT_EQ(parse_biword("22inf.3.22inf"), BiWord::spliced({2}, {3}, {2}));  // primitive tails
    EXPECT_THROW(parse_biword("3(2)inf"), ParseError);  // preperiods have no biinfinite meaning
    EXPECT_THROW(parse_biword("2inf.3"), ParseError);
    EXPECT_THROW(parse_biword("2.3.2inf"), ParseError);
}

TEST(Parsing, Points) {
    EXPECT_EQ(parse_point("8/13,7/13"), make_point(8, 7, 13));
    EXPECT_EQ(parse_point("8/13 7/13"), make_point(8, 7, 13));
    EXPECT_EQ(parse_point("8/13\t7/13"), make_point(8, 7, 13));
    EXPECT_EQ(parse_point("1,0"), make_point(1, 0, 1));
    EXPECT_EQ(parse_point("16/26,7/13"), make_point(8, 7, 13));  // mixed denominators
    EXPECT_THROW(parse_point("1/2,1/2"), std::invalid_argument);  // not on the curve
    EXPECT_THROW(parse_point("5/7"), ParseError);

    const Target t1 = parse_target("3inf");
    EXPECT_TRUE(std::holds_alternative<DigitStream>(t1));
    const Target t2 = parse_target("8/13,7/13");
    EXPECT_TRUE(std::holds_alternative<CirclePointQ>(t2));
}

TEST(Parsing, CsvQuotingAndFormats) {
    EXPECT_EQ(csv_field("abc"), "abc");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    std::ostringstream os;
    csv_row(os, {"a", "b"});
    EXPECT_EQ(os.str(), "a,b\r\n");
    EXPECT_EQ(parse_format("json"), Format::JsonFmt);
    EXPECT_THROW(parse_format("yaml"), ParseError);
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

TEST(Commands, Triples) {
    RunConfig cfg;
    cfg.command = "triples";
    cfg.max_c = 13;
    cfg.format = "csv";
    const std::string csv = run(cfg);
    EXPECT_EQ(count_occurrences(csv, "\r\n"), 7u);  // header + 6 rows
    EXPECT_NE(csv.find("8,7,13"), std::string::npos);

    cfg.format = "json";
    const Json arr = Json::parse(run(cfg));
    ASSERT_EQ(arr.size(), 6u);
    EXPECT_EQ(arr[0]["a"], "0");
    EXPECT_EQ(arr[0]["b"], "1");
    EXPECT_EQ(arr[0]["c"], "1");
    for (const auto& e : arr)
        EXPECT_NO_THROW(make_point(parse_rat(e["a"].get<std::string>()).get_num(),
                                   parse_rat(e["b"].get<std::string>()).get_num(),
                                   parse_rat(e["c"].get<std::string>()).get_num()));

    cfg.format = "text";
    EXPECT_NE(run(cfg).find("# 6 triples"), std::string::npos);
}

TEST(Commands, Expand) {
    RunConfig cfg;
    cfg.command = "expand";
    cfg.target = "5/7,3/7";
    EXPECT_EQ(run(cfg), "[1,(5)^inf] | [2,(5)^inf]\n");
    cfg.target = "1,0";
    EXPECT_EQ(run(cfg), "[(1)^inf]\n");
    cfg.target = "35/43,13/43";
    EXPECT_EQ(run(cfg), "[1,2,(1)^inf] | [1,3,(1)^inf]\n");
    cfg.format = "json";
    const Json j = Json::parse(run(cfg));
    EXPECT_EQ(j["expansion"], "[1,2,(1)^inf]");
    EXPECT_EQ(j["alternate"], "[1,3,(1)^inf]");
}

TEST(Commands, Delta) {
    RunConfig cfg;
    cfg.command = "delta";
    cfg.target = "(3)inf";
    cfg.z_point = "8/13,7/13";
    const std::string out = run(cfg);
    EXPECT_NE(out.find("delta_sq = 338-195*sqrt(3)"), std::string::npos);
    EXPECT_NE(out.find("delta = 0.5000925"), std::string::npos);

    // Depth-1 closed form against the same boundary point gives the same value.
    cfg.depth_k = 1;
    cfg.z_point = "1,0";
    EXPECT_NE(run(cfg).find("338-195*sqrt(3)"), std::string::npos);

    cfg.depth_k = 0;
    cfg.target = "8/13,7/13";
    cfg.z_point = "1,0";
    EXPECT_NE(run(cfg).find("delta_sq = 3/13"), std::string::npos);

    cfg.target = "(3)inf";
    cfg.z_point = "8/13,7/13";
    cfg.format = "json";
    const Json j = Json::parse(run(cfg));
    EXPECT_EQ(j["delta_sq"], "338-195*sqrt(3)");
    EXPECT_EQ(j["z"], "(8/13, 7/13)");
}

TEST(Commands, ScanTextAndJson) {
    RunConfig cfg;
    cfg.command = "scan";
    cfg.target = "(3)inf";
    cfg.max_c = 13;
    cfg.threads = 1;
    const std::string out = run(cfg);
    EXPECT_NE(out.find("[boundary k=1]"), std::string::npos);
    EXPECT_NE(out.find("# window estimate unavailable"), std::string::npos);

    cfg.max_c = 200;
    cfg.format = "json";
    const Json j = Json::parse(run(cfg));
    EXPECT_EQ(j["target"], "[(3)^inf]");
    ASSERT_TRUE(j["liminf_estimate"].is_number());
    const double est = j["liminf_estimate"].get<double>();
    EXPECT_NEAR(est, 0.5, 0.05);
    EXPECT_EQ(j["records"].size(), enumerate_triples(200).size());
    // Records arrive sorted by approximation quality.
    EXPECT_EQ(j["records"][0]["is_boundary"], true);
}

TEST(Commands, Lagrange) {
    RunConfig cfg;
    cfg.command = "lagrange";
    cfg.target = "(24)inf";
    const std::string out = run(cfg);
    EXPECT_NE(out.find("no (factor 24)"), std::string::npos);
    EXPECT_NE(out.find("L^2 = 8"), std::string::npos);

    cfg.target = "2inf.3.2inf";
    const std::string spliced = run(cfg);
    EXPECT_NE(spliced.find("admissible candidate: yes"), std::string::npos);
    EXPECT_NE(spliced.find("L^2 = 16/3"), std::string::npos);

    cfg.target = "(3)inf";
    cfg.format = "json";
    const Json j = Json::parse(run(cfg));
    EXPECT_EQ(j["L_exact"], "2");
    EXPECT_EQ(j["L_sq"], "4");
    EXPECT_EQ(j["admissible_candidate"], true);
}

TEST(Commands, SpectrumRoundTrip) {
    RunConfig cfg;
    cfg.command = "spectrum";
    cfg.K = 5;
    cfg.format = "json";
    const Json arr = Json::parse(run(cfg));
    ASSERT_EQ(arr.size(), 5u);
    EXPECT_EQ(arr[2]["delta_sq"], "25/133");
    EXPECT_EQ(arr[2]["witness"], "(223)inf");
    for (std::size_t k = 0; k < arr.size(); ++k)
        EXPECT_EQ(parse_rat(arr[k]["delta_sq"].get<std::string>()),
                  delta_k_sq(static_cast<unsigned>(k + 1)));

    cfg.format = "csv";
    const std::string csv = run(cfg);
    EXPECT_EQ(count_occurrences(csv, "\r\n"), 6u);
    EXPECT_NE(csv.find("11881/63364"), std::string::npos);
}

TEST(Commands, Necklaces) {
    RunConfig cfg;
    cfg.command = "necklaces";
    cfg.max_period = 3;
    cfg.threads = 1;
    cfg.format = "json";
    const Json arr = Json::parse(run(cfg));
    ASSERT_EQ(arr.size(), 5u);
    EXPECT_EQ(arr[0]["period"], "3");
    EXPECT_EQ(arr[3]["period"], "223");
    EXPECT_EQ(arr[3]["L_sq"], "133/25");
    cfg.format = "text";
    EXPECT_NE(run(cfg).find("(223)inf  L="), std::string::npos);
}

TEST(Commands, PlotWritesSvgAndCsvTwins) {
    RunConfig cfg;
    cfg.command = "plot";
    cfg.max_norm = 1;
    cfg.output_path = "cli_plot_test.svg";
    const std::string msg = run(cfg);
    EXPECT_NE(msg.find("wrote cli_plot_test.svg and cli_plot_test.csv"), std::string::npos);
    const std::string svg = read_file("cli_plot_test.svg");
    EXPECT_NE(svg.find("<svg xmlns"), std::string::npos);
    EXPECT_EQ(count_occurrences(svg, "<circle"), 2u);  // the two vertex pairs
    const std::string csv = read_file("cli_plot_test.csv");
    EXPECT_EQ(count_occurrences(csv, "\r\n"), 3u);  // header + 2 points

    cfg.max_norm = 50;
    cfg.target = "3inf";
    run(cfg);
    const std::string big_svg = read_file("cli_plot_test.svg");
    const std::size_t circles = count_occurrences(big_svg, "<circle");
    EXPECT_GE(circles, 10u);
    EXPECT_EQ(count_occurrences(read_file("cli_plot_test.csv"), "\r\n"), circles + 1);

    std::remove("cli_plot_test.svg");
    std::remove("cli_plot_test.csv");
}

// ---------------------------------------------------------------------------
// Config plumbing
// ---------------------------------------------------------------------------

TEST(Config, ValidationAndDispatch) {
    RunConfig cfg;
    cfg.command = "nonsense";
    std::ostringstream os;
    EXPECT_THROW(run_command(cfg, os), std::invalid_argument);
    cfg.command = "triples";
    cfg.max_c = 0;
    EXPECT_THROW(run_command(cfg, os), std::invalid_argument);
    cfg.max_c = 10;
    cfg.precision_bits = 32;
    EXPECT_THROW(run_command(cfg, os), std::invalid_argument);
}

TEST(Config, OutputFiles) {
    RunConfig cfg;
    cfg.command = "triples";
    cfg.max_c = 1;
    cfg.output_path = "cli_out_test.txt";
    EXPECT_EQ(run_to_output(cfg), 0);
    const std::string body = read_file("cli_out_test.txt");
    EXPECT_NE(body.find("# 2 triples"), std::string::npos);
    std::remove("cli_out_test.txt");

    cfg.output_path = "/nonexistent_dir_for_tests/out.txt";
    EXPECT_EQ(run_to_output(cfg), 2);
}

TEST(Config, ThreadResolution) {
    RunConfig cfg;
    cfg.threads = 2;
    ASSERT_EQ(unsetenv("EL_THREADS"), 0);
    EXPECT_EQ(effective_threads(cfg), 2u);
    ASSERT_EQ(setenv("EL_THREADS", "3", 1), 0);
    EXPECT_EQ(effective_threads(cfg), 3u);
    ASSERT_EQ(setenv("EL_THREADS", "garbage", 1), 0);
    EXPECT_EQ(effective_threads(cfg), 2u);  // unparsable env falls back to the flag
    ASSERT_EQ(unsetenv("EL_THREADS"), 0);
    cfg.threads = 0;
    EXPECT_GE(effective_threads(cfg), 1u);
}

TEST(Config, OutputsAreThreadCountInvariant) {
    ASSERT_EQ(unsetenv("EL_THREADS"), 0);
    for (const char* command : {"scan", "necklaces"}) {
        RunConfig cfg;
        cfg.command = command;
        cfg.target = "(23)inf";
        cfg.max_c = 300;
        cfg.max_period = 4;
        cfg.format = command == std::string("scan") ? "json" : "csv";
        cfg.threads = 1;
        const std::string one = run(cfg);
        cfg.threads = 4;
        const std::string four = run(cfg);
        EXPECT_EQ(one, four) << command;
    }
}

}  // namespace
}  // namespace elag
