#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ccfngbm/fixtures.hpp"
#include "ccfngbm/series.hpp"
#include "support.hpp"

using namespace ccfngbm;
using V = std::vector<double>;

namespace {

ErrorCategory category_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.category();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCategory::Io;
}

std::string error_text(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

V values_of(const TimeSeries& s) { return {s.values().begin(), s.values().end()}; }

}  // namespace

TEST(TimeSeries, RejectsNonPositiveValues) {
    EXPECT_EQ(category_of([] { TimeSeries("x", 2000, {1.0, 0.0, 2.0, 3.0}); }), ErrorCategory::Validation);
    EXPECT_EQ(category_of([] { TimeSeries("x", 2000, {1.0, -2.0, 2.0, 3.0}); }), ErrorCategory::Validation);
    EXPECT_EQ(category_of([] { TimeSeries("x", 2000, {1.0, NAN, 2.0, 3.0}); }), ErrorCategory::Validation);
}

TEST(TimeSeries, ModelLengthIsFour) {
    TimeSeries three("x", 2000, {1.0, 2.0, 3.0});
    EXPECT_EQ(category_of([&] { three.require_model_length(); }), ErrorCategory::Config);
    TimeSeries four("x", 2000, {1.0, 2.0, 3.0, 4.0});
    EXPECT_NO_THROW(four.require_model_length());
}

TEST(Split, ShanghaiTrainAndHoldout) {
    const auto s = load_fixture("shanghai-diesel");
    ASSERT_EQ(s.size(), 18u);
    const auto [train, holdout] = split(s, {16, 2});
    EXPECT_EQ(train.size(), 16u);
    EXPECT_EQ(train.values().back(), 561.87);
    EXPECT_EQ(train.end_period(), 2015);
    EXPECT_EQ(values_of(holdout), (V{562.20, 550.38}));
    EXPECT_EQ(holdout.start_period(), 2016);
}

TEST(Split, GermanyHoldout) {
    const auto [train, holdout] = split(load_fixture("germany-co2"), {9, 2});
    EXPECT_EQ(values_of(holdout), (V{762.6, 725.7}));
}

TEST(Split, EmptyHoldout) {
    const auto s = load_fixture("china-co2");
    const auto [train, holdout] = split(s, {s.size(), 0});
    EXPECT_EQ(train, s);
    EXPECT_TRUE(holdout.empty());
}

TEST(Split, ConcatenationEqualsInput) {
    const auto s = load_fixture("china-co2");
    for (std::size_t t = 4; t <= s.size(); ++t) {
        const auto [train, holdout] = split(s, {t, s.size() - t});
        V joined = values_of(train);
        const auto h = values_of(holdout);
        joined.insert(joined.end(), h.begin(), h.end());
        EXPECT_EQ(joined, values_of(s));
    }
}

TEST(Split, MismatchNamesCounts) {
    const auto s = load_fixture("germany-co2");
    const auto msg = error_text([&] { split(s, {9, 3}); });
    EXPECT_NE(msg.find("9"), std::string::npos);
    EXPECT_NE(msg.find("3"), std::string::npos);
    EXPECT_NE(msg.find("11"), std::string::npos);
    EXPECT_EQ(category_of([&] { split(s, {9, 3}); }), ErrorCategory::Config);
    EXPECT_EQ(category_of([&] { split(s, {3, 8}); }), ErrorCategory::Config);
}

TEST(Fixtures, FirstAndLast) {
    const auto sh = load_fixture("shanghai-diesel");
    EXPECT_EQ(sh[0], 176.44);
    EXPECT_EQ(sh.start_period(), 2000);
    EXPECT_EQ(sh.values().back(), 550.38);
    EXPECT_EQ(sh.end_period(), 2017);

    const auto de = load_fixture("germany-co2");
    EXPECT_EQ(de[0], 806.5);
    EXPECT_EQ(de.start_period(), 2008);
    EXPECT_EQ(de.values().back(), 725.7);
    EXPECT_EQ(de.end_period(), 2018);

    const auto cn = load_fixture("china-co2");
    EXPECT_EQ(cn[0], 3593.1);
    EXPECT_EQ(cn.start_period(), 2001);
    EXPECT_EQ(cn.values().back(), 9920.5);
    EXPECT_EQ(cn.end_period(), 2019);
}

// Table data typed out independently of the embedded CSV text.
TEST(Fixtures, EveryValueMatchesTable) {
    EXPECT_EQ(values_of(load_fixture("shanghai-diesel")),
              (V{176.44, 231.80, 236.78, 288.32, 346.56, 329.60, 370.98, 417.17, 427.05, 483.19,
                 509.04, 532.96, 568.99, 555.84, 548.41, 561.87, 562.20, 550.38}));
    EXPECT_EQ(values_of(load_fixture("germany-co2")),
              (V{806.5, 751.0, 780.6, 761.0, 770.3, 794.6, 748.4, 751.9, 766.6, 762.6, 725.7}));
    EXPECT_EQ(values_of(load_fixture("china-co2")),
              (V{3593.1, 3910.6, 4603.4, 5413.4, 6174.0, 6757.2, 7325.4, 7457.4, 7796.6, 8231.7,
                 8916.3, 9090.0, 9335.5, 9329.6, 9276.5, 9230.3, 9396.9, 9606.6, 9920.5}));
}

TEST(Fixtures, EmbeddedTextMatchesFiles) {
    for (const auto& f : kFixtures) {
        const std::string path = std::string(CCFNGBM_SOURCE_DIR) + "/data/fixtures/" + std::string(f.name) + ".csv";
        ASSERT_TRUE(std::filesystem::exists(path)) << path;
        EXPECT_EQ(slurp(path), std::string(f.csv)) << f.name;
        EXPECT_EQ(values_of(parse_csv(path)), values_of(load_fixture(f.name)));
    }
}

TEST(Fixtures, UnknownNameListsValid) {
    const auto msg = error_text([] { load_fixture("mars-co2"); });
    EXPECT_NE(msg.find("shanghai-diesel"), std::string::npos);
    EXPECT_NE(msg.find("germany-co2"), std::string::npos);
    EXPECT_NE(msg.find("china-co2"), std::string::npos);
    EXPECT_EQ(category_of([] { load_fixture("mars-co2"); }), ErrorCategory::Lookup);
}

TEST(Csv, RoundTripFullPrecision) {
    testing_support::Gen g(21);
    for (int t = 0; t < 50; ++t) {
        TimeSeries s("rt", 1990 + t, g.positive(g.size(4, 20), 1e-6, 1e9));
        const auto back = parse_csv_text(to_csv(s), "rt");
        EXPECT_EQ(values_of(back), values_of(s));
        EXPECT_EQ(back.start_period(), s.start_period());
    }
}

TEST(Csv, NegativeValueNamesPeriod) {
    const std::string text = "period,value\n2000,1\n2001,-3\n2002,4\n2003,5\n";
    EXPECT_EQ(category_of([&] { parse_csv_text(text, "x"); }), ErrorCategory::Validation);
    EXPECT_NE(error_text([&] { parse_csv_text(text, "x"); }).find("2001"), std::string::npos);
}

TEST(Csv, GapInPeriods) {
    const std::string text = "period,value\n2000,1\n2001,2\n2003,4\n2004,5\n";
    EXPECT_EQ(category_of([&] { parse_csv_text(text, "x"); }), ErrorCategory::Validation);
    EXPECT_NE(error_text([&] { parse_csv_text(text, "x"); }).find("periods must be consecutive"),
              std::string::npos);
}

TEST(Csv, MalformedRowHasLineNumber) {
    const std::string text = "period,value\n2000,1\n2001,abc\n2002,4\n2003,5\n";
    EXPECT_EQ(category_of([&] { parse_csv_text(text, "x", "f.csv"); }), ErrorCategory::Parse);
    EXPECT_NE(error_text([&] { parse_csv_text(text, "x", "f.csv"); }).find("f.csv:3"), std::string::npos);
    EXPECT_EQ(category_of([] { parse_csv_text("year,value\n2000,1\n", "x"); }), ErrorCategory::Parse);
    EXPECT_EQ(category_of([] { parse_csv_text("period,value\n2000,1,2\n", "x"); }), ErrorCategory::Parse);
    EXPECT_EQ(category_of([] { parse_csv_text("period,value\n2000.5,1\n", "x"); }), ErrorCategory::Parse);
}

TEST(Csv, MissingFileIsIoError) {
    EXPECT_EQ(category_of([] { parse_csv("/nonexistent/none.csv"); }), ErrorCategory::Io);
}
