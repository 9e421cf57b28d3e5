#pragma once

#include <array>
#include <string>
#include <string_view>

#include "ccfngbm/series.hpp"

namespace ccfngbm {

/// A bundled dataset together with its default calibration/holdout split.
struct FixtureInfo {
    std::string_view name;
    std::string_view label;
    std::string_view unit;
    std::string_view csv;
    SplitSpec split;
};

// Kept byte-identical to data/fixtures/*.csv (checked by the test suite).
inline constexpr std::array<FixtureInfo, 3> kFixtures{{
    {"shanghai-diesel", "Shanghai diesel fuel consumption", "10^4 t",
     R"csv(period,value
2000,176.44
2001,231.80
2002,236.78
2003,288.32
2004,346.56
2005,329.60
2006,370.98
2007,417.17
2008,427.05
2009,483.19
2010,509.04
2011,532.96
2012,568.99
2013,555.84
2014,548.41
2015,561.87
2016,562.20
2017,550.38
)csv",
     {16, 2}},
    {"germany-co2", "Germany total CO2 emissions", "Mt",
     R"csv(period,value
2008,806.5
2009,751.0
2010,780.6
2011,761.0
2012,770.3
2013,794.6
2014,748.4
2015,751.9
2016,766.6
2017,762.6
2018,725.7
)csv",
     {9, 2}},
    {"china-co2", "China CO2 emissions from fuel combustion", "Mt",
     R"csv(period,value
2001,3593.1
2002,3910.6
2003,4603.4
2004,5413.4
2005,6174.0
2006,6757.2
2007,7325.4
2008,7457.4
2009,7796.6
2010,8231.7
2011,8916.3
2012,9090.0
2013,9335.5
2014,9329.6
2015,9276.5
2016,9230.3
2017,9396.9
2018,9606.6
2019,9920.5
)csv",
     {17, 2}},
}};

inline std::string fixture_names() {
    std::string out;
    for (const auto& f : kFixtures) {
        if (!out.empty()) out += ", ";
        out += f.name;
    }
    return out;
}

inline const FixtureInfo& fixture_info(std::string_view name) {
    for (const auto& f : kFixtures) {
        if (f.name == name) return f;
    }
    fail(ErrorCategory::Lookup,
         "unknown fixture '" + std::string(name) + "'; valid names: " + fixture_names());
}

inline TimeSeries load_fixture(std::string_view name) {
    const auto& info = fixture_info(name);
    auto parsed = parse_csv_text(info.csv, std::string(info.label), info.name);
    return TimeSeries(std::string(info.label), parsed.start_period(),
                      {parsed.values().begin(), parsed.values().end()}, std::string(info.unit));
}

}  // namespace ccfngbm
