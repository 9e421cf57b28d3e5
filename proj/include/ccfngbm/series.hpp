#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "ccfngbm/error.hpp"

namespace ccfngbm {

/// Minimum number of observations a model can be calibrated on.
inline constexpr std::size_t kMinModelLength = 4;

/**
 * Labeled, period-indexed sequence of strictly positive observations.
 *
 * Positivity is checked on construction. The minimum modelling length is
 * enforced where a series is calibrated on (see require_model_length), so
 * short holdout segments remain representable.
 */
class TimeSeries {
public:
    TimeSeries() = default;

    TimeSeries(std::string label, int start_period, std::vector<double> values,
               std::string unit = {})
        : label_(std::move(label)),
          unit_(std::move(unit)),
          start_(start_period),
          values_(std::move(values)) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!std::isfinite(values_[i]) || values_[i] <= 0.0) {
                fail(ErrorCategory::Validation,
                     "value at period " + std::to_string(start_ + static_cast<int>(i)) +
                         " must be a finite positive number");
            }
        }
    }

    const std::string& label() const noexcept { return label_; }
    const std::string& unit() const noexcept { return unit_; }
    int start_period() const noexcept { return start_; }
    int end_period() const noexcept { return start_ + static_cast<int>(values_.size()) - 1; }
    int period_at(std::size_t i) const noexcept { return start_ + static_cast<int>(i); }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    void require_model_length() const {
        if (values_.size() < kMinModelLength) {
            fail(ErrorCategory::Config, "series '" + label_ + "' has " +
                                            std::to_string(values_.size()) +
                                            " points; at least " +
                                            std::to_string(kMinModelLength) + " are required");
        }
    }

    /// Contiguous sub-range [first, first + count).
    TimeSeries slice(std::size_t first, std::size_t count) const {
        std::vector<double> v(values_.begin() + static_cast<std::ptrdiff_t>(first),
                              values_.begin() + static_cast<std::ptrdiff_t>(first + count));
        return TimeSeries(label_, period_at(first), std::move(v), unit_);
    }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    std::string label_;
    std::string unit_;
    int start_ = 0;
    std::vector<double> values_;
};

struct SplitSpec {
    std::size_t train_len = 0;
    std::size_t holdout_len = 0;
};

inline void validate_split(const TimeSeries& series, const SplitSpec& spec) {
    if (spec.train_len < kMinModelLength) {
        fail(ErrorCategory::Config, "train_len " + std::to_string(spec.train_len) +
                                        " is below the minimum of " +
                                        std::to_string(kMinModelLength));
    }
    if (spec.train_len + spec.holdout_len != series.size()) {
        fail(ErrorCategory::Config,
             "train_len " + std::to_string(spec.train_len) + " + holdout_len " +
                 std::to_string(spec.holdout_len) + " does not equal series length " +
                 std::to_string(series.size()));
    }
}

/// Leading train_len points and trailing holdout_len points.
inline std::pair<TimeSeries, TimeSeries> split(const TimeSeries& series, const SplitSpec& spec) {
    validate_split(series, spec);
    return {series.slice(0, spec.train_len), series.slice(spec.train_len, spec.holdout_len)};
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

/**
 * Parse `period,value` CSV text. Periods must be consecutive integers and
 * values positive reals; `source` names the input in error messages.
 */
inline TimeSeries parse_csv_text(std::string_view text, std::string label,
                                 std::string_view source = "<input>") {
    std::vector<double> values;
    int start = 0;
    int prev = 0;
    bool header_seen = false;
    std::size_t line_no = 0;

    auto where = [&] { return std::string(source) + ":" + std::to_string(line_no) + ": "; };

    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        line = detail::trim(line);
        if (line.empty()) continue;

        if (!header_seen) {
            if (line != "period,value") {
                fail(ErrorCategory::Parse, where() + "expected header 'period,value'");
            }
            header_seen = true;
            continue;
        }

        auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            fail(ErrorCategory::Parse, where() + "expected exactly two fields");
        }
        auto pfield = detail::trim(line.substr(0, comma));
        auto vfield = detail::trim(line.substr(comma + 1));

        int period = 0;
        auto pr = std::from_chars(pfield.data(), pfield.data() + pfield.size(), period);
        if (pfield.empty() || pr.ec != std::errc{} || pr.ptr != pfield.data() + pfield.size()) {
            fail(ErrorCategory::Parse, where() + "period '" + std::string(pfield) +
                                           "' is not an integer");
        }
        double value = 0.0;
        auto vr = std::from_chars(vfield.data(), vfield.data() + vfield.size(), value);
        if (vfield.empty() || vr.ec != std::errc{} || vr.ptr != vfield.data() + vfield.size()) {
            fail(ErrorCategory::Parse, where() + "value '" + std::string(vfield) +
                                           "' is not a real number");
        }

        if (values.empty()) {
            start = period;
        } else if (period != prev + 1) {
            fail(ErrorCategory::Validation,
                 where() + "periods must be consecutive (got " + std::to_string(period) +
                     " after " + std::to_string(prev) + ")");
        }
        if (!std::isfinite(value) || value <= 0.0) {
            fail(ErrorCategory::Validation, where() + "value at period " +
                                                std::to_string(period) + " must be positive");
        }
        prev = period;
        values.push_back(value);
    }

    if (!header_seen) fail(ErrorCategory::Parse, std::string(source) + ": empty input");
    TimeSeries series(std::move(label), start, std::move(values));
    series.require_model_length();
    return series;
}

inline TimeSeries parse_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCategory::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto label = path;
    if (auto slash = label.find_last_of('/'); slash != std::string::npos) label.erase(0, slash + 1);
    if (auto dot = label.rfind('.'); dot != std::string::npos) label.erase(dot);
    return parse_csv_text(buf.str(), label, path);
}

/// Shortest round-trip representation of every value.
inline std::string to_csv(const TimeSeries& series) {
    std::string out = "period,value\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += std::to_string(series.period_at(i));
        out += ',';
        out += detail::format_double(series[i]);
        out += '\n';
    }
    return out;
}

}  // namespace ccfngbm
