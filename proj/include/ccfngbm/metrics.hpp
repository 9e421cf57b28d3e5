#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "ccfngbm/error.hpp"

namespace ccfngbm {

/// Absolute percentage error |predicted - actual| / actual * 100.
inline double ape(double actual, double predicted) {
    if (!(actual > 0.0)) {
        fail(ErrorCategory::Domain, "APE needs a positive actual value, got " +
                                        std::to_string(actual));
    }
    return std::abs(predicted - actual) / actual * 100.0;
}

/**
 * Mean APE over the 1-based positions start_k..n. Fit-stage errors use
 * start_k = 2 since the first point is the model's anchor; holdout errors
 * use start_k = 1.
 */
inline double mape(std::span<const double> actual, std::span<const double> predicted,
                   std::size_t start_k = 2) {
    if (actual.size() != predicted.size()) {
        fail(ErrorCategory::Domain, "MAPE needs equal-length sequences (" +
                                        std::to_string(actual.size()) + " vs " +
                                        std::to_string(predicted.size()) + ")");
    }
    if (start_k < 1 || start_k > actual.size()) {
        fail(ErrorCategory::Domain, "MAPE range is empty");
    }
    double sum = 0.0;
    for (std::size_t i = start_k - 1; i < actual.size(); ++i) sum += ape(actual[i], predicted[i]);
    return sum / static_cast<double>(actual.size() - start_k + 1);
}

enum class LewisGrade { HighlyAccurate, Good, Reasonable, Inaccurate };

/// Lewis bands: <10 highly accurate, [10,20) good, [20,50) reasonable, >=50 inaccurate.
inline LewisGrade lewis_grade(double mape_percent) {
    if (mape_percent < 10.0) return LewisGrade::HighlyAccurate;
    if (mape_percent < 20.0) return LewisGrade::Good;
    if (mape_percent < 50.0) return LewisGrade::Reasonable;
    return LewisGrade::Inaccurate;
}

inline std::string_view to_string(LewisGrade g) {
    switch (g) {
        case LewisGrade::HighlyAccurate: return "highly-accurate";
        case LewisGrade::Good: return "good";
        case LewisGrade::Reasonable: return "reasonable";
        case LewisGrade::Inaccurate: return "inaccurate";
    }
    return "?";
}

}  // namespace ccfngbm
