#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccfngbm/error.hpp"

namespace ccfngbm {

/// Accumulation operator family.
enum class AccumulationKind {
    ClassicalBinomial,  // lower-triangular binomial matrix A^r
    Conformable,        // conformable fractional accumulation / difference
};

inline std::string_view to_string(AccumulationKind k) {
    return k == AccumulationKind::Conformable ? "conformable" : "classical";
}

inline AccumulationKind accumulation_from_string(std::string_view s) {
    if (s == "conformable" || s == "cfa") return AccumulationKind::Conformable;
    if (s == "classical" || s == "binomial") return AccumulationKind::ClassicalBinomial;
    fail(ErrorCategory::Lookup,
         "unknown accumulation '" + std::string(s) + "'; valid: conformable, classical");
}

/// Generalized binomial coefficient r(r+1)...(r+i-1)/i!.
inline double frac_binomial_coefficient(double r, std::size_t i) {
    double c = 1.0;
    for (std::size_t m = 0; m < i; ++m) {
        c *= (r + static_cast<double>(m)) / static_cast<double>(m + 1);
    }
    return c;
}

/// y = A^r x. Negative r gives the inverse operator A^(-r); r = 0 is the identity.
inline std::vector<double> classical_ago(double r, std::span<const double> x) {
    const std::size_t n = x.size();
    if (r == 0.0) return {x.begin(), x.end()};

    std::vector<double> coef(n);
    for (std::size_t i = 0; i < n; ++i) coef[i] = frac_binomial_coefficient(r, i);

    std::vector<double> y(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j <= k; ++j) s += coef[k - j] * x[j];
        y[k] = s;
    }
    return y;
}

namespace detail {

// Integer orders belong to the branch closed on the right: alpha in (n-1, n]
// takes ceil(alpha) = n sums with weight exponent n - alpha.
inline std::size_t conformable_sum_count(double alpha) {
    return static_cast<std::size_t>(std::ceil(alpha));
}

inline void check_conformable_order(double alpha, std::string_view op) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        fail(ErrorCategory::Domain, std::string(op) + ": order must be finite and >= 0, got " +
                                        std::to_string(alpha));
    }
}

}  // namespace detail

/**
 * Conformable fractional accumulation of order alpha.
 *
 * For alpha in (n-1, n]: divide x(k) by k^(n - alpha), then take n plain
 * cumulative sums. alpha = 0 is the identity.
 */
inline std::vector<double> cfa(double alpha, std::span<const double> x) {
    detail::check_conformable_order(alpha, "cfa");
    std::vector<double> y(x.begin(), x.end());
    if (alpha == 0.0) return y;

    const std::size_t sums = detail::conformable_sum_count(alpha);
    const double weight_exp = static_cast<double>(sums) - alpha;
    if (weight_exp != 0.0) {
        for (std::size_t k = 0; k < y.size(); ++k) {
            y[k] /= std::pow(static_cast<double>(k + 1), weight_exp);
        }
    }
    for (std::size_t s = 0; s < sums; ++s) {
        for (std::size_t k = 1; k < y.size(); ++k) y[k] += y[k - 1];
    }
    return y;
}

/// Conformable fractional difference; exact left inverse of cfa at the same order.
/// Uses x(0) = 0, so the first output equals the first input.
inline std::vector<double> cfd(double alpha, std::span<const double> x) {
    detail::check_conformable_order(alpha, "cfd");
    std::vector<double> y(x.begin(), x.end());
    if (alpha == 0.0) return y;

    const std::size_t diffs = detail::conformable_sum_count(alpha);
    for (std::size_t d = 0; d < diffs; ++d) {
        for (std::size_t k = y.size(); k-- > 1;) y[k] -= y[k - 1];
    }
    const double weight_exp = static_cast<double>(diffs) - alpha;
    if (weight_exp != 0.0) {
        for (std::size_t k = 0; k < y.size(); ++k) {
            y[k] *= std::pow(static_cast<double>(k + 1), weight_exp);
        }
    }
    return y;
}

/// Plain first difference with x(0) = 0.
inline std::vector<double> first_difference(std::span<const double> x) {
    std::vector<double> y(x.begin(), x.end());
    for (std::size_t k = y.size(); k-- > 1;) y[k] -= y[k - 1];
    return y;
}

/// Forward accumulation of the chosen family.
inline std::vector<double> accumulate(AccumulationKind kind, double order,
                                      std::span<const double> x) {
    return kind == AccumulationKind::Conformable ? cfa(order, x) : classical_ago(order, x);
}

/// Inverse accumulation of the chosen family at the given order.
inline std::vector<double> inverse_accumulate(AccumulationKind kind, double order,
                                              std::span<const double> x) {
    return kind == AccumulationKind::Conformable ? cfd(order, x) : classical_ago(-order, x);
}

}  // namespace ccfngbm
