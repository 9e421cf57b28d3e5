#pragma once

// Independent reference implementations and random generators for tests.
// Nothing here calls into the library's numeric code.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

namespace testing_support {

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

/// Max relative error, scaled by the largest magnitude of `want` so that
/// near-zero entries of a sequence do not dominate.
inline double seq_rel_err(const std::vector<double>& got, const std::vector<double>& want) {
    if (got.size() != want.size()) return INFINITY;
    double scale = 0.0;
    for (double w : want) scale = std::max(scale, std::abs(w));
    if (scale == 0.0) scale = 1.0;
    double e = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) e = std::max(e, std::abs(got[i] - want[i]) / scale);
    return e;
}

/// Elementwise relative error; for targets bounded away from zero.
inline double elem_rel_err(const std::vector<double>& got, const std::vector<double>& want) {
    if (got.size() != want.size()) return INFINITY;
    double e = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) e = std::max(e, rel_err(got[i], want[i]));
    return e;
}

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t size(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    /// Positive sequence, values in [lo, hi].
    std::vector<double> positive(std::size_t n, double lo = 0.1, double hi = 100.0) {
        std::vector<double> x(n);
        for (auto& v : x) v = uniform(lo, hi);
        return x;
    }

private:
    std::mt19937 rng_;
};

/// [r, i] through the gamma function; valid for r > 0.
inline double binom_gamma(double r, std::size_t i) {
    if (i == 0) return 1.0;
    return std::exp(std::lgamma(r + static_cast<double>(i)) - std::lgamma(r) -
                    std::lgamma(static_cast<double>(i) + 1.0));
}

/// Coefficient by the recurrence c_i = c_{i-1} (r + i - 1) / i; any real r.
inline double binom_recurrence(double r, std::size_t i) {
    double c = 1.0;
    for (std::size_t j = 1; j <= i; ++j) c = c * (r + static_cast<double>(j) - 1.0) / static_cast<double>(j);
    return c;
}

/// Dense lower-triangular A^r applied to x.
inline std::vector<double> ago_matrix(double r, const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j) A[k][j] = binom_recurrence(r, k - j);
    std::vector<double> y(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) y[k] += A[k][j] * x[j];
    return y;
}

inline std::vector<double> cumsum(const std::vector<double>& x) {
    std::vector<double> y(x.size());
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = s += x[i];
    return y;
}

inline std::vector<double> diff(const std::vector<double>& x) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - (i ? x[i - 1] : 0.0);
    return y;
}

/// Conformable accumulation by direct double summation for alpha in (0, 1]:
/// y(k) = sum_{j<=k} x(j) / j^(1-alpha). Higher orders: weight by
/// j^(ceil(alpha)-alpha) and apply the remaining plain sums.
inline std::vector<double> cfa_oracle(double alpha, const std::vector<double>& x) {
    if (alpha == 0.0) return x;
    const int m = static_cast<int>(std::ceil(alpha));
    std::vector<double> y(x.size(), 0.0);
    for (std::size_t k = 0; k < x.size(); ++k)
        for (std::size_t j = 0; j <= k; ++j)
            y[k] += x[j] / std::pow(static_cast<double>(j + 1), static_cast<double>(m) - alpha);
    for (int s = 1; s < m; ++s) y = cumsum(y);
    return y;
}

/// 2x2 normal equations by Cramer's rule.
inline std::array<double, 2> cramer(const std::vector<std::array<double, 2>>& B,
                                    const std::vector<double>& Y) {
    double s11 = 0, s12 = 0, s22 = 0, t1 = 0, t2 = 0;
    for (std::size_t i = 0; i < B.size(); ++i) {
        s11 += B[i][0] * B[i][0];
        s12 += B[i][0] * B[i][1];
        s22 += B[i][1] * B[i][1];
        t1 += B[i][0] * Y[i];
        t2 += B[i][1] * Y[i];
    }
    const double det = s11 * s22 - s12 * s12;
    return {(t1 * s22 - s12 * t2) / det, (s11 * t2 - s12 * t1) / det};
}

/// Closed-form Bernoulli response with integer-step exponent (alpha = 1).
inline double bernoulli_response(double x1, double a, double b, double g, double k) {
    const double base = (std::pow(x1, 1.0 - g) - b / a) * std::exp(-a * (1.0 - g) * (k - 1.0)) + b / a;
    return std::pow(base, 1.0 / (1.0 - g));
}

inline double mean_ape(const std::vector<double>& actual, const std::vector<double>& pred,
                       std::size_t first, std::size_t last) {
    double s = 0.0;
    for (std::size_t i = first; i < last; ++i) s += std::abs(pred[i] - actual[i]) / actual[i] * 100.0;
    return s / static_cast<double>(last - first);
}

}  // namespace testing_support
