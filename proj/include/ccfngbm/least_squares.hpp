#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "ccfngbm/error.hpp"

namespace ccfngbm {

/// Overdetermined two-column linear system B * beta ~ Y.
struct DesignSystem {
    std::vector<std::array<double, 2>> rows;  // B
    std::vector<double> rhs;                  // Y
};

/// Conditioning threshold for the column-equilibrated normal matrix.
inline constexpr double kMaxCondition = 1e12;

struct LeastSquaresSolution {
    std::array<double, 2> beta{};
    double condition = 1.0;  // of the equilibrated normal matrix
};

/**
 * Solve the normal equations (B^T B) beta = B^T Y.
 *
 * Columns are equilibrated to unit norm first, so the condition estimate
 * measures collinearity rather than the (often enormous) scale gap between
 * -z and z^gamma. The scaled 2x2 system is factored by Cholesky.
 */
inline LeastSquaresSolution solve_least_squares(const DesignSystem& sys) {
    const std::size_t m = sys.rows.size();
    if (m < 2 || sys.rhs.size() != m) {
        fail(ErrorCategory::SingularSystem,
             "least squares needs at least 2 rows and matching Y (got " + std::to_string(m) +
                 " rows, " + std::to_string(sys.rhs.size()) + " rhs entries)");
    }

    std::array<double, 2> peak{0.0, 0.0};
    for (const auto& row : sys.rows) {
        for (int j = 0; j < 2; ++j) {
            if (!std::isfinite(row[j])) {
                fail(ErrorCategory::Estimation, "design matrix has a non-finite entry");
            }
            peak[j] = std::max(peak[j], std::abs(row[j]));
        }
    }
    for (double y : sys.rhs) {
        if (!std::isfinite(y)) fail(ErrorCategory::Estimation, "Y has a non-finite entry");
    }
    if (peak[0] == 0.0 || peak[1] == 0.0) {
        fail(ErrorCategory::SingularSystem, "design matrix has an all-zero column");
    }

    // Pre-scale by the column peak so squared sums cannot overflow, then by the norm.
    double g00 = 0.0, g01 = 0.0, g11 = 0.0, h0 = 0.0, h1 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double b0 = sys.rows[i][0] / peak[0];
        const double b1 = sys.rows[i][1] / peak[1];
        g00 += b0 * b0;
        g01 += b0 * b1;
        g11 += b1 * b1;
        h0 += b0 * sys.rhs[i];
        h1 += b1 * sys.rhs[i];
    }
    const double n0 = std::sqrt(g00);
    const double n1 = std::sqrt(g11);
    const double c = g01 / (n0 * n1);  // cosine between columns
    h0 /= n0;
    h1 /= n1;

    const double gap = 1.0 - std::abs(c);
    const double condition = gap > 0.0 ? (1.0 + std::abs(c)) / gap : INFINITY;
    if (!(condition <= kMaxCondition)) {
        std::ostringstream msg;
        msg << "normal equations are singular or ill-conditioned (condition estimate "
            << condition << " > " << kMaxCondition << ")";
        fail(ErrorCategory::SingularSystem, msg.str());
    }

    // Cholesky of [[1, c], [c, 1]].
    const double l11 = std::sqrt(1.0 - c * c);
    const double w0 = h0;
    const double w1 = (h1 - c * w0) / l11;
    const double u1 = w1 / l11;
    const double u0 = w0 - c * u1;

    LeastSquaresSolution out;
    out.beta = {u0 / (n0 * peak[0]), u1 / (n1 * peak[1])};
    out.condition = condition;
    return out;
}

/// B^T (Y - B beta), for orthogonality checks.
inline std::array<double, 2> normal_residual(const DesignSystem& sys,
                                             const std::array<double, 2>& beta) {
    std::array<double, 2> r{0.0, 0.0};
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        const double e =
            sys.rhs[i] - (sys.rows[i][0] * beta[0] + sys.rows[i][1] * beta[1]);
        r[0] += sys.rows[i][0] * e;
        r[1] += sys.rows[i][1] * e;
    }
    return r;
}

}  // namespace ccfngbm
