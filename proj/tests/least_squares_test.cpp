#include <gtest/gtest.h>

#include <vector>

#include "ccfngbm/least_squares.hpp"
#include "support.hpp"

using namespace ccfngbm;
using namespace testing_support;

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

}  // namespace

TEST(LeastSquares, ExactRecovery) {
    // Y = -a z + b z^0 with (a, b) = (2, 7).
    DesignSystem sys;
    for (double z : {1.5, 3.0, 4.25, 9.0, 11.5}) {
        sys.rows.push_back({-z, 1.0});
        sys.rhs.push_back(-2.0 * z + 7.0);
    }
    const auto sol = solve_least_squares(sys);
    EXPECT_NEAR(sol.beta[0], 2.0, 1e-10);
    EXPECT_NEAR(sol.beta[1], 7.0, 1e-10);
}

TEST(LeastSquares, MatchesCramerOracle) {
    Gen g(31);
    for (int t = 0; t < 100; ++t) {
        DesignSystem sys;
        for (int i = 0; i < 8; ++i) {
            sys.rows.push_back({g.uniform(-10, 10), g.uniform(-10, 10)});
            sys.rhs.push_back(g.uniform(-10, 10));
        }
        const auto want = cramer(sys.rows, sys.rhs);
        const auto got = solve_least_squares(sys).beta;
        EXPECT_LE(rel_err(got[0], want[0]), 1e-10);
        EXPECT_LE(rel_err(got[1], want[1]), 1e-10);
    }
}

// Columns of wildly different magnitude, as with -z against z^gamma.
TEST(LeastSquares, BadlyScaledColumns) {
    Gen g(32);
    for (int t = 0; t < 50; ++t) {
        DesignSystem sys;
        for (int i = 0; i < 10; ++i) {
            const double z = g.uniform(100, 1000);
            sys.rows.push_back({-z, std::pow(z, 6.0)});
            sys.rhs.push_back(g.uniform(100, 1000));
        }
        const auto want = cramer(sys.rows, sys.rhs);
        const auto got = solve_least_squares(sys).beta;
        EXPECT_LE(rel_err(got[0], want[0]), 1e-6);
        EXPECT_LE(rel_err(got[1], want[1]), 1e-6);
    }
}

TEST(LeastSquares, ResidualOrthogonality) {
    Gen g(33);
    for (int t = 0; t < 100; ++t) {
        DesignSystem sys;
        double scale = 0.0;
        for (int i = 0; i < 12; ++i) {
            sys.rows.push_back({-g.uniform(1, 50), g.uniform(0.5, 2)});
            sys.rhs.push_back(g.uniform(-20, 20));
        }
        const auto beta = solve_least_squares(sys).beta;
        const auto res = normal_residual(sys, beta);
        for (std::size_t j = 0; j < 2; ++j) {
            double col = 0.0;
            for (std::size_t i = 0; i < sys.rows.size(); ++i)
                col += std::abs(sys.rows[i][j] * sys.rhs[i]);
            scale = std::max(scale, col);
        }
        EXPECT_LE(std::abs(res[0]) / scale, 1e-8);
        EXPECT_LE(std::abs(res[1]) / scale, 1e-8);
    }
}

TEST(LeastSquares, ProportionalColumnsAreSingular) {
    // gamma = 1: z^1 is -1 times the first column.
    DesignSystem sys;
    for (double z : {2.0, 4.5, 8.0, 13.0}) {
        sys.rows.push_back({-z, z});
        sys.rhs.push_back(z + 1.0);
    }
    EXPECT_EQ(category_of([&] { solve_least_squares(sys); }), ErrorCategory::SingularSystem);
}

TEST(LeastSquares, NearSingularReportsCondition) {
    DesignSystem sys;
    for (double z : {2.0, 4.5, 8.0, 13.0}) {
        sys.rows.push_back({-z, z * (1.0 + 1e-15 * z)});
        sys.rhs.push_back(z);
    }
    try {
        solve_least_squares(sys);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.category(), ErrorCategory::SingularSystem);
        EXPECT_NE(std::string(e.what()).find("condition"), std::string::npos);
    }
}

TEST(LeastSquares, DegenerateInputs) {
    DesignSystem one{{{1.0, 2.0}}, {3.0}};
    EXPECT_EQ(category_of([&] { solve_least_squares(one); }), ErrorCategory::SingularSystem);
    DesignSystem zero{{{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}}, {1.0, 2.0, 3.0}};
    EXPECT_EQ(category_of([&] { solve_least_squares(zero); }), ErrorCategory::SingularSystem);
    DesignSystem inf{{{1.0, 1.0}, {INFINITY, 0.0}, {3.0, 2.0}}, {1.0, 2.0, 3.0}};
    EXPECT_EQ(category_of([&] { solve_least_squares(inf); }), ErrorCategory::Estimation);
}
