#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ccfngbm/error.hpp"

namespace ccfngbm::gwo {

inline constexpr std::size_t kDims = 3;

using Position = std::array<double, kDims>;
using FitnessFn = std::function<double(const Position&)>;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double v) const { return v >= lo && v <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct GwoConfig {
    std::size_t population = 30;
    std::size_t iterations = 200;
    // r, alpha, gamma
    std::array<Interval, kDims> bounds{{{0.05, 3.0}, {0.01, 1.0}, {-10.0, 10.0}}};
    std::uint64_t seed = 42;
    double penalty = 1e9;
    // Fitness evaluations per iteration are spread over this many threads.
    std::size_t workers = 1;
};

inline void validate(const GwoConfig& cfg) {
    if (cfg.population < 4) {
        fail(ErrorCategory::Config, "GWO population must be >= 4, got " +
                                        std::to_string(cfg.population));
    }
    if (cfg.iterations < 1) fail(ErrorCategory::Config, "GWO iterations must be >= 1");
    for (const auto& b : cfg.bounds) {
        if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || b.lo > b.hi) {
            fail(ErrorCategory::Config, "GWO bounds must be finite with lo <= hi");
        }
    }
    if (cfg.workers < 1) fail(ErrorCategory::Config, "GWO workers must be >= 1");
}

struct Leader {
    Position position{};
    double fitness = INFINITY;
};

/// Pack state: wolf positions, the alpha/beta/delta leaders (best first),
/// the iteration counter and the exploration control a = 2 (1 - t/T).
struct WolfState {
    std::vector<Position> positions;
    std::array<Leader, 3> leaders{};
    std::size_t iteration = 0;
    double control = 2.0;
    std::mt19937_64 rng;
};

struct TraceEntry {
    std::size_t iteration = 0;
    double best_fitness = INFINITY;
    Position best{};
};

struct GwoResult {
    Position best{};
    double best_fitness = INFINITY;
    std::vector<TraceEntry> trace;
    std::size_t evaluations = 0;
};

/// Thrown when no feasible candidate was found; carries the trace.
class OptimizationError : public Error {
public:
    OptimizationError(const std::string& message, std::vector<TraceEntry> trace)
        : Error(ErrorCategory::OptimizationFailure, message), trace_(std::move(trace)) {}

    const std::vector<TraceEntry>& trace() const noexcept { return trace_; }

private:
    std::vector<TraceEntry> trace_;
};

inline double control_at(std::size_t t, std::size_t total) {
    return 2.0 * (1.0 - static_cast<double>(t) / static_cast<double>(total));
}

inline Position clamp(Position p, const std::array<Interval, kDims>& bounds) {
    for (std::size_t d = 0; d < kDims; ++d) p[d] = std::clamp(p[d], bounds[d].lo, bounds[d].hi);
    return p;
}

namespace detail {

inline std::vector<double> evaluate_all(const std::vector<Position>& positions,
                                        const FitnessFn& fitness, std::size_t workers) {
    std::vector<double> out(positions.size());
    if (workers <= 1 || positions.size() < 2) {
        for (std::size_t i = 0; i < positions.size(); ++i) {
            out[i] = fitness(positions[i]);
            if (std::isnan(out[i])) out[i] = INFINITY;
        }
        return out;
    }
    const std::size_t chunks = std::min(workers, positions.size());
    std::vector<std::future<void>> jobs;
    jobs.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        jobs.push_back(std::async(std::launch::async, [&, c] {
            for (std::size_t i = c; i < positions.size(); i += chunks)
                out[i] = fitness(positions[i]);
        }));
    }
    for (auto& j : jobs) j.get();
    for (double& v : out) {
        if (std::isnan(v)) v = INFINITY;
    }
    return out;
}

// Wolves are visited in order; an improving wolf replaces the first leader it
// beats without demoting the others. Leaders stay sorted and alpha is the
// best fitness ever evaluated.
inline void update_leaders(std::array<Leader, 3>& leaders, const std::vector<Position>& positions,
                           const std::vector<double>& fitness) {
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const double f = fitness[i];
        if (f < leaders[0].fitness) {
            leaders[0] = {positions[i], f};
        } else if (f < leaders[1].fitness) {
            leaders[1] = {positions[i], f};
        } else if (f < leaders[2].fitness) {
            leaders[2] = {positions[i], f};
        }
    }
}

}  // namespace detail

/// Uniform initial pack, evaluated, with leaders taken from it.
inline WolfState initialize(const GwoConfig& cfg, const FitnessFn& fitness) {
    validate(cfg);
    WolfState s;
    s.rng.seed(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    s.positions.resize(cfg.population);
    for (auto& p : s.positions) {
        for (std::size_t d = 0; d < kDims; ++d) {
            p[d] = cfg.bounds[d].lo + unit(s.rng) * (cfg.bounds[d].hi - cfg.bounds[d].lo);
        }
    }
    const auto f = detail::evaluate_all(s.positions, fitness, cfg.workers);
    detail::update_leaders(s.leaders, s.positions, f);
    s.iteration = 0;
    s.control = control_at(0, cfg.iterations);
    return s;
}

/**
 * One hunting iteration.
 *
 * Each wolf X moves to the mean of three leader-guided positions
 *   X_l - A * |C * X_l - X|,  A = 2 a r1 - a,  C = 2 r2,
 * one per leader with fresh r1, r2 per dimension, then is clamped to bounds.
 * All random numbers are drawn before any fitness evaluation.
 */
inline WolfState step(WolfState state, const GwoConfig& cfg, const FitnessFn& fitness) {
    const double a = state.control;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Position> next(state.positions.size());
    for (std::size_t i = 0; i < state.positions.size(); ++i) {
        const Position& x = state.positions[i];
        Position sum{};
        for (const auto& leader : state.leaders) {
            for (std::size_t d = 0; d < kDims; ++d) {
                const double r1 = unit(state.rng);
                const double r2 = unit(state.rng);
                const double A = 2.0 * a * r1 - a;
                const double C = 2.0 * r2;
                const double D = std::abs(C * leader.position[d] - x[d]);
                sum[d] += leader.position[d] - A * D;
            }
        }
        for (std::size_t d = 0; d < kDims; ++d) sum[d] /= 3.0;
        next[i] = clamp(sum, cfg.bounds);
    }

    const auto f = detail::evaluate_all(next, fitness, cfg.workers);
    state.positions = std::move(next);
    detail::update_leaders(state.leaders, state.positions, f);
    ++state.iteration;
    state.control = control_at(state.iteration, cfg.iterations);
    return state;
}

/// Full search. trace[0] is the initial pack; trace[t] follows iteration t.
inline GwoResult optimize(const FitnessFn& fitness, const GwoConfig& cfg) {
    GwoResult res;
    auto state = initialize(cfg, fitness);
    res.evaluations = cfg.population;
    res.trace.push_back({0, state.leaders[0].fitness, state.leaders[0].position});

    for (std::size_t t = 0; t < cfg.iterations; ++t) {
        state = step(std::move(state), cfg, fitness);
        res.evaluations += cfg.population;
        res.trace.push_back({state.iteration, state.leaders[0].fitness, state.leaders[0].position});
    }

    res.best = state.leaders[0].position;
    res.best_fitness = state.leaders[0].fitness;
    if (!(res.best_fitness < cfg.penalty)) {
        throw OptimizationError("every candidate was infeasible after " +
                                    std::to_string(cfg.iterations) + " iterations",
                                std::move(res.trace));
    }
    return res;
}

}  // namespace ccfngbm::gwo
