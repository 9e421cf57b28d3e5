#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "ccfngbm/gwo.hpp"
#include "ccfngbm/metrics.hpp"
#include "ccfngbm/model.hpp"

namespace ccfngbm {

/// Options shared by every candidate evaluated during a search.
struct SearchOptions {
    AccumulationKind accumulation = AccumulationKind::Conformable;
    RestoreMode restore = RestoreMode::ExactInverse;
};

struct SearchResult {
    HyperParams hyper;
    double best_fitness = INFINITY;
    std::vector<gwo::TraceEntry> trace;
    std::size_t evaluations = 0;
};

inline HyperParams to_hyper(ModelKind kind, const gwo::Position& p, AccumulationKind acc) {
    return pin_hyper(kind, {p[0], p[1], p[2], acc});
}

/**
 * Training MAPE (k = 2..n) of the restored fit at `candidate`.
 *
 * Candidates that violate the hyperparameter constraints, or whose fit
 * fails in estimation or evaluation, score `penalty`.
 */
inline double fitness(const gwo::Position& candidate, std::span<const double> train,
                      ModelKind kind, const SearchOptions& opts, double penalty) {
    try {
        const auto model = fit(train, kind, to_hyper(kind, candidate, opts.accumulation),
                               opts.restore);
        const double m = mape(train, fitted_values(model), 2);
        return std::isfinite(m) ? m : penalty;
    } catch (const Error& e) {
        if (e.infeasible_candidate()) return penalty;
        throw;
    }
}

/// Bounds with the kind's pinned dimensions collapsed onto their fixed value.
inline std::array<gwo::Interval, gwo::kDims> kind_bounds(
    ModelKind kind, const std::array<gwo::Interval, gwo::kDims>& bounds) {
    const auto free = free_dimensions(kind);
    const auto pinned = pin_hyper(kind, {});
    const double fixed[gwo::kDims] = {pinned.r, pinned.alpha, pinned.gamma};
    auto out = bounds;
    for (std::size_t d = 0; d < gwo::kDims; ++d) {
        if (!free[d]) out[d] = {fixed[d], fixed[d]};
    }
    return out;
}

/// GWO search over the kind's free hyperparameters, minimizing training MAPE.
inline SearchResult optimize(std::span<const double> train, ModelKind kind,
                             const gwo::GwoConfig& cfg, const SearchOptions& opts = {}) {
    const auto free = free_dimensions(kind);
    if (!free[0] && !free[1] && !free[2]) {
        fail(ErrorCategory::Config,
             std::string(display_name(kind)) + " has no hyperparameters to optimize");
    }
    auto local = cfg;
    local.bounds = kind_bounds(kind, cfg.bounds);
    const double penalty = cfg.penalty;
    auto fn = [&](const gwo::Position& p) { return fitness(p, train, kind, opts, penalty); };
    const auto res = gwo::optimize(fn, local);

    SearchResult out;
    out.hyper = to_hyper(kind, res.best, opts.accumulation);
    out.best_fitness = res.best_fitness;
    out.trace = res.trace;
    out.evaluations = res.evaluations;
    return out;
}

inline SearchResult optimize(const TimeSeries& train, ModelKind kind, const gwo::GwoConfig& cfg,
                             const SearchOptions& opts = {}) {
    train.require_model_length();
    return optimize(train.values(), kind, cfg, opts);
}

}  // namespace ccfngbm
