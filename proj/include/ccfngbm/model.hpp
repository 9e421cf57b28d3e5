#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccfngbm/accumulation.hpp"
#include "ccfngbm/error.hpp"
#include "ccfngbm/least_squares.hpp"
#include "ccfngbm/series.hpp"

namespace ccfngbm {

enum class ModelKind { GM, DGM, NGBM, FNGBM, CCFNGBM };

inline constexpr std::array<ModelKind, 5> kAllKinds{ModelKind::GM, ModelKind::DGM,
                                                    ModelKind::NGBM, ModelKind::FNGBM,
                                                    ModelKind::CCFNGBM};

inline std::string_view to_string(ModelKind k) {
    switch (k) {
        case ModelKind::GM: return "gm";
        case ModelKind::DGM: return "dgm";
        case ModelKind::NGBM: return "ngbm";
        case ModelKind::FNGBM: return "fngbm";
        case ModelKind::CCFNGBM: return "ccfngbm";
    }
    return "?";
}

inline std::string_view display_name(ModelKind k) {
    switch (k) {
        case ModelKind::GM: return "GM(1,1)";
        case ModelKind::DGM: return "DGM(1,1)";
        case ModelKind::NGBM: return "NGBM(1,1)";
        case ModelKind::FNGBM: return "FNGBM(1,1)";
        case ModelKind::CCFNGBM: return "CCFNGBM(1,1)";
    }
    return "?";
}

inline ModelKind model_kind_from_string(std::string_view s) {
    for (auto k : kAllKinds) {
        if (to_string(k) == s) return k;
    }
    fail(ErrorCategory::Lookup,
         "unknown model '" + std::string(s) + "'; valid: gm, dgm, ngbm, fngbm, ccfngbm");
}

/// How predicted accumulated values are mapped back to the original scale.
enum class RestoreMode {
    ExactInverse,  // inverse operator of the accumulation family at order r
    PlainDiff,     // first difference regardless of r
};

inline std::string_view to_string(RestoreMode m) {
    return m == RestoreMode::PlainDiff ? "plain-diff" : "exact-inverse";
}

inline RestoreMode restore_mode_from_string(std::string_view s) {
    if (s == "exact-inverse") return RestoreMode::ExactInverse;
    if (s == "plain-diff") return RestoreMode::PlainDiff;
    fail(ErrorCategory::Lookup,
         "unknown restore mode '" + std::string(s) + "'; valid: exact-inverse, plain-diff");
}

inline constexpr double kGammaExclusion = 1e-6;
inline constexpr double kMinDevelopment = 1e-12;

/// Accumulation order r, conformable derivative order alpha, Bernoulli exponent gamma.
struct HyperParams {
    double r = 1.0;
    double alpha = 1.0;
    double gamma = 0.0;
    AccumulationKind accumulation = AccumulationKind::Conformable;

    friend bool operator==(const HyperParams&, const HyperParams&) = default;
};

/// Throws a Domain error when the triple is outside the model's definition.
/// r >= alpha only binds for the conformable family, whose operators are
/// undefined at negative order.
inline void validate(const HyperParams& h) {
    auto bad = [](const std::string& what) { fail(ErrorCategory::Domain, what); };
    if (!std::isfinite(h.r) || !std::isfinite(h.alpha) || !std::isfinite(h.gamma))
        bad("hyperparameters must be finite");
    if (!(h.r > 0.0)) bad("r must be > 0, got " + std::to_string(h.r));
    if (!(h.alpha > 0.0 && h.alpha <= 1.0))
        bad("alpha must lie in (0, 1], got " + std::to_string(h.alpha));
    if (std::abs(h.gamma - 1.0) < kGammaExclusion) bad("gamma = 1 is excluded");
    if (h.accumulation == AccumulationKind::Conformable && h.r < h.alpha)
        bad("conformable accumulation requires r >= alpha");
}

/// Which of (r, alpha, gamma) a kind leaves free.
inline std::array<bool, 3> free_dimensions(ModelKind kind) {
    switch (kind) {
        case ModelKind::GM:
        case ModelKind::DGM: return {false, false, false};
        case ModelKind::NGBM: return {false, false, true};
        case ModelKind::FNGBM: return {true, false, true};
        case ModelKind::CCFNGBM: return {true, true, true};
    }
    return {false, false, false};
}

/// Apply the kind's fixed hyperparameters; free entries of `h` pass through.
inline HyperParams pin_hyper(ModelKind kind, HyperParams h) {
    switch (kind) {
        case ModelKind::GM:
        case ModelKind::DGM:
            return {1.0, 1.0, 0.0, AccumulationKind::ClassicalBinomial};
        case ModelKind::NGBM:
            return {1.0, 1.0, h.gamma, AccumulationKind::ClassicalBinomial};
        case ModelKind::FNGBM:
            return {h.r, 1.0, h.gamma, AccumulationKind::ClassicalBinomial};
        case ModelKind::CCFNGBM: return h;
    }
    return h;
}

/// Development coefficient a and grey action b. For DGM these hold the
/// recursion coefficients beta1 and beta2.
struct StructuralParams {
    double a = 0.0;
    double b = 0.0;
};

struct FittedModel {
    ModelKind kind = ModelKind::CCFNGBM;
    HyperParams hyper;
    StructuralParams structural;
    double x1 = 0.0;
    std::size_t train_len = 0;
    RestoreMode restore = RestoreMode::ExactInverse;
};

/// Trapezoidal background values z(k) = (x(k) + x(k-1)) / 2 for k = 2..n.
inline std::vector<double> background(std::span<const double> xr) {
    std::vector<double> z;
    if (xr.size() < 2) return z;
    z.reserve(xr.size() - 1);
    for (std::size_t k = 1; k < xr.size(); ++k) z.push_back(0.5 * (xr[k] + xr[k - 1]));
    return z;
}

namespace detail {

inline bool is_integer(double v) { return std::isfinite(v) && std::floor(v) == v; }

}  // namespace detail

/**
 * Design system x^(r-alpha)(k) = -a z(k) + b z(k)^gamma, k = 2..n.
 *
 * Both X^(r) and the Y column are accumulations of the raw series in the
 * same family, at orders r and r - alpha.
 */
inline DesignSystem assemble(std::span<const double> train, const HyperParams& hyper) {
    validate(hyper);
    if (train.size() < kMinModelLength) {
        fail(ErrorCategory::Config, "at least " + std::to_string(kMinModelLength) +
                                        " training points are required");
    }
    const auto xr = accumulate(hyper.accumulation, hyper.r, train);
    const auto z = background(xr);
    const auto y = accumulate(hyper.accumulation, hyper.r - hyper.alpha, train);

    const bool integral_gamma = detail::is_integer(hyper.gamma);
    DesignSystem sys;
    sys.rows.reserve(z.size());
    sys.rhs.reserve(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const std::size_t k = i + 2;
        if ((z[i] < 0.0 && !integral_gamma) || (z[i] == 0.0 && hyper.gamma < 0.0)) {
            fail(ErrorCategory::Estimation,
                 "background value z(" + std::to_string(k) + ") = " + std::to_string(z[i]) +
                     " cannot be raised to gamma = " + std::to_string(hyper.gamma));
        }
        sys.rows.push_back({-z[i], std::pow(z[i], hyper.gamma)});
        sys.rhs.push_back(y[i + 1]);
    }
    return sys;
}

inline StructuralParams least_squares(const DesignSystem& sys) {
    const auto sol = solve_least_squares(sys);
    const StructuralParams p{sol.beta[0], sol.beta[1]};
    if (!std::isfinite(p.a) || !std::isfinite(p.b)) {
        fail(ErrorCategory::Estimation, "least squares produced non-finite parameters");
    }
    if (std::abs(p.a) < kMinDevelopment) {
        fail(ErrorCategory::Estimation, "development coefficient a is zero; b/a is undefined");
    }
    return p;
}

/**
 * Accumulated-scale response at (possibly non-integer) time t >= 1:
 *
 *   x(t) = {[x1^(1-g) - b/a] exp(-(a/alpha)(1-g)(t^alpha - 1)) + b/a}^(1/(1-g))
 *
 * DGM uses its discrete recursion instead. Returns x1 exactly at t = 1.
 */
inline double time_response(const FittedModel& model, double t) {
    if (t == 1.0) return model.x1;
    const double a = model.structural.a;
    const double b = model.structural.b;

    if (model.kind == ModelKind::DGM) {
        // x(k+1) = beta1 x(k) + beta2 with beta1 = a, beta2 = b.
        const double steps = t - 1.0;
        if (a == 1.0) return model.x1 + b * steps;
        const double fixed = b / (1.0 - a);
        const double v = std::pow(a, steps) * (model.x1 - fixed) + fixed;
        if (!std::isfinite(v)) {
            fail(ErrorCategory::EvaluationDomain, "DGM response is not finite at t = " +
                                                      std::to_string(t));
        }
        return v;
    }

    const auto& h = model.hyper;
    const double one_minus_g = 1.0 - h.gamma;
    const double ratio = b / a;
    const double decay = std::exp(-(a / h.alpha) * one_minus_g * (std::pow(t, h.alpha) - 1.0));
    const double base = (std::pow(model.x1, one_minus_g) - ratio) * decay + ratio;
    const double expo = 1.0 / one_minus_g;

    if (!std::isfinite(base) || (base < 0.0 && !detail::is_integer(expo)) ||
        (base == 0.0 && expo < 0.0)) {
        fail(ErrorCategory::EvaluationDomain,
             "response base " + std::to_string(base) + " at t = " + std::to_string(t) +
                 " cannot be raised to 1/(1-gamma) = " + std::to_string(expo));
    }
    const double v = std::pow(base, expo);
    if (!std::isfinite(v)) {
        fail(ErrorCategory::EvaluationDomain,
             "response is not finite at t = " + std::to_string(t));
    }
    return v;
}

/// Map accumulated predictions back to the original scale.
inline std::vector<double> restore(const FittedModel& model, std::span<const double> xr_hat) {
    if (model.restore == RestoreMode::PlainDiff) return first_difference(xr_hat);
    return inverse_accumulate(model.hyper.accumulation, model.hyper.r, xr_hat);
}

/// Accumulated-scale responses for k = 1..count.
inline std::vector<double> predict_accumulated(const FittedModel& model, std::size_t count) {
    std::vector<double> xr(count);
    for (std::size_t k = 0; k < count; ++k) xr[k] = time_response(model, static_cast<double>(k + 1));
    return xr;
}

/// Original-scale predictions for k = 1..count (fit stage, then extrapolation).
inline std::vector<double> predict(const FittedModel& model, std::size_t count) {
    auto out = restore(model, predict_accumulated(model, count));
    for (double v : out) {
        if (!std::isfinite(v)) {
            fail(ErrorCategory::EvaluationDomain, "restored prediction is not finite");
        }
    }
    return out;
}

namespace detail {

inline FittedModel fit_dgm(std::span<const double> train, RestoreMode restore) {
    const auto x1 = classical_ago(1.0, train);
    DesignSystem sys;
    for (std::size_t k = 0; k + 1 < x1.size(); ++k) {
        sys.rows.push_back({x1[k], 1.0});
        sys.rhs.push_back(x1[k + 1]);
    }
    const auto sol = solve_least_squares(sys);
    FittedModel m;
    m.kind = ModelKind::DGM;
    m.hyper = pin_hyper(ModelKind::DGM, {});
    m.structural = {sol.beta[0], sol.beta[1]};
    m.x1 = train.front();
    m.train_len = train.size();
    m.restore = restore;
    return m;
}

}  // namespace detail

/// Estimate structural parameters for `kind` on the training window.
/// Fixed hyperparameters of reduced kinds override whatever `hyper` carries.
inline FittedModel fit(std::span<const double> train, ModelKind kind, const HyperParams& hyper,
                       RestoreMode restore = RestoreMode::ExactInverse) {
    if (train.size() < kMinModelLength) {
        fail(ErrorCategory::Config, "at least " + std::to_string(kMinModelLength) +
                                        " training points are required");
    }
    if (kind == ModelKind::DGM) return detail::fit_dgm(train, restore);

    FittedModel m;
    m.kind = kind;
    m.hyper = pin_hyper(kind, hyper);
    m.structural = least_squares(assemble(train, m.hyper));
    m.x1 = train.front();
    m.train_len = train.size();
    m.restore = restore;
    return m;
}

inline FittedModel fit(const TimeSeries& train, ModelKind kind, const HyperParams& hyper,
                       RestoreMode restore = RestoreMode::ExactInverse) {
    train.require_model_length();
    return fit(train.values(), kind, hyper, restore);
}

/// Restored in-sample values for k = 1..train_len.
inline std::vector<double> fitted_values(const FittedModel& model) {
    return predict(model, model.train_len);
}

/// The `horizon` values following the training window (k = n+1 .. n+horizon).
inline std::vector<double> forecast(const FittedModel& model, std::size_t horizon) {
    if (horizon == 0) fail(ErrorCategory::Config, "forecast horizon must be >= 1");
    auto all = predict(model, model.train_len + horizon);
    return {all.end() - static_cast<std::ptrdiff_t>(horizon), all.end()};
}

}  // namespace ccfngbm
