#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccfngbm/evaluation.hpp"
#include "ccfngbm/fixtures.hpp"
#include "ccfngbm/model.hpp"
#include "ccfngbm/report.hpp"

namespace ccfngbm {

struct ReferenceForecast {
    int period = 0;
    double value = 0.0;
};

/// Reference CCFNGBM results for a bundled case, used as reproduction targets.
struct CaseReference {
    std::string_view fixture;
    double r = 0.0;
    double alpha = 0.0;
    double gamma = 0.0;
    std::vector<double> fitted;  // k = 1..n, fit and holdout stages
    double fit_mape = 0.0;
    double holdout_mape = 0.0;
    std::optional<StructuralParams> gm_reduction;
    std::optional<ReferenceForecast> forecast;
};

inline const std::vector<CaseReference>& case_references() {
    static const std::vector<CaseReference> refs{
        {"shanghai-diesel", 0.6660, 0.0958, 6.0956,
         {176.44, 210.14, 251.08, 288.31, 322.94, 355.65, 386.83, 416.68, 445.21, 472.28, 497.54,
          520.44, 540.13, 555.52, 565.28, 567.93, 562.10, 546.77},
         3.66, 0.34, std::nullopt, std::nullopt},
        {"germany-co2", 1.6713, 0.3242, 0.9512,
         {806.50, 752.18, 758.17, 765.19, 770.13, 771.67, 770.16, 766.18, 760.22, 752.70, 743.96},
         1.52, 1.91, std::nullopt, std::nullopt},
        {"china-co2", 0.938, 0.3037, 1.3164,
         {3593.10, 3912.12, 4680.63, 5378.46, 6007.43, 6573.08, 7080.43, 7533.91, 7937.51, 8294.91,
          8609.54, 8884.59, 9123.09, 9327.86, 9501.56, 9646.68, 9765.55, 9860.35, 9933.12},
         2.10, 1.33, StructuralParams{-0.0439, 5136.16}, ReferenceForecast{2023, 10039.80}},
    };
    return refs;
}

/// Case names accepted by reproduce: fixture names plus short aliases.
inline const CaseReference& case_reference(std::string_view name) {
    std::string_view fixture = name;
    if (name == "shanghai") fixture = "shanghai-diesel";
    if (name == "germany") fixture = "germany-co2";
    if (name == "china") fixture = "china-co2";
    for (const auto& c : case_references()) {
        if (c.fixture == fixture) return c;
    }
    fail(ErrorCategory::Lookup, "unknown case '" + std::string(name) +
                                    "'; valid: shanghai, germany, china (or " + fixture_names() +
                                    ")");
}

struct ModeResult {
    AccumulationKind accumulation = AccumulationKind::Conformable;
    bool ok = false;
    std::string error;
    std::optional<FittedModel> model;
    std::vector<double> predicted;  // k = 1..n
    std::optional<EvaluationReport> evaluation;
    double max_rel_deviation = INFINITY;   // vs reference column, k = 2..n
    double mean_rel_deviation = INFINITY;
    std::vector<double> forecast;          // periods after the data, up to the reference forecast year
};

struct Reproduction {
    const CaseReference* reference = nullptr;
    TimeSeries series;
    SplitSpec split;
    std::vector<ModeResult> modes;  // conformable, classical
    std::size_t best_mode = 0;      // index into modes with the smallest mean deviation
    std::optional<StructuralParams> gm_reduction;
    std::vector<std::string> notes;

    const ModeResult& best() const { return modes[best_mode]; }
};

/**
 * Fit CCFNGBM at the reference hyperparameters under both accumulation
 * families and measure each against the reference column.
 */
inline Reproduction reproduce_case(std::string_view name,
                                   RestoreMode restore = RestoreMode::ExactInverse) {
    const auto& ref = case_reference(name);
    const auto& info = fixture_info(ref.fixture);
    Reproduction rep;
    rep.reference = &ref;
    rep.series = load_fixture(ref.fixture);
    rep.split = info.split;
    const auto [train, holdout] = split(rep.series, rep.split);

    for (auto acc : {AccumulationKind::Conformable, AccumulationKind::ClassicalBinomial}) {
        ModeResult m;
        m.accumulation = acc;
        try {
            m.model = fit(train, ModelKind::CCFNGBM, {ref.r, ref.alpha, ref.gamma, acc}, restore);
            m.predicted = predict(*m.model, rep.series.size());
            m.evaluation = evaluate_predictions(rep.series, rep.split, m.predicted);
            double max_dev = 0.0, sum_dev = 0.0;
            for (std::size_t i = 1; i < m.predicted.size(); ++i) {
                const double d = std::abs(m.predicted[i] - ref.fitted[i]) / ref.fitted[i];
                max_dev = std::max(max_dev, d);
                sum_dev += d;
            }
            m.max_rel_deviation = max_dev;
            m.mean_rel_deviation = sum_dev / static_cast<double>(m.predicted.size() - 1);
            if (ref.forecast) {
                const int extra = ref.forecast->period - rep.series.end_period();
                if (extra > 0) {
                    const auto all = predict(*m.model, rep.series.size() + static_cast<std::size_t>(extra));
                    m.forecast.assign(all.end() - extra, all.end());
                }
            }
            m.ok = true;
        } catch (const Error& e) {
            m.error = std::string(category_name(e.category())) + ": " + e.what();
        }
        rep.modes.push_back(std::move(m));
    }
    rep.best_mode = rep.modes[1].mean_rel_deviation < rep.modes[0].mean_rel_deviation ? 1 : 0;

    if (ref.gm_reduction) {
        rep.gm_reduction = fit(train, ModelKind::GM, {}).structural;
    }
    if (ref.forecast) {
        // The quoted first-forecast value coincides with the reference
        // column's first holdout entry.
        const double quoted = ref.fitted[rep.split.train_len];
        rep.notes.push_back("forecasts are reported by index k and period; the reference value " +
                            detail::format_double(quoted) + " is the k=" +
                            std::to_string(rep.split.train_len + 1) + " (" +
                            std::to_string(rep.series.period_at(rep.split.train_len)) +
                            ") entry of the reference column, not a post-" +
                            std::to_string(rep.series.end_period()) + " forecast");
    }
    return rep;
}

inline json to_json(const Reproduction& rep) {
    const auto& ref = *rep.reference;
    json modes = json::array();
    for (const auto& m : rep.modes) {
        json j{{"accumulation", std::string(to_string(m.accumulation))}, {"ok", m.ok}};
        if (!m.ok) {
            j["error"] = m.error;
        } else {
            j["model"] = to_json(*m.model);
            j["predicted"] = m.predicted;
            j["evaluation"] = to_json(*m.evaluation);
            j["max_rel_deviation"] = m.max_rel_deviation;
            j["mean_rel_deviation"] = m.mean_rel_deviation;
            if (!m.forecast.empty()) {
                json fc = json::array();
                for (std::size_t i = 0; i < m.forecast.size(); ++i) {
                    fc.push_back({{"k", rep.series.size() + i + 1},
                                  {"period", rep.series.end_period() + static_cast<int>(i) + 1},
                                  {"value", m.forecast[i]}});
                }
                j["forecast"] = fc;
            }
        }
        modes.push_back(j);
    }
    json reference{{"r", ref.r},
                   {"alpha", ref.alpha},
                   {"gamma", ref.gamma},
                   {"fitted", ref.fitted},
                   {"fit_mape", ref.fit_mape},
                   {"holdout_mape", ref.holdout_mape}};
    if (ref.gm_reduction) reference["gm_reduction"] = {{"a", ref.gm_reduction->a}, {"b", ref.gm_reduction->b}};
    if (ref.forecast) reference["forecast"] = {{"period", ref.forecast->period}, {"value", ref.forecast->value}};

    json out{{"case", std::string(ref.fixture)},
             {"series", to_json(rep.series)},
             {"split", {{"train_len", rep.split.train_len}, {"holdout_len", rep.split.holdout_len}}},
             {"reference", reference},
             {"modes", modes},
             {"closest_accumulation", std::string(to_string(rep.best().accumulation))}};
    if (rep.gm_reduction) out["gm_reduction"] = {{"a", rep.gm_reduction->a}, {"b", rep.gm_reduction->b}};
    out["notes"] = rep.notes;
    return out;
}

}  // namespace ccfngbm
