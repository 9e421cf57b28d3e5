#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccfngbm/metrics.hpp"
#include "ccfngbm/model.hpp"
#include "ccfngbm/search.hpp"
#include "ccfngbm/series.hpp"

namespace ccfngbm {

enum class Stage { Fit, Holdout, Forecast };

inline std::string_view to_string(Stage s) {
    switch (s) {
        case Stage::Fit: return "fit";
        case Stage::Holdout: return "holdout";
        case Stage::Forecast: return "forecast";
    }
    return "?";
}

struct PointError {
    std::size_t k = 0;  // 1-based model index
    int period = 0;
    double actual = 0.0;
    double predicted = 0.0;
    double ape = 0.0;
    Stage stage = Stage::Fit;
};

struct EvaluationReport {
    std::vector<PointError> per_point;
    double fit_mape = 0.0;
    std::optional<double> holdout_mape;
    LewisGrade lewis_grade = LewisGrade::HighlyAccurate;

    /// The MAPE the grade is based on: holdout when present, else fit.
    double graded_mape() const { return holdout_mape.value_or(fit_mape); }
};

/// Score `predicted` (k = 1..n, aligned with `series`) against the data.
inline EvaluationReport evaluate_predictions(const TimeSeries& series, const SplitSpec& spec,
                                             const std::vector<double>& predicted) {
    validate_split(series, spec);
    if (predicted.size() != series.size()) {
        fail(ErrorCategory::Config, "prediction count does not match series length");
    }
    EvaluationReport rep;
    double fit_sum = 0.0;
    double hold_sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        PointError p;
        p.k = i + 1;
        p.period = series.period_at(i);
        p.actual = series[i];
        p.predicted = predicted[i];
        p.ape = ape(p.actual, p.predicted);
        p.stage = i < spec.train_len ? Stage::Fit : Stage::Holdout;
        if (p.stage == Stage::Fit && i > 0) fit_sum += p.ape;
        if (p.stage == Stage::Holdout) hold_sum += p.ape;
        rep.per_point.push_back(p);
    }
    rep.fit_mape = fit_sum / static_cast<double>(spec.train_len - 1);
    if (spec.holdout_len > 0) rep.holdout_mape = hold_sum / static_cast<double>(spec.holdout_len);
    rep.lewis_grade = lewis_grade(rep.graded_mape());
    return rep;
}

inline EvaluationReport evaluate(const TimeSeries& series, const SplitSpec& spec,
                                 const FittedModel& model) {
    if (model.train_len != spec.train_len) {
        fail(ErrorCategory::Config, "model was trained on " + std::to_string(model.train_len) +
                                        " points but the split has train_len " +
                                        std::to_string(spec.train_len));
    }
    return evaluate_predictions(series, spec, predict(model, series.size()));
}

// ---------------------------------------------------------------------------
// Multi-model comparison

struct ModelColumn {
    ModelKind kind = ModelKind::GM;
    bool ok = false;
    std::string error;  // set when !ok
    bool optimized = false;
    std::optional<SearchResult> search;
    std::optional<FittedModel> model;
    std::vector<double> predicted;  // k = 1..n
    std::optional<EvaluationReport> evaluation;

    double rank_key() const {
        if (!ok) return INFINITY;
        return evaluation->graded_mape();
    }
};

struct ComparisonTable {
    TimeSeries series;
    SplitSpec split;
    std::vector<ModelColumn> columns;  // best first
};

inline bool is_optimized_kind(ModelKind kind) {
    const auto f = free_dimensions(kind);
    return f[0] || f[1] || f[2];
}

/**
 * Fit every kind on the same split. Kinds with free hyperparameters are
 * tuned by GWO with the same configuration (and therefore the same seed).
 * A failing kind becomes a failed column; the table is sorted by holdout
 * MAPE, or by fit MAPE when there is no holdout.
 */
inline ComparisonTable compare(const TimeSeries& series, const SplitSpec& spec,
                               const std::vector<ModelKind>& kinds, const gwo::GwoConfig& cfg,
                               const SearchOptions& opts = {}) {
    const auto [train, holdout] = split(series, spec);
    ComparisonTable table{series, spec, {}};

    for (auto kind : kinds) {
        ModelColumn col;
        col.kind = kind;
        try {
            HyperParams hyper = pin_hyper(kind, {1.0, 1.0, 0.0, opts.accumulation});
            if (is_optimized_kind(kind)) {
                col.optimized = true;
                col.search = optimize(train, kind, cfg, opts);
                hyper = col.search->hyper;
            }
            col.model = fit(train, kind, hyper, opts.restore);
            col.predicted = predict(*col.model, series.size());
            col.evaluation = evaluate_predictions(series, spec, col.predicted);
            col.ok = true;
        } catch (const Error& e) {
            col.ok = false;
            col.error = std::string(category_name(e.category())) + ": " + e.what();
        }
        table.columns.push_back(std::move(col));
    }
    std::stable_sort(table.columns.begin(), table.columns.end(),
                     [](const ModelColumn& a, const ModelColumn& b) {
                         return a.rank_key() < b.rank_key();
                     });
    return table;
}

namespace detail {

inline std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace detail

/// Cells of the rendered table, header first, as they appear in text and CSV.
inline std::vector<std::vector<std::string>> table_cells(const ComparisonTable& t) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"period", "actual"};
    for (const auto& c : t.columns) header.emplace_back(to_string(c.kind));
    rows.push_back(header);

    for (std::size_t i = 0; i < t.series.size(); ++i) {
        std::vector<std::string> row{std::to_string(t.series.period_at(i)),
                                     detail::fixed2(t.series[i])};
        for (const auto& c : t.columns) row.push_back(c.ok ? detail::fixed2(c.predicted[i]) : "failed");
        rows.push_back(row);
    }
    std::vector<std::string> fit_row{"mape_fit", ""};
    std::vector<std::string> hold_row{"mape_holdout", ""};
    for (const auto& c : t.columns) {
        fit_row.push_back(c.ok ? detail::fixed2(c.evaluation->fit_mape) : "failed");
        hold_row.push_back(c.ok && c.evaluation->holdout_mape
                               ? detail::fixed2(*c.evaluation->holdout_mape)
                               : (c.ok ? "" : "failed"));
    }
    rows.push_back(fit_row);
    if (t.split.holdout_len > 0) rows.push_back(hold_row);
    return rows;
}

/// Aligned plain-text rendering, two decimals.
inline std::string render_text(const ComparisonTable& t) {
    const auto rows = table_cells(t);
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());

    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rows.size() - (t.split.holdout_len > 0 ? 2 : 1) || i == 1) {
            std::size_t total = 0;
            for (auto w : width) total += w + 2;
            out += std::string(total, '-') + '\n';
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            out += detail::pad_left(rows[i][j], width[j]);
            out += j + 1 < rows[i].size() ? "  " : "\n";
        }
    }
    for (const auto& c : t.columns) {
        if (!c.ok) out += std::string(to_string(c.kind)) + " failed: " + c.error + '\n';
    }
    return out;
}

inline std::string render_csv(const ComparisonTable& t) {
    std::string out;
    for (const auto& r : table_cells(t)) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            out += r[j];
            out += j + 1 < r.size() ? "," : "\n";
        }
    }
    return out;
}

}  // namespace ccfngbm
