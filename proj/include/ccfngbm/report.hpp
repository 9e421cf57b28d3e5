#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccfngbm/evaluation.hpp"
#include "ccfngbm/gwo.hpp"
#include "ccfngbm/model.hpp"
#include "ccfngbm/search.hpp"
#include "ccfngbm/series.hpp"

namespace ccfngbm {

using json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

inline json to_json(const HyperParams& h) {
    return {{"r", h.r},
            {"alpha", h.alpha},
            {"gamma", h.gamma},
            {"accumulation", std::string(to_string(h.accumulation))}};
}

inline json to_json(const FittedModel& m) {
    return {{"kind", std::string(to_string(m.kind))},
            {"r", m.hyper.r},
            {"alpha", m.hyper.alpha},
            {"gamma", m.hyper.gamma},
            {"accumulation", std::string(to_string(m.hyper.accumulation))},
            {"restore", std::string(to_string(m.restore))},
            {"a", m.structural.a},
            {"b", m.structural.b},
            {"x1", m.x1},
            {"train_len", m.train_len}};
}

/// Inverse of to_json(FittedModel). Missing or mistyped fields are parse errors.
inline FittedModel model_from_json(const json& j) {
    try {
        FittedModel m;
        m.kind = model_kind_from_string(j.at("kind").get<std::string>());
        m.hyper.r = j.at("r").get<double>();
        m.hyper.alpha = j.at("alpha").get<double>();
        m.hyper.gamma = j.at("gamma").get<double>();
        m.hyper.accumulation = accumulation_from_string(j.at("accumulation").get<std::string>());
        m.restore = j.contains("restore")
                        ? restore_mode_from_string(j.at("restore").get<std::string>())
                        : RestoreMode::ExactInverse;
        m.structural.a = j.at("a").get<double>();
        m.structural.b = j.at("b").get<double>();
        m.x1 = j.at("x1").get<double>();
        m.train_len = j.at("train_len").get<std::size_t>();
        if (!(m.x1 > 0.0)) fail(ErrorCategory::Validation, "model x1 must be positive");
        if (m.train_len < kMinModelLength) {
            fail(ErrorCategory::Validation, "model train_len must be >= 4");
        }
        if (m.kind != ModelKind::DGM) validate(m.hyper);
        return m;
    } catch (const json::exception& e) {
        fail(ErrorCategory::Parse, std::string("invalid model JSON: ") + e.what());
    }
}

inline json to_json(const EvaluationReport& r) {
    json pts = json::array();
    for (const auto& p : r.per_point) {
        pts.push_back({{"k", p.k},
                       {"period", p.period},
                       {"actual", p.actual},
                       {"predicted", p.predicted},
                       {"ape", p.ape},
                       {"stage", std::string(to_string(p.stage))}});
    }
    return {{"per_point", pts},
            {"fit_mape", r.fit_mape},
            {"holdout_mape", r.holdout_mape ? json(*r.holdout_mape) : json(nullptr)},
            {"lewis_grade", std::string(to_string(r.lewis_grade))}};
}

inline json to_json(const std::vector<gwo::TraceEntry>& trace) {
    json out = json::array();
    for (const auto& t : trace) {
        out.push_back({{"iteration", t.iteration},
                       {"best_fitness", t.best_fitness},
                       {"r", t.best[0]},
                       {"alpha", t.best[1]},
                       {"gamma", t.best[2]}});
    }
    return out;
}

inline json to_json(const gwo::GwoConfig& c) {
    json bounds = json::object();
    const char* names[] = {"r", "alpha", "gamma"};
    for (std::size_t d = 0; d < gwo::kDims; ++d) bounds[names[d]] = {c.bounds[d].lo, c.bounds[d].hi};
    return {{"population", c.population},
            {"iterations", c.iterations},
            {"seed", c.seed},
            {"penalty", c.penalty},
            {"bounds", bounds}};
}

inline json to_json(const SearchResult& s) {
    return {{"best_fitness", s.best_fitness},
            {"hyper", to_json(s.hyper)},
            {"evaluations", s.evaluations},
            {"trace", to_json(s.trace)}};
}

inline json to_json(const TimeSeries& s) {
    return {{"label", s.label()},
            {"unit", s.unit()},
            {"start_period", s.start_period()},
            {"values", std::vector<double>(s.values().begin(), s.values().end())}};
}

inline json to_json(const ComparisonTable& t) {
    json cols = json::array();
    for (const auto& c : t.columns) {
        json col{{"kind", std::string(to_string(c.kind))}, {"ok", c.ok}};
        if (!c.ok) {
            col["error"] = c.error;
        } else {
            col["model"] = to_json(*c.model);
            col["predicted"] = c.predicted;
            col["evaluation"] = to_json(*c.evaluation);
            if (c.search) col["search"] = to_json(*c.search);
        }
        cols.push_back(col);
    }
    return {{"series", to_json(t.series)},
            {"split", {{"train_len", t.split.train_len}, {"holdout_len", t.split.holdout_len}}},
            {"columns", cols}};
}

/// `iteration,best_fitness,r,alpha,gamma`
inline std::string trace_csv(const std::vector<gwo::TraceEntry>& trace) {
    std::string out = "iteration,best_fitness,r,alpha,gamma\n";
    for (const auto& t : trace) {
        out += std::to_string(t.iteration) + ',' + detail::format_double(t.best_fitness) + ',' +
               detail::format_double(t.best[0]) + ',' + detail::format_double(t.best[1]) + ',' +
               detail::format_double(t.best[2]) + '\n';
    }
    return out;
}

struct SeriesRow {
    int period = 0;
    std::optional<double> actual;
    double predicted = 0.0;
    Stage stage = Stage::Fit;
};

/// `period,actual,predicted,stage`; forecast rows leave `actual` empty.
inline std::string series_csv(const std::vector<SeriesRow>& rows) {
    std::string out = "period,actual,predicted,stage\n";
    for (const auto& r : rows) {
        out += std::to_string(r.period) + ',';
        if (r.actual) out += detail::format_double(*r.actual);
        out += ',' + detail::format_double(r.predicted) + ',' + std::string(to_string(r.stage)) + '\n';
    }
    return out;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCategory::Io, "cannot write '" + path + "'");
    out << content;
    if (!out) fail(ErrorCategory::Io, "failed writing '" + path + "'");
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCategory::Io, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCategory::Parse, path + ": " + e.what());
    }
}

}  // namespace ccfngbm
