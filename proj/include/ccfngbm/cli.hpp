#pragma once

#include <array>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ccfngbm/chart.hpp"
#include "ccfngbm/evaluation.hpp"
#include "ccfngbm/fixtures.hpp"
#include "ccfngbm/report.hpp"
#include "ccfngbm/reproduce.hpp"
#include "ccfngbm/search.hpp"

namespace ccfngbm::cli {

enum class Command { Fit, Forecast, Compare, Reproduce };

inline std::string_view to_string(Command c) {
    switch (c) {
        case Command::Fit: return "fit";
        case Command::Forecast: return "forecast";
        case Command::Compare: return "compare";
        case Command::Reproduce: return "reproduce";
    }
    return "?";
}

struct RunConfig {
    Command command = Command::Fit;
    std::string input;      // CSV path
    std::string case_name;  // bundled fixture / reproduction case
    ModelKind model = ModelKind::CCFNGBM;
    std::optional<double> r, alpha, gamma;
    bool optimize = false;
    AccumulationKind accumulation = AccumulationKind::Conformable;
    RestoreMode restore = RestoreMode::ExactInverse;
    std::optional<std::size_t> train;  // default: fixture split, else all points
    std::size_t horizon = 0;
    gwo::GwoConfig gwo;
    std::vector<ModelKind> kinds{kAllKinds.begin(), kAllKinds.end()};

    std::string json_out;
    std::string csv_out;
    std::string svg_out;
    std::string trace_out;
    std::string save_model;
    std::string load_model;
};

inline std::string exit_code_help() {
    std::string s = "Exit codes:\n  0  success\n";
    for (auto c : {ErrorCategory::Config, ErrorCategory::Lookup, ErrorCategory::Parse,
                   ErrorCategory::Validation, ErrorCategory::Domain, ErrorCategory::Estimation,
                   ErrorCategory::SingularSystem, ErrorCategory::EvaluationDomain,
                   ErrorCategory::OptimizationFailure, ErrorCategory::Io}) {
        std::string code = std::to_string(exit_code(c));
        s += "  " + code + std::string(code.size() < 2 ? "  " : " ") + std::string(category_name(c)) + "\n";
    }
    return s;
}

namespace detail {

struct Input {
    TimeSeries series;
    SplitSpec split;
};

inline Input load_input(const RunConfig& cfg) {
    if (!cfg.input.empty() && !cfg.case_name.empty()) {
        fail(ErrorCategory::Config, "--input and --case are mutually exclusive");
    }
    Input in;
    std::optional<SplitSpec> default_split;
    if (!cfg.case_name.empty()) {
        std::string_view name = cfg.case_name;
        if (name == "shanghai" || name == "germany" || name == "china") {
            name = case_reference(name).fixture;
        }
        in.series = load_fixture(name);
        default_split = fixture_info(name).split;
    } else if (!cfg.input.empty()) {
        in.series = parse_csv(cfg.input);
    } else {
        fail(ErrorCategory::Config, "one of --input or --case is required");
    }
    if (cfg.train) {
        if (*cfg.train > in.series.size()) {
            fail(ErrorCategory::Config, "--train " + std::to_string(*cfg.train) +
                                            " exceeds series length " +
                                            std::to_string(in.series.size()));
        }
        in.split = {*cfg.train, in.series.size() - *cfg.train};
    } else {
        in.split = default_split.value_or(SplitSpec{in.series.size(), 0});
    }
    validate_split(in.series, in.split);
    return in;
}

/// Fixed values and search bounds per dimension; a given value pins its dimension.
inline std::array<std::optional<double>, 3> given(const RunConfig& cfg) {
    return {cfg.r, cfg.alpha, cfg.gamma};
}

inline void check_pinned(const RunConfig& cfg) {
    const auto free = free_dimensions(cfg.model);
    const char* names[] = {"--r", "--alpha", "--gamma"};
    const auto g = given(cfg);
    for (std::size_t d = 0; d < 3; ++d) {
        if (g[d] && !free[d]) {
            fail(ErrorCategory::Config, std::string(names[d]) + " is fixed for " +
                                            std::string(display_name(cfg.model)));
        }
    }
}

struct Calibration {
    FittedModel model;
    std::optional<SearchResult> search;
    gwo::GwoConfig gwo;
};

inline Calibration calibrate(const RunConfig& cfg, const TimeSeries& train) {
    Calibration cal;
    cal.gwo = cfg.gwo;
    check_pinned(cfg);
    const auto free = free_dimensions(cfg.model);
    const auto g = given(cfg);
    const SearchOptions opts{cfg.accumulation, cfg.restore};

    if (cfg.optimize) {
        for (std::size_t d = 0; d < 3; ++d) {
            if (g[d]) cal.gwo.bounds[d] = {*g[d], *g[d]};
        }
        cal.search = optimize(train, cfg.model, cal.gwo, opts);
        cal.model = fit(train, cfg.model, cal.search->hyper, cfg.restore);
        return cal;
    }

    const char* names[] = {"--r", "--alpha", "--gamma"};
    for (std::size_t d = 0; d < 3; ++d) {
        if (free[d] && !g[d]) {
            fail(ErrorCategory::Config, std::string(names[d]) + " is required for " +
                                            std::string(display_name(cfg.model)) +
                                            " (or pass --optimize)");
        }
    }
    HyperParams h{g[0].value_or(1.0), g[1].value_or(1.0), g[2].value_or(0.0), cfg.accumulation};
    cal.model = fit(train, cfg.model, h, cfg.restore);
    return cal;
}

inline void write_or_print(const std::string& path, const json& doc, std::ostream& out) {
    if (path.empty()) {
        out << doc.dump(2) << '\n';
    } else {
        write_file(path, doc.dump(2) + "\n");
    }
}

inline std::string fmt(double v, int prec = 4) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(prec) << v;
    return o.str();
}

inline int run_fit(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == Command::Forecast && cfg.horizon == 0) {
        fail(ErrorCategory::Config, "forecast needs --horizon >= 1");
    }
    auto in = load_input(cfg);
    Calibration cal;
    if (!cfg.load_model.empty()) {
        const auto doc = read_json_file(cfg.load_model);
        cal.model = model_from_json(doc.contains("model") ? doc.at("model") : doc);
        if (cal.model.train_len > in.series.size()) {
            fail(ErrorCategory::Config, "loaded model was trained on more points than the input has");
        }
        in.split = {cal.model.train_len, in.series.size() - cal.model.train_len};
        if (std::abs(cal.model.x1 - in.series[0]) > 1e-12 * in.series[0]) {
            fail(ErrorCategory::Validation, "loaded model's x1 does not match the first observation");
        }
    } else {
        const auto [train, holdout] = split(in.series, in.split);
        cal = calibrate(cfg, train);
    }

    const std::size_t n = in.series.size();
    const auto all = predict(cal.model, n + cfg.horizon);
    const std::vector<double> predicted(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
    const std::vector<double> future(all.begin() + static_cast<std::ptrdiff_t>(n), all.end());
    const auto eval = evaluate_predictions(in.series, in.split, predicted);

    json doc{{"schema", kReportSchema}, {"command", std::string(to_string(cfg.command))}};
    if (cfg.optimize) doc["seed"] = cal.gwo.seed;
    doc["input"] = to_json(in.series);
    doc["split"] = {{"train_len", in.split.train_len}, {"holdout_len", in.split.holdout_len}};
    doc["model"] = to_json(cal.model);
    doc["evaluation"] = to_json(eval);
    json fc = json::array();
    for (std::size_t i = 0; i < future.size(); ++i) {
        fc.push_back({{"k", n + i + 1},
                      {"period", in.series.end_period() + static_cast<int>(i) + 1},
                      {"value", future[i]}});
    }
    doc["forecast"] = fc;
    if (cal.search) doc["optimization"] = {{"config", to_json(cal.gwo)}, {"result", to_json(*cal.search)}};

    write_or_print(cfg.json_out, doc, out);

    if (!cfg.csv_out.empty()) {
        std::vector<SeriesRow> rows;
        for (const auto& p : eval.per_point) rows.push_back({p.period, p.actual, p.predicted, p.stage});
        for (std::size_t i = 0; i < future.size(); ++i) {
            rows.push_back({in.series.end_period() + static_cast<int>(i) + 1, std::nullopt, future[i],
                            Stage::Forecast});
        }
        write_file(cfg.csv_out, series_csv(rows));
    }
    if (!cfg.svg_out.empty()) {
        emit_chart({in.series.label() + " - " + std::string(display_name(cal.model.kind)),
                    in.series.unit(),
                    in.series.start_period(),
                    {in.series.values().begin(), in.series.values().end()},
                    predicted,
                    future},
                   cfg.svg_out);
    }
    if (!cfg.trace_out.empty()) {
        if (!cal.search) fail(ErrorCategory::Config, "--trace needs --optimize");
        write_file(cfg.trace_out, trace_csv(cal.search->trace));
    }
    if (!cfg.save_model.empty()) {
        write_file(cfg.save_model, json{{"schema", kReportSchema}, {"model", to_json(cal.model)}}.dump(2) + "\n");
    }

    if (!cfg.json_out.empty()) {
        out << display_name(cal.model.kind) << "  r=" << fmt(cal.model.hyper.r)
            << " alpha=" << fmt(cal.model.hyper.alpha) << " gamma=" << fmt(cal.model.hyper.gamma)
            << "  a=" << fmt(cal.model.structural.a, 6) << " b=" << fmt(cal.model.structural.b, 6) << '\n';
        out << "fit MAPE " << fmt(eval.fit_mape, 2) << "%";
        if (eval.holdout_mape) out << ", holdout MAPE " << fmt(*eval.holdout_mape, 2) << "%";
        out << " (" << ccfngbm::to_string(eval.lewis_grade) << ")\n";
        for (std::size_t i = 0; i < future.size(); ++i) {
            out << "forecast " << in.series.end_period() + static_cast<int>(i) + 1 << ": "
                << fmt(future[i], 2) << '\n';
        }
    }
    return 0;
}

inline int run_compare(const RunConfig& cfg, std::ostream& out) {
    const auto in = load_input(cfg);
    const auto table = compare(in.series, in.split, cfg.kinds, cfg.gwo, {cfg.accumulation, cfg.restore});
    json doc{{"schema", kReportSchema},
             {"command", "compare"},
             {"seed", cfg.gwo.seed},
             {"gwo", to_json(cfg.gwo)},
             {"table", to_json(table)}};
    write_or_print(cfg.json_out, doc, out);
    if (!cfg.csv_out.empty()) write_file(cfg.csv_out, render_csv(table));
    if (!cfg.json_out.empty()) out << render_text(table);
    return 0;
}

inline int run_reproduce(const RunConfig& cfg, std::ostream& out) {
    if (cfg.case_name.empty()) fail(ErrorCategory::Config, "reproduce needs --case");
    std::vector<std::string> names;
    if (cfg.case_name == "all") {
        for (const auto& r : case_references()) names.emplace_back(r.fixture);
    } else {
        names.push_back(cfg.case_name);
    }

    json cases = json::array();
    std::ostringstream summary;
    for (const auto& name : names) {
        const auto rep = reproduce_case(name, cfg.restore);
        json j = to_json(rep);
        const auto table = compare(rep.series, rep.split, cfg.kinds, cfg.gwo, {cfg.accumulation, cfg.restore});
        j["comparison"] = to_json(table);
        cases.push_back(j);

        const auto& best = rep.best();
        summary << rep.reference->fixture << ": closest accumulation "
                << ccfngbm::to_string(best.accumulation);
        if (best.ok) {
            summary << ", holdout";
            for (std::size_t i = rep.split.train_len; i < best.predicted.size(); ++i)
                summary << ' ' << fmt(best.predicted[i], 2);
            summary << ", fit MAPE " << fmt(best.evaluation->fit_mape, 2) << "%, holdout MAPE "
                    << fmt(best.evaluation->holdout_mape.value_or(0.0), 2) << "%";
            if (!best.forecast.empty()) {
                summary << ", " << rep.reference->forecast->period << " forecast "
                        << fmt(best.forecast.back(), 2);
            }
        }
        if (rep.gm_reduction) {
            summary << ", GM reduction a=" << fmt(rep.gm_reduction->a) << " b="
                    << fmt(rep.gm_reduction->b, 2);
        }
        summary << '\n' << render_text(table);
    }
    json doc{{"schema", kReportSchema},
             {"command", "reproduce"},
             {"seed", cfg.gwo.seed},
             {"gwo", to_json(cfg.gwo)},
             {"cases", cases}};
    write_or_print(cfg.json_out, doc, out);
    if (!cfg.json_out.empty()) out << summary.str();
    return 0;
}

}  // namespace detail

/// Execute a command. Errors become a JSON line on `err` and a category exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::Fit:
            case Command::Forecast: return detail::run_fit(cfg, out);
            case Command::Compare: return detail::run_compare(cfg, out);
            case Command::Reproduce: return detail::run_reproduce(cfg, out);
        }
        return 1;
    } catch (const Error& e) {
        json j{{"error",
                {{"category", std::string(category_name(e.category()))},
                 {"exit_code", exit_code(e.category())},
                 {"message", e.what()}}}};
        err << j.dump() << '\n';
        return exit_code(e.category());
    }
}

}  // namespace ccfngbm::cli
