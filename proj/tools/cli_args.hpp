#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ccfngbm/cli.hpp"

namespace ccfngbm::cli {

namespace detail {

inline gwo::Interval parse_interval(const std::string& text, const std::string& flag) {
    std::istringstream in(text);
    gwo::Interval iv;
    char comma = 0;
    if (!(in >> iv.lo >> comma >> iv.hi) || comma != ',' || !in.eof()) {
        std::string rest;
        if (!(in >> rest).fail() || iv.lo > iv.hi || comma != ',') {
            fail(ErrorCategory::Config, flag + " expects LO,HI (got '" + text + "')");
        }
    }
    if (iv.lo > iv.hi) fail(ErrorCategory::Config, flag + " needs LO <= HI");
    return iv;
}

}  // namespace detail

/// Parse argv into `cfg`. Returns an exit code when the process should stop
/// (help, usage error), std::nullopt when the command should run.
inline std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& cfg) {
    CLI::App app{"Grey-model forecasting: CCFNGBM(1,1) and relatives with GWO tuning"};
    app.footer(exit_code_help());
    app.require_subcommand(1);

    std::string model = "ccfngbm", accumulation = "conformable", restore = "exact-inverse";
    std::string r_bounds, alpha_bounds, gamma_bounds, kinds;
    std::size_t train = 0;

    auto add_common = [&](CLI::App* sub, bool single_model) {
        sub->add_option("--input", cfg.input, "CSV file with header 'period,value'");
        sub->add_option("--case", cfg.case_name,
                        "Bundled dataset: shanghai, germany, china (or full fixture name)");
        if (single_model) {
            sub->add_option("--model", model, "gm | dgm | ngbm | fngbm | ccfngbm")->capture_default_str();
            sub->add_option("--r", cfg.r, "Fixed accumulation order r");
            sub->add_option("--alpha", cfg.alpha, "Fixed conformable order alpha in (0,1]");
            sub->add_option("--gamma", cfg.gamma, "Fixed Bernoulli exponent gamma (!= 1)");
            sub->add_flag("--optimize", cfg.optimize, "Search free hyperparameters with GWO");
            sub->add_option("--save-model", cfg.save_model, "Write the fitted model as JSON");
            sub->add_option("--load-model", cfg.load_model, "Use a saved model instead of fitting");
            sub->add_option("--svg", cfg.svg_out, "Write an SVG chart of actual vs predicted");
            sub->add_option("--trace", cfg.trace_out, "Write the GWO convergence trace as CSV");
        } else {
            sub->add_option("--models", kinds, "Comma-separated kinds (default: all five)");
        }
        sub->add_option("--accumulation", accumulation, "CCFNGBM accumulation: conformable | classical")
            ->capture_default_str();
        sub->add_option("--restore", restore, "exact-inverse | plain-diff")->capture_default_str();
        sub->add_option("--train", train, "Number of leading points used for calibration");
        sub->add_option("--pop", cfg.gwo.population, "GWO population")->capture_default_str();
        sub->add_option("--iters", cfg.gwo.iterations, "GWO iterations")->capture_default_str();
        sub->add_option("--seed", cfg.gwo.seed, "GWO seed")->capture_default_str();
        sub->add_option("--workers", cfg.gwo.workers, "Threads for fitness evaluation")->capture_default_str();
        sub->add_option("--r-bounds", r_bounds, "GWO bounds for r as LO,HI (default 0.05,3)");
        sub->add_option("--alpha-bounds", alpha_bounds, "GWO bounds for alpha (default 0.01,1)");
        sub->add_option("--gamma-bounds", gamma_bounds, "GWO bounds for gamma (default -10,10)");
        sub->add_option("--json", cfg.json_out, "Write the JSON report here (default: stdout)");
        sub->add_option("--csv", cfg.csv_out, "Write a CSV rendering here");
    };

    auto* fit_cmd = app.add_subcommand("fit", "Fit one model and evaluate it");
    add_common(fit_cmd, true);
    fit_cmd->add_option("--horizon", cfg.horizon, "Periods to forecast past the data");
    auto* fc_cmd = app.add_subcommand("forecast", "Fit one model and forecast past the data");
    add_common(fc_cmd, true);
    fc_cmd->add_option("--horizon", cfg.horizon, "Periods to forecast past the data")->required();
    auto* cmp_cmd = app.add_subcommand("compare", "Fit several models on one split");
    add_common(cmp_cmd, false);
    auto* rep_cmd = app.add_subcommand("reproduce", "Re-run a bundled case study");
    add_common(rep_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_code(ErrorCategory::Config);
    }

    if (fit_cmd->parsed()) cfg.command = Command::Fit;
    if (fc_cmd->parsed()) cfg.command = Command::Forecast;
    if (cmp_cmd->parsed()) cfg.command = Command::Compare;
    if (rep_cmd->parsed()) cfg.command = Command::Reproduce;

    cfg.model = model_kind_from_string(model);
    cfg.accumulation = accumulation_from_string(accumulation);
    cfg.restore = restore_mode_from_string(restore);
    if (train > 0) cfg.train = train;
    if (!r_bounds.empty()) cfg.gwo.bounds[0] = detail::parse_interval(r_bounds, "--r-bounds");
    if (!alpha_bounds.empty()) cfg.gwo.bounds[1] = detail::parse_interval(alpha_bounds, "--alpha-bounds");
    if (!gamma_bounds.empty()) cfg.gwo.bounds[2] = detail::parse_interval(gamma_bounds, "--gamma-bounds");
    if (!kinds.empty()) {
        cfg.kinds.clear();
        std::istringstream in(kinds);
        std::string k;
        while (std::getline(in, k, ',')) cfg.kinds.push_back(model_kind_from_string(k));
    }
    return std::nullopt;
}

}  // namespace ccfngbm::cli
