// mtad: multivariate time-series anomaly detection via transformation to a
// univariate symbol sequence (FCM / Sugeno / Choquet / PCA / mean) and
// supervised two-state HMM decoding.
//
// Subcommands:
//   gen    write a seeded synthetic labeled series to CSV
//   run    run one detection pipeline and report train/test metrics
//   sweep  run a parameter grid and emit a summary sorted by test accuracy
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtad/csv.hpp"
#include "mtad/errors.hpp"
#include "mtad/pipeline.hpp"
#include "mtad/synth.hpp"

namespace {

struct CommonOptions {
    std::string input;
    std::string method = "choquet";
    int clusters = 10;
    double fuzzifier = 2.0;
    int symbols = 30;
    double split = 0.7;
    double smoothing = 1.0;
    std::string densities = "uniform";
    double density_sum = 0.6;
    std::uint64_t seed = 42;
    std::string report_path;
    std::string format = "json";
    std::string config_path;
};

void add_common_options(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("--input", opt.input, "labeled CSV (header row, trailing 'label' column)");
    cmd.add_option("--method", opt.method, "fcm|sugeno|choquet|pca|mean")
        ->check(CLI::IsMember({"fcm", "sugeno", "choquet", "pca", "mean"}));
    cmd.add_option("--clusters", opt.clusters, "fcm cluster count (also the symbol count)");
    cmd.add_option("--fuzzifier", opt.fuzzifier, "fcm fuzzification coefficient (> 1)");
    cmd.add_option("--symbols", opt.symbols, "observed symbol count for non-fcm methods");
    cmd.add_option("--split", opt.split, "training fraction, first rows are training");
    cmd.add_option("--smoothing", opt.smoothing, "Laplace smoothing for HMM counts");
    cmd.add_option("--densities", opt.densities,
                   "uniform | label-corr | comma-separated g1,g2,... for the integrals");
    cmd.add_option("--density-sum", opt.density_sum,
                   "target density total for uniform/label-corr strategies");
    cmd.add_option("--seed", opt.seed, "RNG seed");
    cmd.add_option("--report", opt.report_path, "write the report to this file");
    cmd.add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd.add_option("--config", opt.config_path,
                   "key = value file holding the flags above; explicit flags win");
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

using ConfigSetters = std::map<std::string, std::function<void(const std::string&)>>;

ConfigSetters common_setters(CommonOptions& opt) {
    return {
        {"input", [&](const std::string& v) { opt.input = v; }},
        {"method", [&](const std::string& v) { opt.method = v; }},
        {"clusters", [&](const std::string& v) { opt.clusters = std::stoi(v); }},
        {"fuzzifier", [&](const std::string& v) { opt.fuzzifier = std::stod(v); }},
        {"symbols", [&](const std::string& v) { opt.symbols = std::stoi(v); }},
        {"split", [&](const std::string& v) { opt.split = std::stod(v); }},
        {"smoothing", [&](const std::string& v) { opt.smoothing = std::stod(v); }},
        {"densities", [&](const std::string& v) { opt.densities = v; }},
        {"density-sum", [&](const std::string& v) { opt.density_sum = std::stod(v); }},
        {"seed", [&](const std::string& v) { opt.seed = std::stoull(v); }},
        {"report", [&](const std::string& v) { opt.report_path = v; }},
        {"format", [&](const std::string& v) { opt.format = v; }},
    };
}

// Applies `key = value` lines (with '#' comments) to every option the user
// did not pass explicitly; keys are the long flag names without the dashes.
void apply_config_file(const CLI::App& cmd, const std::string& path,
                       const ConfigSetters& setters) {
    std::ifstream in(path);
    if (!in) throw mtad::data_error("cannot open config file: " + path);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end())
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
        if (cmd.count("--" + key) > 0) continue;  // explicit flag wins
        try {
            it->second(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": bad value for '" + key + "'");
        }
    }
}

mtad::PipelineConfig to_pipeline_config(const CommonOptions& opt) {
    mtad::PipelineConfig config;
    config.method = mtad::method_from_name(opt.method);
    config.clusters = opt.clusters;
    config.fuzzifier = opt.fuzzifier;
    config.symbols = opt.symbols;
    config.split = opt.split;
    config.smoothing = opt.smoothing;
    config.density_sum = opt.density_sum;
    config.seed = opt.seed;
    if (opt.densities == "uniform") {
        config.density_strategy = mtad::DensityStrategy::uniform;
    } else if (opt.densities == "label-corr") {
        config.density_strategy = mtad::DensityStrategy::label_corr;
    } else {
        config.density_strategy = mtad::DensityStrategy::explicit_list;
        std::string item;
        std::stringstream ss(opt.densities);
        while (std::getline(ss, item, ',')) config.densities.push_back(std::stod(item));
    }
    return config;
}

std::string metric_cell(const std::optional<double>& v) {
    if (!v) return "undefined";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

void print_summary(const mtad::RunReport& r) {
    const auto& cm_train = r.train_confusion;
    const auto& cm_test = r.test_confusion;
    std::printf("method=%s train=%zu test=%zu (%.1f ms)\n",
                mtad::method_name(r.config.method).c_str(), r.train_points, r.test_points,
                r.elapsed_ms);
    std::printf("  train: tp=%lld fp=%lld tn=%lld fn=%lld  acc=%s sens=%s spec=%s f=%s\n",
                static_cast<long long>(cm_train.tp), static_cast<long long>(cm_train.fp),
                static_cast<long long>(cm_train.tn), static_cast<long long>(cm_train.fn),
                metric_cell(r.train_metrics.accuracy).c_str(),
                metric_cell(r.train_metrics.sensitivity).c_str(),
                metric_cell(r.train_metrics.specificity).c_str(),
                metric_cell(r.train_metrics.f_measure).c_str());
    std::printf("  test:  tp=%lld fp=%lld tn=%lld fn=%lld  acc=%s sens=%s spec=%s f=%s\n",
                static_cast<long long>(cm_test.tp), static_cast<long long>(cm_test.fp),
                static_cast<long long>(cm_test.tn), static_cast<long long>(cm_test.fn),
                metric_cell(r.test_metrics.accuracy).c_str(),
                metric_cell(r.test_metrics.sensitivity).c_str(),
                metric_cell(r.test_metrics.specificity).c_str(),
                metric_cell(r.test_metrics.f_measure).c_str());
    for (const std::string& w : r.warnings) std::printf("  warning: %s\n", w.c_str());
}

// "a:b:step" range (inclusive, rounded step count) or "x,y,z" list.
template <typename T>
std::vector<T> parse_grid(const std::string& text) {
    std::vector<T> out;
    if (text.empty()) return out;
    if (text.find(':') != std::string::npos) {
        double start = 0, stop = 0, step = 0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 || step <= 0)
            throw CLI::ValidationError("grid", "expected start:stop:step with step > 0");
        const long count = std::lround((stop - start) / step) + 1;
        if (count < 1 || count > 1000000)
            throw CLI::ValidationError("grid", "grid size out of range");
        for (long i = 0; i < count; ++i)
            out.push_back(static_cast<T>(start + static_cast<double>(i) * step));
        return out;
    }
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(static_cast<T>(std::stod(item)));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HMM-based anomaly detection for multivariate time series"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic labeled series");
    mtad::SynthConfig synth_config;
    std::string gen_out = "synthetic.csv";
    std::vector<double> gen_frequencies;
    gen->add_option("--out", gen_out, "output CSV path");
    gen->add_option("--length", synth_config.length, "number of time points");
    gen->add_option("--vars", synth_config.n_vars, "number of variables");
    gen->add_option("--rate", synth_config.anomaly_rate, "fraction of injected points");
    gen->add_option("--noise", synth_config.noise_std, "Gaussian noise std");
    gen->add_option("--seed", synth_config.seed, "RNG seed");
    gen->add_option("--frequencies", gen_frequencies, "per-variable sine frequency override");

    // run
    auto* run = app.add_subcommand("run", "run one detection pipeline");
    CommonOptions run_opt;
    add_common_options(*run, run_opt);
    std::string model_out;
    run->add_option("--model-out", model_out, "write the trained HMM as JSON");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter grid");
    CommonOptions sweep_opt;
    add_common_options(*sweep_cmd, sweep_opt);
    std::string fuzzifier_grid = "1.1:2.9:0.1";
    std::string cluster_grid = "2:198:1";
    std::string symbol_grid = "2:80:1";
    sweep_cmd->add_option("--fuzzifier-grid", fuzzifier_grid,
                          "fcm fuzzifier grid, a:b:step or list");
    sweep_cmd->add_option("--cluster-grid", cluster_grid, "fcm cluster grid, a:b:step or list");
    sweep_cmd->add_option("--symbol-grid", symbol_grid,
                          "symbol-count grid for non-fcm methods, a:b:step or list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            synth_config.frequencies = gen_frequencies;
            const mtad::SynthData data = mtad::generate_series(synth_config);
            mtad::write_csv(gen_out, data.series, &data.labels);
            std::printf("wrote %zu points x %zu vars (%zu abnormal) to %s\n",
                        data.series.length(), data.series.arity(),
                        static_cast<std::size_t>(std::count(data.labels.begin(),
                                                            data.labels.end(),
                                                            mtad::kAbnormalLabel)),
                        gen_out.c_str());
        } else if (run->parsed()) {
            if (!run_opt.config_path.empty())
                apply_config_file(*run, run_opt.config_path, common_setters(run_opt));
            if (run_opt.input.empty())
                throw std::invalid_argument("--input is required (flag or config file)");
            const mtad::CsvData data = mtad::load_csv(run_opt.input, true);
            const mtad::PipelineConfig config = to_pipeline_config(run_opt);
            mtad::PipelineArtifacts artifacts;
            const mtad::RunReport report =
                mtad::run_pipeline(data.series, *data.labels, config, &artifacts);
            print_summary(report);
            if (!run_opt.report_path.empty()) {
                const auto format = run_opt.format == "csv" ? mtad::ReportFormat::csv
                                                            : mtad::ReportFormat::json;
                mtad::emit_report({report}, run_opt.report_path, format);
                std::printf("report written to %s\n", run_opt.report_path.c_str());
            }
            if (!model_out.empty()) {
                std::ofstream out(model_out);
                if (!out) throw mtad::data_error("cannot write model: " + model_out);
                out << mtad::hmm_to_json(artifacts.hmm).dump(2) << '\n';
                std::printf("model written to %s\n", model_out.c_str());
            }
        } else if (sweep_cmd->parsed()) {
            if (!sweep_opt.config_path.empty()) {
                ConfigSetters setters = common_setters(sweep_opt);
                setters["fuzzifier-grid"] = [&](const std::string& v) { fuzzifier_grid = v; };
                setters["cluster-grid"] = [&](const std::string& v) { cluster_grid = v; };
                setters["symbol-grid"] = [&](const std::string& v) { symbol_grid = v; };
                apply_config_file(*sweep_cmd, sweep_opt.config_path, setters);
            }
            if (sweep_opt.input.empty())
                throw std::invalid_argument("--input is required (flag or config file)");
            const mtad::CsvData data = mtad::load_csv(sweep_opt.input, true);
            const mtad::PipelineConfig base = to_pipeline_config(sweep_opt);
            mtad::SweepGrid grid;
            if (base.method == mtad::Method::fcm) {
                grid.fuzzifiers = parse_grid<double>(fuzzifier_grid);
                grid.clusters = parse_grid<int>(cluster_grid);
            } else {
                grid.symbols = parse_grid<int>(symbol_grid);
            }
            std::vector<mtad::RunReport> reports =
                mtad::sweep(data.series, *data.labels, base, grid);
            const std::size_t failed = static_cast<std::size_t>(
                std::count_if(reports.begin(), reports.end(),
                              [](const mtad::RunReport& r) { return !r.error.empty(); }));
            std::printf("%zu grid points (%zu failed)\n", reports.size(), failed);
            if (!sweep_opt.report_path.empty()) {
                const auto format = sweep_opt.format == "csv" ? mtad::ReportFormat::csv
                                                              : mtad::ReportFormat::json;
                mtad::emit_report(std::move(reports), sweep_opt.report_path, format);
                std::printf("report written to %s\n", sweep_opt.report_path.c_str());
            } else {
                std::fputs(mtad::reports_to_csv(std::move(reports)).c_str(), stdout);
            }
        }
    } catch (const mtad::data_error& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return 2;
    } catch (const mtad::numeric_error& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
