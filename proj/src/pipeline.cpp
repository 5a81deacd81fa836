#include "mtad/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "mtad/errors.hpp"

namespace mtad {

std::string method_name(Method method) {
    switch (method) {
        case Method::fcm: return "fcm";
        case Method::sugeno: return "sugeno";
        case Method::choquet: return "choquet";
        case Method::pca: return "pca";
        case Method::mean: return "mean";
    }
    throw std::invalid_argument("unknown method");
}

Method method_from_name(const std::string& name) {
    if (name == "fcm") return Method::fcm;
    if (name == "sugeno") return Method::sugeno;
    if (name == "choquet") return Method::choquet;
    if (name == "pca") return Method::pca;
    if (name == "mean") return Method::mean;
    throw std::invalid_argument("unknown method: " + name);
}

namespace {

std::string strategy_name(DensityStrategy s) {
    switch (s) {
        case DensityStrategy::uniform: return "uniform";
        case DensityStrategy::label_corr: return "label-corr";
        case DensityStrategy::explicit_list: return "explicit";
    }
    throw std::invalid_argument("unknown density strategy");
}

DensityStrategy strategy_from_name(const std::string& name) {
    if (name == "uniform") return DensityStrategy::uniform;
    if (name == "label-corr") return DensityStrategy::label_corr;
    if (name == "explicit") return DensityStrategy::explicit_list;
    throw std::invalid_argument("unknown density strategy: " + name);
}

std::size_t train_length(double split, std::size_t total) {
    if (!(split > 0.0 && split < 1.0))
        throw std::invalid_argument("split must lie in (0, 1)");
    const auto len = static_cast<std::size_t>(
        std::llround(split * static_cast<double>(total)));
    return std::clamp<std::size_t>(len, 1, total - 1);
}

void validate_config(const PipelineConfig& config, std::size_t n_train, std::size_t arity) {
    if (config.smoothing < 0.0) throw std::invalid_argument("smoothing must be >= 0");
    if (config.method == Method::fcm) {
        if (config.clusters < 2) throw std::invalid_argument("fcm needs clusters >= 2");
        if (config.fuzzifier <= 1.0) throw std::invalid_argument("fuzzifier must be > 1");
        if (static_cast<std::size_t>(config.clusters) > n_train)
            throw numeric_error("more clusters than training points");
    } else {
        if (config.symbols < 2) throw std::invalid_argument("need symbols >= 2");
    }
    if ((config.method == Method::sugeno || config.method == Method::choquet) &&
        config.density_strategy == DensityStrategy::explicit_list &&
        config.densities.size() != arity)
        throw std::invalid_argument("explicit densities must match the variable count");
}

// Observed symbols for the whole series, every parameter fitted on the
// training rows only. Returns the symbol count M alongside.
std::pair<ObservedSequence, int> transform_to_symbols(const MultivariateSeries& normalized,
                                                      const LabelSequence& labels,
                                                      std::size_t n_train,
                                                      const PipelineConfig& config,
                                                      PipelineArtifacts& artifacts) {
    const MultivariateSeries train = normalized.head(n_train);

    switch (config.method) {
        case Method::fcm: {
            FcmConfig fcm_config;
            fcm_config.clusters = config.clusters;
            fcm_config.fuzzifier = config.fuzzifier;
            fcm_config.seed = config.seed;
            artifacts.fcm = fcm_fit(train, fcm_config);
            return {fcm_assign(normalized, *artifacts.fcm), config.clusters};
        }
        case Method::sugeno:
        case Method::choquet: {
            artifacts.rescale = fit_unit_rescale(train);
            std::vector<double> densities;
            switch (config.density_strategy) {
                case DensityStrategy::uniform:
                    densities = uniform_densities(normalized.arity(), config.density_sum);
                    break;
                case DensityStrategy::label_corr:
                    densities = densities_from_labels(
                        train, LabelSequence(labels.begin(), labels.begin() + n_train),
                        config.density_sum);
                    break;
                case DensityStrategy::explicit_list:
                    densities = config.densities;
                    break;
            }
            artifacts.measure = make_fuzzy_measure(std::move(densities));
            const MultivariateSeries rescaled = apply_unit_rescale(normalized, *artifacts.rescale);
            const IntegralKind kind = config.method == Method::sugeno ? IntegralKind::sugeno
                                                                      : IntegralKind::choquet;
            std::vector<double> fused = integral_transform(rescaled, *artifacts.measure, kind);
            artifacts.bins = fit_bins({fused.begin(), fused.begin() + n_train}, config.symbols);
            return {to_symbols(fused, *artifacts.bins), config.symbols};
        }
        case Method::pca: {
            artifacts.pca = pca_fit(train);
            const std::vector<double> fused = pca_project(normalized, *artifacts.pca);
            artifacts.bins = fit_bins({fused.begin(), fused.begin() + n_train}, config.symbols);
            return {to_symbols(fused, *artifacts.bins), config.symbols};
        }
        case Method::mean: {
            const std::vector<double> fused = mean_fusion(normalized);
            artifacts.bins = fit_bins({fused.begin(), fused.begin() + n_train}, config.symbols);
            return {to_symbols(fused, *artifacts.bins), config.symbols};
        }
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace

RunReport run_pipeline(const MultivariateSeries& data, const LabelSequence& labels,
                       const PipelineConfig& config, PipelineArtifacts* artifacts_out) {
    const auto start = std::chrono::steady_clock::now();

    if (labels.size() != data.length())
        throw std::invalid_argument("labels must cover every time point");
    if (data.length() < 3) throw std::invalid_argument("need at least three time points");

    const std::size_t n_train = train_length(config.split, data.length());
    if (n_train < 2 || data.length() - n_train < 1)
        throw std::invalid_argument("split leaves too few points in a partition");
    validate_config(config, n_train, data.arity());

    RunReport report;
    report.config = config;
    report.train_points = n_train;
    report.test_points = data.length() - n_train;

    const LabelSequence train_labels(labels.begin(), labels.begin() + n_train);
    const LabelSequence test_labels(labels.begin() + n_train, labels.end());
    const bool has_normal = std::count(train_labels.begin(), train_labels.end(), kNormalLabel) > 0;
    const bool has_abnormal =
        std::count(train_labels.begin(), train_labels.end(), kAbnormalLabel) > 0;
    if (!has_normal || !has_abnormal)
        report.warnings.push_back(
            "training split holds a single class; smoothing carries the absent state");

    PipelineArtifacts artifacts;
    artifacts.zscore = fit_zscore(data.head(n_train));
    const MultivariateSeries normalized = apply_zscore(data, artifacts.zscore);

    const auto [symbols, m_symbols] =
        transform_to_symbols(normalized, labels, n_train, config, artifacts);

    const ObservedSequence train_obs(symbols.begin(), symbols.begin() + n_train);
    const ObservedSequence test_obs(symbols.begin() + n_train, symbols.end());

    artifacts.hmm = estimate_supervised(train_obs, train_labels, m_symbols, config.smoothing);
    report.model = artifacts.hmm;

    const StatePath train_path = viterbi(train_obs, artifacts.hmm);
    const StatePath test_path = viterbi(test_obs, artifacts.hmm);

    report.train_confusion = confusion(train_path.states, train_labels);
    report.test_confusion = confusion(test_path.states, test_labels);
    report.train_metrics = compute_metrics(report.train_confusion);
    report.test_metrics = compute_metrics(report.test_confusion);

    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (artifacts_out) *artifacts_out = std::move(artifacts);
    return report;
}

std::vector<RunReport> sweep(const MultivariateSeries& data, const LabelSequence& labels,
                             const PipelineConfig& base, const SweepGrid& grid) {
    std::vector<PipelineConfig> points;
    if (base.method == Method::fcm) {
        const std::vector<double> ms =
            grid.fuzzifiers.empty() ? std::vector<double>{base.fuzzifier} : grid.fuzzifiers;
        const std::vector<int> cs =
            grid.clusters.empty() ? std::vector<int>{base.clusters} : grid.clusters;
        for (double m : ms)
            for (int c : cs) {
                PipelineConfig config = base;
                config.fuzzifier = m;
                config.clusters = c;
                points.push_back(config);
            }
    } else {
        const std::vector<int> syms =
            grid.symbols.empty() ? std::vector<int>{base.symbols} : grid.symbols;
        for (int s : syms) {
            PipelineConfig config = base;
            config.symbols = s;
            points.push_back(config);
        }
    }
    if (points.empty()) throw std::invalid_argument("empty sweep grid");

    std::vector<RunReport> reports;
    reports.reserve(points.size());
    for (const PipelineConfig& config : points) {
        try {
            reports.push_back(run_pipeline(data, labels, config));
        } catch (const std::exception& e) {
            RunReport failed;
            failed.config = config;
            failed.error = e.what();
            reports.push_back(std::move(failed));
        }
    }
    return reports;
}

namespace {

nlohmann::json metric_json(const std::optional<double>& v) {
    if (!v) return "undefined";
    return *v;
}

std::optional<double> metric_from_json(const nlohmann::json& j) {
    if (j.is_string()) return std::nullopt;
    return j.get<double>();
}

nlohmann::json config_to_json(const PipelineConfig& c) {
    return nlohmann::json{
        {"method", method_name(c.method)},
        {"clusters", c.clusters},
        {"fuzzifier", c.fuzzifier},
        {"symbols", c.symbols},
        {"split", c.split},
        {"smoothing", c.smoothing},
        {"density_strategy", strategy_name(c.density_strategy)},
        {"density_sum", c.density_sum},
        {"densities", c.densities},
        {"seed", c.seed},
    };
}

PipelineConfig config_from_json(const nlohmann::json& j) {
    PipelineConfig c;
    c.method = method_from_name(j.at("method").get<std::string>());
    c.clusters = j.at("clusters").get<int>();
    c.fuzzifier = j.at("fuzzifier").get<double>();
    c.symbols = j.at("symbols").get<int>();
    c.split = j.at("split").get<double>();
    c.smoothing = j.at("smoothing").get<double>();
    c.density_strategy = strategy_from_name(j.at("density_strategy").get<std::string>());
    c.density_sum = j.at("density_sum").get<double>();
    c.densities = j.at("densities").get<std::vector<double>>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

nlohmann::json confusion_to_json(const ConfusionMatrix& cm) {
    return nlohmann::json{{"tp", cm.tp}, {"fp", cm.fp}, {"tn", cm.tn}, {"fn", cm.fn}};
}

ConfusionMatrix confusion_from_json(const nlohmann::json& j) {
    ConfusionMatrix cm;
    cm.tp = j.at("tp").get<std::int64_t>();
    cm.fp = j.at("fp").get<std::int64_t>();
    cm.tn = j.at("tn").get<std::int64_t>();
    cm.fn = j.at("fn").get<std::int64_t>();
    return cm;
}

nlohmann::json metrics_to_json(const MetricsReport& m) {
    return nlohmann::json{
        {"accuracy", metric_json(m.accuracy)},       {"sensitivity", metric_json(m.sensitivity)},
        {"specificity", metric_json(m.specificity)}, {"precision", metric_json(m.precision)},
        {"recall", metric_json(m.recall)},           {"f_measure", metric_json(m.f_measure)},
    };
}

MetricsReport metrics_from_json(const nlohmann::json& j) {
    MetricsReport m;
    m.accuracy = metric_from_json(j.at("accuracy"));
    m.sensitivity = metric_from_json(j.at("sensitivity"));
    m.specificity = metric_from_json(j.at("specificity"));
    m.precision = metric_from_json(j.at("precision"));
    m.recall = metric_from_json(j.at("recall"));
    m.f_measure = metric_from_json(j.at("f_measure"));
    return m;
}

// Defined test accuracy first, errors last, ties keep incoming order.
void sort_reports(std::vector<RunReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const RunReport& a, const RunReport& b) {
        const bool a_ok = a.error.empty() && a.test_metrics.accuracy.has_value();
        const bool b_ok = b.error.empty() && b.test_metrics.accuracy.has_value();
        if (a_ok != b_ok) return a_ok;
        if (!a_ok) return false;
        return *a.test_metrics.accuracy > *b.test_metrics.accuracy;
    });
}

std::string format_double(double v, const char* fmt = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

}  // namespace

nlohmann::json report_to_json(const RunReport& report) {
    nlohmann::json j{
        {"config", config_to_json(report.config)},
        {"train_points", report.train_points},
        {"test_points", report.test_points},
        {"warnings", report.warnings},
        {"error", report.error},
    };
    if (report.error.empty()) {
        j["train_confusion"] = confusion_to_json(report.train_confusion);
        j["test_confusion"] = confusion_to_json(report.test_confusion);
        j["train_metrics"] = metrics_to_json(report.train_metrics);
        j["test_metrics"] = metrics_to_json(report.test_metrics);
        j["model"] = hmm_to_json(report.model);
    }
    return j;
}

RunReport report_from_json(const nlohmann::json& j) {
    RunReport report;
    report.config = config_from_json(j.at("config"));
    report.train_points = j.at("train_points").get<std::size_t>();
    report.test_points = j.at("test_points").get<std::size_t>();
    report.warnings = j.at("warnings").get<std::vector<std::string>>();
    report.error = j.at("error").get<std::string>();
    if (report.error.empty()) {
        report.train_confusion = confusion_from_json(j.at("train_confusion"));
        report.test_confusion = confusion_from_json(j.at("test_confusion"));
        report.train_metrics = metrics_from_json(j.at("train_metrics"));
        report.test_metrics = metrics_from_json(j.at("test_metrics"));
        report.model = hmm_from_json(j.at("model"));
    }
    return report;
}

std::string reports_to_csv(std::vector<RunReport> reports) {
    sort_reports(reports);

    std::string out =
        "method,clusters,fuzzifier,symbols,split,smoothing,density_strategy,density_sum,seed,"
        "train_accuracy,train_sensitivity,train_specificity,train_f_measure,"
        "test_accuracy,test_sensitivity,test_specificity,test_f_measure,error\n";
    auto cell = [](const std::optional<double>& v) {
        return v ? format_double(*v, "%.6f") : std::string();
    };
    for (const RunReport& r : reports) {
        out += method_name(r.config.method);
        out += ',' + std::to_string(r.config.clusters);
        out += ',' + format_double(r.config.fuzzifier, "%g");
        out += ',' + std::to_string(r.config.symbols);
        out += ',' + format_double(r.config.split, "%g");
        out += ',' + format_double(r.config.smoothing, "%g");
        out += ',' + strategy_name(r.config.density_strategy);
        out += ',' + format_double(r.config.density_sum, "%g");
        out += ',' + std::to_string(r.config.seed);
        for (const MetricsReport* m : {&r.train_metrics, &r.test_metrics}) {
            if (r.error.empty()) {
                out += ',' + cell(m->accuracy) + ',' + cell(m->sensitivity) + ',' +
                       cell(m->specificity) + ',' + cell(m->f_measure);
            } else {
                out += ",,,,";
            }
        }
        std::string error = r.error;  // keep the one-row-per-run shape intact
        for (char& c : error)
            if (c == ',' || c == '\n') c = ';';
        out += ',' + error + '\n';
    }
    return out;
}

void emit_report(std::vector<RunReport> reports, const std::filesystem::path& path,
                 ReportFormat format) {
    if (reports.empty()) throw std::invalid_argument("nothing to emit");

    std::string payload;
    if (format == ReportFormat::csv) {
        payload = reports_to_csv(std::move(reports));
    } else if (reports.size() == 1) {
        payload = report_to_json(reports.front()).dump(2) + "\n";
    } else {
        sort_reports(reports);
        nlohmann::json arr = nlohmann::json::array();
        for (const RunReport& r : reports) arr.push_back(report_to_json(r));
        payload = arr.dump(2) + "\n";
    }

    std::ofstream out(path);
    if (!out) throw data_error("cannot write report: " + path.string());
    out << payload;
    if (!out) throw data_error("report write failed: " + path.string());
}

}  // namespace mtad
