#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtad/baseline.hpp"
#include "mtad/discretize.hpp"
#include "mtad/fcm.hpp"
#include "mtad/fuzzy_integral.hpp"
#include "mtad/hmm.hpp"
#include "mtad/metrics.hpp"
#include "mtad/preprocess.hpp"
#include "mtad/series.hpp"

namespace mtad {

enum class Method { fcm, sugeno, choquet, pca, mean };
enum class DensityStrategy { uniform, label_corr, explicit_list };

std::string method_name(Method method);
Method method_from_name(const std::string& name);

struct PipelineConfig {
    Method method = Method::choquet;
    int clusters = 10;       // fcm: cluster count c (doubles as symbol count)
    double fuzzifier = 2.0;  // fcm: m > 1
    int symbols = 30;        // non-fcm: discretization bins M
    double split = 0.7;      // first fraction of rows is the training split
    double smoothing = 1.0;  // Laplace alpha for the HMM counts
    DensityStrategy density_strategy = DensityStrategy::uniform;
    double density_sum = 0.6;        // uniform / label-corr strategies
    std::vector<double> densities;   // explicit_list strategy
    std::uint64_t seed = 42;
};

// Everything fitted during a run; exposed so tests can verify that the test
// split never leaks into any fitted parameter.
struct PipelineArtifacts {
    ZScoreParams zscore;
    std::optional<FcmModel> fcm;
    std::optional<UnitRescaleParams> rescale;
    std::optional<FuzzyMeasure> measure;
    std::optional<PcaModel> pca;
    std::optional<Discretizer> bins;
    HmmModel hmm;
};

struct RunReport {
    PipelineConfig config;
    std::size_t train_points = 0;
    std::size_t test_points = 0;
    ConfusionMatrix train_confusion;
    ConfusionMatrix test_confusion;
    MetricsReport train_metrics;
    MetricsReport test_metrics;
    HmmModel model;
    std::vector<std::string> warnings;
    std::string error;        // sweep: non-empty when this grid point failed
    double elapsed_ms = 0.0;  // console diagnostic; not serialized, reports stay byte-stable
};

// Split -> z-score (train-fitted) -> method transform -> supervised HMM on
// the training symbols -> Viterbi on both splits -> confusion and metrics.
RunReport run_pipeline(const MultivariateSeries& data, const LabelSequence& labels,
                       const PipelineConfig& config, PipelineArtifacts* artifacts = nullptr);

// Parameter grid; empty dimensions fall back to the base config's value.
// fcm sweeps fuzzifiers x clusters, the other methods sweep symbols.
struct SweepGrid {
    std::vector<double> fuzzifiers;
    std::vector<int> clusters;
    std::vector<int> symbols;
};

// One report per grid point, in grid order. A failing point is recorded in
// its report's `error` field and does not abort the sweep.
std::vector<RunReport> sweep(const MultivariateSeries& data, const LabelSequence& labels,
                             const PipelineConfig& base, const SweepGrid& grid);

nlohmann::json report_to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

// Summary rows sorted by test accuracy descending (failed runs last, ties in
// grid order): config columns plus train/test accuracy, sensitivity,
// specificity and F-measure. Undefined metrics become empty cells.
std::string reports_to_csv(std::vector<RunReport> reports);

enum class ReportFormat { json, csv };

// JSON: one object for a single run, a sorted array otherwise.
void emit_report(std::vector<RunReport> reports, const std::filesystem::path& path,
                 ReportFormat format);

}  // namespace mtad
