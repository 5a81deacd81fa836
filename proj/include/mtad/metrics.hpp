#pragma once

#include <cstdint>
#include <optional>

#include "mtad/series.hpp"

namespace mtad {

// "Positive" means NORMAL throughout:
//   tp = normal predicted normal      fn = normal predicted abnormal
//   tn = abnormal predicted abnormal  fp = abnormal predicted normal
// so sensitivity is the normal-detection rate and specificity the
// abnormal-detection rate.
struct ConfusionMatrix {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t tn = 0;
    std::int64_t fn = 0;

    std::int64_t total() const { return tp + fp + tn + fn; }
    bool operator==(const ConfusionMatrix&) const = default;
};

// A nullopt field means the metric's denominator was zero; that is distinct
// from a genuine 0 or 1 score and is emitted as an explicit marker.
struct MetricsReport {
    std::optional<double> accuracy;
    std::optional<double> sensitivity;
    std::optional<double> specificity;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f_measure;

    bool operator==(const MetricsReport&) const = default;
};

ConfusionMatrix confusion(const LabelSequence& predicted, const LabelSequence& truth);

MetricsReport compute_metrics(const ConfusionMatrix& cm);

// 100 * (new_accuracy - base_accuracy) / base_accuracy, in percent.
double improvement(double base_accuracy, double new_accuracy);

}  // namespace mtad
