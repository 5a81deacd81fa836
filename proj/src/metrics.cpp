#include "mtad/metrics.hpp"

#include <stdexcept>

namespace mtad {

ConfusionMatrix confusion(const LabelSequence& predicted, const LabelSequence& truth) {
    if (predicted.size() != truth.size())
        throw std::invalid_argument("predicted and truth lengths differ");

    ConfusionMatrix cm;
    for (std::size_t t = 0; t < truth.size(); ++t) {
        const bool truth_normal = truth[t] == kNormalLabel;
        const bool pred_normal = predicted[t] == kNormalLabel;
        if (truth_normal && pred_normal)
            ++cm.tp;
        else if (truth_normal && !pred_normal)
            ++cm.fn;
        else if (!truth_normal && pred_normal)
            ++cm.fp;
        else
            ++cm.tn;
    }
    return cm;
}

MetricsReport compute_metrics(const ConfusionMatrix& cm) {
    if (cm.total() <= 0) throw std::invalid_argument("empty confusion matrix");

    auto ratio = [](std::int64_t num, std::int64_t den) -> std::optional<double> {
        if (den == 0) return std::nullopt;
        return static_cast<double>(num) / static_cast<double>(den);
    };

    MetricsReport r;
    r.accuracy = ratio(cm.tn + cm.tp, cm.total());
    r.sensitivity = ratio(cm.tp, cm.tp + cm.fn);
    r.specificity = ratio(cm.tn, cm.tn + cm.fp);
    r.precision = ratio(cm.tp, cm.tp + cm.fp);
    r.recall = r.sensitivity;
    if (r.precision && r.recall && (*r.precision + *r.recall) > 0.0)
        r.f_measure = 2.0 * *r.precision * *r.recall / (*r.precision + *r.recall);
    return r;
}

double improvement(double base_accuracy, double new_accuracy) {
    if (base_accuracy <= 0.0) throw std::invalid_argument("base accuracy must be positive");
    return 100.0 * (new_accuracy - base_accuracy) / base_accuracy;
}

}  // namespace mtad
