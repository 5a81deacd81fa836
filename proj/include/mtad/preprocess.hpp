#pragma once

#include <vector>

#include "mtad/series.hpp"

namespace mtad {

// Per-column normalization parameters, fitted on the training split only.
struct ZScoreParams {
    std::vector<double> means;
    std::vector<double> stds;  // population std; 1.0 for constant columns
};

// Population (1/T) statistics. Columns whose std falls below 1e-12 get
// std = 1 so degenerate sensors stay usable. Requires T >= 2.
ZScoreParams fit_zscore(const MultivariateSeries& train);

// out[t][i] = (in[t][i] - means[i]) / stds[i]
MultivariateSeries apply_zscore(const MultivariateSeries& series, const ZScoreParams& params);

}  // namespace mtad
