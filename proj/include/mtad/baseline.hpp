#pragma once

#include <vector>

#include "mtad/series.hpp"

namespace mtad {

// First principal component of the (population) covariance of the training
// columns, found by power iteration.
struct PcaModel {
    std::vector<double> direction;  // unit norm; largest-magnitude entry positive
    double eigenvalue = 0.0;
    std::vector<double> column_means;
};

// Throws numeric_error when the columns carry no variance at all.
PcaModel pca_fit(const MultivariateSeries& train);

// out[t] = direction . (x_t - column_means)
std::vector<double> pca_project(const MultivariateSeries& series, const PcaModel& model);

// out[t] = mean over variables of row t.
std::vector<double> mean_fusion(const MultivariateSeries& series);

}  // namespace mtad
