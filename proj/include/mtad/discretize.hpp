#pragma once

#include <vector>

#include "mtad/series.hpp"

namespace mtad {

// Equal-width binning over the training range. Values outside [lo, hi) clamp
// to the edge bins, so test data can never produce a symbol the trained HMM
// has not seen an index for.
struct Discretizer {
    int m_symbols = 2;
    double lo = 0.0;
    double hi = 1.0;
};

// lo/hi from min/max of the training values; a span below 1e-12 falls back
// to [lo - 0.5, hi + 0.5]. Requires at least two values and m_symbols >= 2.
Discretizer fit_bins(const std::vector<double>& train_values, int m_symbols);

// 1 + floor(M * (v - lo) / (hi - lo)); bins are right-open except the last.
int to_symbol(double value, const Discretizer& disc);

ObservedSequence to_symbols(const std::vector<double>& values, const Discretizer& disc);

}  // namespace mtad
