#pragma once

#include <cstdint>
#include <vector>

#include "mtad/series.hpp"

namespace mtad {

// Seeded generator of sine/cosine mixtures with additive Gaussian noise and
// amplitude anomalies (random multiplier in [0, 3] applied to every variable
// at the chosen time points).
//
// Waveform for variable i (0-based) at sample t of T:
//   base_i(t) = (2.0 + 0.5 i) * sin(2 pi f_i t / T) + (1.0 + 0.25 i) * cos(2 pi c_i t / T)
// with f_i = 3 + 2 i and c_i = 5 + 3 i cycles per series; both frequencies
// double for t >= T/2, giving each variable a visible regime change.
// `frequencies`, when set, overrides f_i per variable (c_i stays f_i + 2).
//
// All randomness comes from mt19937_64 streams derived from `seed` (one for
// noise, one for anomaly placement, one for multipliers), so output is
// bit-reproducible across platforms.
struct SynthConfig {
    std::size_t length = 2000;      // T
    std::size_t n_vars = 3;
    double anomaly_rate = 0.1;      // in [0, 1); ceil(rate * T) points get injected
    double noise_std = 1.0;
    std::uint64_t seed = 42;
    std::vector<double> frequencies;  // optional sine-frequency override, size n_vars
};

struct SynthData {
    MultivariateSeries series;
    LabelSequence labels;  // 2 exactly at injected points, 1 elsewhere
};

SynthData generate_series(const SynthConfig& config);

}  // namespace mtad
