#include "mtad/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mtad/rng.hpp"

namespace mtad {

namespace {

double base_value(const SynthConfig& config, std::size_t var, std::size_t t) {
    const double amp_sin = 2.0 + 0.5 * static_cast<double>(var);
    const double amp_cos = 1.0 + 0.25 * static_cast<double>(var);
    double f_sin = config.frequencies.empty()
                       ? 3.0 + 2.0 * static_cast<double>(var)
                       : config.frequencies[var];
    double f_cos = config.frequencies.empty() ? 5.0 + 3.0 * static_cast<double>(var)
                                              : config.frequencies[var] + 2.0;
    if (t >= config.length / 2) {
        f_sin *= 2.0;
        f_cos *= 2.0;
    }
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(t) /
                         static_cast<double>(config.length);
    return amp_sin * std::sin(f_sin * phase) + amp_cos * std::cos(f_cos * phase);
}

}  // namespace

SynthData generate_series(const SynthConfig& config) {
    if (config.length < 10) throw std::invalid_argument("length must be >= 10");
    if (config.n_vars < 1) throw std::invalid_argument("n_vars must be >= 1");
    if (!(config.anomaly_rate >= 0.0 && config.anomaly_rate < 1.0))
        throw std::invalid_argument("anomaly_rate must lie in [0, 1)");
    if (config.noise_std < 0.0) throw std::invalid_argument("noise_std must be >= 0");
    if (!config.frequencies.empty() && config.frequencies.size() != config.n_vars)
        throw std::invalid_argument("frequency override size does not match n_vars");

    const std::size_t T = config.length;
    const std::size_t n = config.n_vars;

    SynthData out;
    out.series = MultivariateSeries(T, n);
    out.labels.assign(T, kNormalLabel);

    Rng noise_rng(Rng::derive_seed(config.seed, 1));
    for (std::size_t t = 0; t < T; ++t)
        for (std::size_t i = 0; i < n; ++i)
            out.series(t, i) = base_value(config, i, t) + noise_rng.normal(0.0, config.noise_std);

    const std::size_t n_anomalies =
        static_cast<std::size_t>(std::ceil(config.anomaly_rate * static_cast<double>(T)));
    Rng pick_rng(Rng::derive_seed(config.seed, 2));
    std::vector<std::size_t> points = pick_rng.sample_indices(T, n_anomalies);
    std::sort(points.begin(), points.end());

    Rng mult_rng(Rng::derive_seed(config.seed, 3));
    for (std::size_t t : points) {
        for (std::size_t i = 0; i < n; ++i) out.series(t, i) *= mult_rng.uniform(0.0, 3.0);
        out.labels[t] = kAbnormalLabel;
    }
    return out;
}

}  // namespace mtad
