#include "mtad/preprocess.hpp"

#include <cmath>
#include <stdexcept>

namespace mtad {

ZScoreParams fit_zscore(const MultivariateSeries& train) {
    const std::size_t T = train.length();
    const std::size_t n = train.arity();
    if (T < 2) throw std::invalid_argument("fit_zscore needs at least two time points");

    ZScoreParams params;
    params.means.resize(n);
    params.stds.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t t = 0; t < T; ++t) sum += train(t, i);
        const double mean = sum / static_cast<double>(T);
        double sq = 0.0;
        for (std::size_t t = 0; t < T; ++t) {
            const double d = train(t, i) - mean;
            sq += d * d;
        }
        const double std = std::sqrt(sq / static_cast<double>(T));
        params.means[i] = mean;
        params.stds[i] = std < 1e-12 ? 1.0 : std;
    }
    return params;
}

MultivariateSeries apply_zscore(const MultivariateSeries& series, const ZScoreParams& params) {
    const std::size_t n = series.arity();
    if (params.means.size() != n || params.stds.size() != n)
        throw std::invalid_argument("z-score parameter arity does not match series");

    MultivariateSeries out(series.length(), n);
    for (std::size_t t = 0; t < series.length(); ++t)
        for (std::size_t i = 0; i < n; ++i)
            out(t, i) = (series(t, i) - params.means[i]) / params.stds[i];
    return out;
}

}  // namespace mtad
