#include "mtad/fuzzy_integral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mtad/errors.hpp"

namespace mtad {

namespace {

void check_densities(const std::vector<double>& densities) {
    if (densities.size() < 2)
        throw std::invalid_argument("fuzzy measure needs at least two densities");
    for (double g : densities)
        if (!(g > 0.0 && g < 1.0))
            throw std::invalid_argument("density outside (0,1): " + std::to_string(g));
}

// f(lambda) = prod(1 + lambda*g_i) - 1 - lambda; the measure equation root.
double lambda_residual(double lambda, const std::vector<double>& densities) {
    double prod = 1.0;
    for (double g : densities) prod *= 1.0 + lambda * g;
    return prod - 1.0 - lambda;
}

double lambda_residual_derivative(double lambda, const std::vector<double>& densities) {
    double sum = 0.0;
    for (std::size_t i = 0; i < densities.size(); ++i) {
        double term = densities[i];
        for (std::size_t l = 0; l < densities.size(); ++l)
            if (l != i) term *= 1.0 + lambda * densities[l];
        sum += term;
    }
    return sum - 1.0;
}

void check_h(std::span<const double> h, std::size_t n) {
    if (h.size() != n) throw std::invalid_argument("h arity does not match measure");
    for (double v : h)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("h value outside [0,1]: " + std::to_string(v));
}

// Variable indices ordered by descending h, ties keeping the original order.
std::vector<std::size_t> descending_order(std::span<const double> h) {
    std::vector<std::size_t> order(h.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return h[a] > h[b]; });
    return order;
}

}  // namespace

double solve_lambda(const std::vector<double>& densities) {
    check_densities(densities);
    const double sum = std::accumulate(densities.begin(), densities.end(), 0.0);
    if (std::abs(sum - 1.0) <= 1e-12) return 0.0;

    // The nonzero root is positive when sum < 1 (residual is negative just
    // right of 0 and grows without bound) and lies in (-1, 0) when sum > 1
    // (residual is positive at -1 and negative just left of 0).
    double lo, hi;
    if (sum < 1.0) {
        lo = 0.0;
        hi = 1.0;
        while (lambda_residual(hi, densities) <= 0.0) {
            hi *= 2.0;
            if (hi > 1e12) throw numeric_error("lambda bracket expansion failed");
        }
    } else {
        lo = -1.0;
        hi = 0.0;
    }

    // Bisection keeps lambda in (lo, hi): residual < 0 on the root's
    // zero-side for sum < 1, mirrored for sum > 1.
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f = lambda_residual(mid, densities);
        const bool root_above = (sum < 1.0) ? f < 0.0 : f >= 0.0;
        if (root_above)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15 * std::max(1.0, std::abs(lo))) break;
    }

    double lambda = 0.5 * (lo + hi);
    for (int iter = 0; iter < 4; ++iter) {
        const double f = lambda_residual(lambda, densities);
        const double df = lambda_residual_derivative(lambda, densities);
        if (df == 0.0) break;
        const double next = lambda - f / df;
        if (next <= -1.0 || next < lo - (hi - lo) || next > hi + (hi - lo)) break;
        lambda = next;
    }
    return lambda;
}

FuzzyMeasure make_fuzzy_measure(std::vector<double> densities) {
    FuzzyMeasure measure;
    measure.lambda = solve_lambda(densities);
    measure.densities = std::move(densities);
    return measure;
}

std::vector<double> measure_chain(const FuzzyMeasure& measure,
                                  const std::vector<std::size_t>& order) {
    const std::size_t n = measure.densities.size();
    if (order.size() != n) throw std::invalid_argument("order is not a permutation");
    std::vector<bool> seen(n, false);
    for (std::size_t idx : order) {
        if (idx >= n || seen[idx]) throw std::invalid_argument("order is not a permutation");
        seen[idx] = true;
    }

    std::vector<double> chain(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double g = measure.densities[order[i]];
        acc = g + acc + measure.lambda * g * acc;
        chain[i] = acc;
    }
    return chain;
}

double sugeno_integral(std::span<const double> h, const FuzzyMeasure& measure) {
    check_h(h, measure.densities.size());
    const std::vector<std::size_t> order = descending_order(h);
    const std::vector<double> chain = measure_chain(measure, order);

    double best = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i)
        best = std::max(best, std::min(h[order[i]], chain[i]));
    return best;
}

double choquet_integral(std::span<const double> h, const FuzzyMeasure& measure) {
    check_h(h, measure.densities.size());
    const std::vector<std::size_t> order = descending_order(h);
    const std::vector<double> chain = measure_chain(measure, order);

    double total = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const double next = (i + 1 < order.size()) ? h[order[i + 1]] : 0.0;
        total += (h[order[i]] - next) * chain[i];
    }
    return total;
}

UnitRescaleParams fit_unit_rescale(const MultivariateSeries& train) {
    if (train.length() < 2)
        throw std::invalid_argument("fit_unit_rescale needs at least two time points");

    UnitRescaleParams params;
    params.mins.resize(train.arity());
    params.maxs.resize(train.arity());
    for (std::size_t i = 0; i < train.arity(); ++i) {
        double lo = train(0, i), hi = train(0, i);
        for (std::size_t t = 1; t < train.length(); ++t) {
            lo = std::min(lo, train(t, i));
            hi = std::max(hi, train(t, i));
        }
        if (hi - lo < 1e-12) {
            lo -= 0.5;
            hi += 0.5;
        }
        params.mins[i] = lo;
        params.maxs[i] = hi;
    }
    return params;
}

MultivariateSeries apply_unit_rescale(const MultivariateSeries& series,
                                      const UnitRescaleParams& params) {
    const std::size_t n = series.arity();
    if (params.mins.size() != n || params.maxs.size() != n)
        throw std::invalid_argument("rescale parameter arity does not match series");

    MultivariateSeries out(series.length(), n);
    for (std::size_t t = 0; t < series.length(); ++t)
        for (std::size_t i = 0; i < n; ++i) {
            const double span = params.maxs[i] - params.mins[i];
            const double v = (series(t, i) - params.mins[i]) / span;
            out(t, i) = std::clamp(v, 0.0, 1.0);
        }
    return out;
}

std::vector<double> densities_from_labels(const MultivariateSeries& train,
                                          const LabelSequence& labels, double density_sum) {
    const std::size_t T = train.length();
    const std::size_t n = train.arity();
    if (labels.size() != T) throw std::invalid_argument("label count does not match series");
    if (!(density_sum > 0.0 && density_sum < static_cast<double>(n)))
        throw std::invalid_argument("density_sum must lie in (0, n)");

    double label_mean = 0.0;
    for (int l : labels) label_mean += (l == kAbnormalLabel) ? 1.0 : 0.0;
    label_mean /= static_cast<double>(T);
    const double label_var = label_mean * (1.0 - label_mean);
    if (label_var == 0.0)
        throw numeric_error("labels hold a single class; correlation undefined");

    std::vector<double> weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        double mean = 0.0;
        for (std::size_t t = 0; t < T; ++t) mean += train(t, i);
        mean /= static_cast<double>(T);
        double cov = 0.0, var = 0.0;
        for (std::size_t t = 0; t < T; ++t) {
            const double dx = train(t, i) - mean;
            const double dy = ((labels[t] == kAbnormalLabel) ? 1.0 : 0.0) - label_mean;
            cov += dx * dy;
            var += dx * dx;
        }
        const double denom = std::sqrt(var * label_var * static_cast<double>(T));
        double r = denom > 0.0 ? std::abs(cov / denom) : 0.0;
        weights[i] = std::max(r, 1e-3);
    }

    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<double> densities(n);
    for (std::size_t i = 0; i < n; ++i) densities[i] = weights[i] / total * density_sum;
    return densities;
}

std::vector<double> uniform_densities(std::size_t n, double density_sum) {
    if (n < 2) throw std::invalid_argument("need at least two variables");
    if (!(density_sum > 0.0 && density_sum < static_cast<double>(n)))
        throw std::invalid_argument("density_sum must lie in (0, n)");
    return std::vector<double>(n, density_sum / static_cast<double>(n));
}

std::vector<double> integral_transform(const MultivariateSeries& series01,
                                       const FuzzyMeasure& measure, IntegralKind kind) {
    std::vector<double> out;
    out.reserve(series01.length());
    for (std::size_t t = 0; t < series01.length(); ++t) {
        const auto h = series01.row(t);
        out.push_back(kind == IntegralKind::sugeno ? sugeno_integral(h, measure)
                                                   : choquet_integral(h, measure));
    }
    return out;
}

}  // namespace mtad
