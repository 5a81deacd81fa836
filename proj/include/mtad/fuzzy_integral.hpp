#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mtad/series.hpp"

namespace mtad {

// A lambda-fuzzy measure over n variables: per-variable densities g_i in
// (0,1) plus the interaction parameter lambda > -1 that normalizes the
// measure of the full set to 1. The measure of a disjoint union is
// g(A) + g(B) + lambda * g(A) * g(B).
struct FuzzyMeasure {
    std::vector<double> densities;
    double lambda = 0.0;
};

// Root of  1 + lambda = prod(1 + lambda * g_i)  with lambda > -1.
// Exactly 0 when |sum(g) - 1| <= 1e-12 (additive measure); otherwise the
// unique nonzero root: positive when sum(g) < 1, in (-1, 0) when sum(g) > 1.
// Bracketed bisection with a Newton polish; residual <= 1e-10.
// Requires n >= 2 and every density in (0, 1).
double solve_lambda(const std::vector<double>& densities);

// Validates densities and solves lambda in one step.
FuzzyMeasure make_fuzzy_measure(std::vector<double> densities);

// Cumulative measures g(A_1)..g(A_n) along `order` (a 0-based permutation of
// the variables) via g(A_i) = g_i + g(A_{i-1}) + lambda * g_i * g(A_{i-1}).
// The final element is 1 up to roundoff.
std::vector<double> measure_chain(const FuzzyMeasure& measure,
                                  const std::vector<std::size_t>& order);

// Sugeno integral: sort h descending, return max_i min(h_(i), g(A_i)) where
// A_i is the top-i variable set. All h values must lie in [0, 1].
double sugeno_integral(std::span<const double> h, const FuzzyMeasure& measure);

// Choquet integral: sort h descending, return
// sum_i (h_(i) - h_(i+1)) * g(A_i) with h_(n+1) = 0.
double choquet_integral(std::span<const double> h, const FuzzyMeasure& measure);

// Per-column affine map onto [0, 1], fitted on training data. Needed because
// the integrals require h in [0,1] while z-scored data are unbounded.
struct UnitRescaleParams {
    std::vector<double> mins;
    std::vector<double> maxs;
};

// Column min/max over training rows; a span below 1e-12 falls back to
// [v - 0.5, v + 0.5]. Requires T >= 2.
UnitRescaleParams fit_unit_rescale(const MultivariateSeries& train);

// (v - min) / (max - min), clamped to [0, 1] for out-of-range test values.
MultivariateSeries apply_unit_rescale(const MultivariateSeries& series,
                                      const UnitRescaleParams& params);

// Densities proportional to |point-biserial correlation| between each column
// and the binary labels, rescaled to sum to density_sum; zero-correlation
// columns get a 1e-3 floor before rescaling. Throws numeric_error when the
// labels hold a single class (use uniform_densities instead).
std::vector<double> densities_from_labels(const MultivariateSeries& train,
                                          const LabelSequence& labels, double density_sum);

// g_i = density_sum / n for all i. density_sum must lie in (0, n).
std::vector<double> uniform_densities(std::size_t n, double density_sum);

// Convenience: one integral value per time point of `series01` (values
// already in [0,1]).
enum class IntegralKind { sugeno, choquet };
std::vector<double> integral_transform(const MultivariateSeries& series01,
                                       const FuzzyMeasure& measure, IntegralKind kind);

}  // namespace mtad
