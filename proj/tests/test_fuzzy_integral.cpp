#include <algorithm>
#include <cmath>
#include <numeric>

#include <stdexcept>

#include <doctest.h>

#include "mtad/errors.hpp"
#include "mtad/fuzzy_integral.hpp"
#include "mtad/rng.hpp"
#include "oracles.hpp"

using mtad::FuzzyMeasure;

namespace {

// The worked three-variable example: h = [0.7, 0.4, 0.3], g = [0.21, 0.35, 0.05].
const std::vector<double> kExampleH{0.7, 0.4, 0.3};
const std::vector<double> kExampleG{0.21, 0.35, 0.05};

std::vector<double> random_densities(mtad::Rng& rng, std::size_t n) {
    std::vector<double> g(n);
    for (double& v : g) v = rng.uniform(0.02, 0.95);
    return g;
}

}  // namespace

TEST_SUITE("fuzzy_integral") {

TEST_CASE("lambda of an additive density vector is zero") {
    CHECK(mtad::solve_lambda({0.5, 0.5}) == 0.0);
    CHECK(mtad::solve_lambda({0.2, 0.3, 0.5}) == 0.0);
}

TEST_CASE("lambda for the worked example matches the bisection oracle") {
    const double lambda = mtad::solve_lambda(kExampleG);
    CHECK(lambda == doctest::Approx(3.4192).epsilon(1e-3));
    CHECK(lambda == doctest::Approx(oracles::lambda_bisect(kExampleG)).epsilon(1e-9));
}

TEST_CASE("negative-lambda quadratic case has the closed-form root") {
    // 0.36 l^2 + 0.2 l = 0 -> l = -5/9
    CHECK(mtad::solve_lambda({0.6, 0.6}) == doctest::Approx(-5.0 / 9.0).epsilon(1e-10));
}

TEST_CASE("lambda residual stays below 1e-10 on random densities") {
    mtad::Rng rng(404);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng.index(5);
        const auto g = random_densities(rng, n);
        const double lambda = mtad::solve_lambda(g);
        double prod = 1.0;
        for (double gi : g) prod *= 1.0 + lambda * gi;
        CHECK(std::abs(prod - (1.0 + lambda)) <= 1e-10);
        CHECK(lambda > -1.0);
        const double sum = std::accumulate(g.begin(), g.end(), 0.0);
        if (sum < 1.0 - 1e-9) CHECK(lambda > 0.0);
        if (sum > 1.0 + 1e-9) CHECK(lambda < 0.0);
    }
}

TEST_CASE("densities outside (0,1) are rejected") {
    CHECK_THROWS_AS(mtad::solve_lambda({0.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(mtad::solve_lambda({0.5, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(mtad::solve_lambda({0.5}), std::invalid_argument);
}

TEST_CASE("measure chain of the worked example") {
    const auto measure = mtad::make_fuzzy_measure(kExampleG);
    const auto chain = mtad::measure_chain(measure, {0, 1, 2});
    CHECK(chain[0] == doctest::Approx(0.21).epsilon(1e-12));
    CHECK(chain[1] == doctest::Approx(0.8113).epsilon(1e-3));
    CHECK(std::abs(chain[2] - 1.0) <= 1e-9);
}

TEST_CASE("additive chain is a cumulative sum") {
    const auto measure = mtad::make_fuzzy_measure({0.2, 0.3, 0.5});
    const auto chain = mtad::measure_chain(measure, {2, 0, 1});
    CHECK(chain[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(chain[1] == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(chain[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("every full chain ends at one") {
    mtad::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.index(5);
        const auto measure = mtad::make_fuzzy_measure(random_densities(rng, n));
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = 0; i + 1 < n; ++i)
            std::swap(order[i], order[i + rng.index(n - i)]);
        const auto chain = mtad::measure_chain(measure, order);
        CHECK(std::abs(chain.back() - 1.0) <= 1e-9);
    }
}

TEST_CASE("invalid permutations are rejected") {
    const auto measure = mtad::make_fuzzy_measure(kExampleG);
    CHECK_THROWS_AS(mtad::measure_chain(measure, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(mtad::measure_chain(measure, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(mtad::measure_chain(measure, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("worked example: definitional values, published values recorded as discrepancy") {
    const auto measure = mtad::make_fuzzy_measure(kExampleG);
    const double sugeno = mtad::sugeno_integral(kExampleH, measure);
    const double choquet = mtad::choquet_integral(kExampleH, measure);

    // Definitional evaluation gives 0.4000 and ~0.4441. The values 0.4400
    // and 0.7889 sometimes quoted for this example do not follow from the
    // definitions (no sorting convention yields them) and are deliberately
    // not asserted.
    CHECK(sugeno == doctest::Approx(0.4).epsilon(1e-9));
    CHECK(choquet == doctest::Approx(0.4441).epsilon(1e-3));
    CHECK(sugeno == doctest::Approx(oracles::sugeno_bruteforce(kExampleH, measure.densities,
                                                               measure.lambda))
                        .epsilon(1e-12));
    CHECK(choquet == doctest::Approx(oracles::choquet_ascending(kExampleH, measure.densities,
                                                                measure.lambda))
                         .epsilon(1e-9));
}

TEST_CASE("integrals match brute-force oracles on random inputs") {
    mtad::Rng rng(2025);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng.index(3);  // n in 2..4
        const auto measure = mtad::make_fuzzy_measure(random_densities(rng, n));
        std::vector<double> h(n);
        for (double& v : h) v = rng.uniform();

        const double sugeno = mtad::sugeno_integral(h, measure);
        const double choquet = mtad::choquet_integral(h, measure);
        CHECK(std::abs(sugeno - oracles::sugeno_bruteforce(h, measure.densities,
                                                           measure.lambda)) <= 1e-12);
        CHECK(std::abs(choquet - oracles::choquet_ascending(h, measure.densities,
                                                            measure.lambda)) <= 1e-12);

        const double hmax = *std::max_element(h.begin(), h.end());
        const double hmin = *std::min_element(h.begin(), h.end());
        CHECK(sugeno <= hmax + 1e-12);
        CHECK(choquet <= hmax + 1e-12);
        CHECK(choquet >= hmin - 1e-12);
    }
}

TEST_CASE("idempotence: constant h maps to itself") {
    mtad::Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto measure = mtad::make_fuzzy_measure(random_densities(rng, 3));
        const double c = rng.uniform();
        const std::vector<double> h(3, c);
        CHECK(std::abs(mtad::sugeno_integral(h, measure) - c) <= 1e-12);
        CHECK(std::abs(mtad::choquet_integral(h, measure) - c) <= 1e-12);
    }
}

TEST_CASE("monotonicity in h") {
    mtad::Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto measure = mtad::make_fuzzy_measure(random_densities(rng, 4));
        std::vector<double> h(4), h_up(4);
        for (std::size_t i = 0; i < 4; ++i) {
            h[i] = rng.uniform(0.0, 0.9);
            h_up[i] = h[i] + rng.uniform(0.0, 1.0 - h[i]);
        }
        CHECK(mtad::sugeno_integral(h, measure) <=
              mtad::sugeno_integral(h_up, measure) + 1e-12);
        CHECK(mtad::choquet_integral(h, measure) <=
              mtad::choquet_integral(h_up, measure) + 1e-12);
    }
}

TEST_CASE("additive Choquet is the weighted mean") {
    const auto measure = mtad::make_fuzzy_measure({0.5, 0.5});
    CHECK(measure.lambda == 0.0);
    CHECK(mtad::choquet_integral(std::vector<double>{0.2, 0.8}, measure) ==
          doctest::Approx(0.5).epsilon(1e-12));

    const auto measure3 = mtad::make_fuzzy_measure({0.2, 0.3, 0.5});
    mtad::Rng rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> h{rng.uniform(), rng.uniform(), rng.uniform()};
        const double expected = 0.2 * h[0] + 0.3 * h[1] + 0.5 * h[2];
        CHECK(std::abs(mtad::choquet_integral(h, measure3) - expected) <= 1e-12);
    }
}

TEST_CASE("permutation invariance") {
    mtad::Rng rng(15);
    const auto g = random_densities(rng, 4);
    const std::vector<double> h{0.9, 0.1, 0.6, 0.3};
    const auto measure = mtad::make_fuzzy_measure(g);
    const double sugeno = mtad::sugeno_integral(h, measure);
    const double choquet = mtad::choquet_integral(h, measure);

    const std::vector<std::size_t> perm{2, 0, 3, 1};
    std::vector<double> g_perm(4), h_perm(4);
    for (std::size_t i = 0; i < 4; ++i) {
        g_perm[i] = g[perm[i]];
        h_perm[i] = h[perm[i]];
    }
    const auto measure_perm = mtad::make_fuzzy_measure(g_perm);
    CHECK(mtad::sugeno_integral(h_perm, measure_perm) == doctest::Approx(sugeno).epsilon(1e-12));
    CHECK(mtad::choquet_integral(h_perm, measure_perm) ==
          doctest::Approx(choquet).epsilon(1e-12));
}

TEST_CASE("h out of range is rejected") {
    const auto measure = mtad::make_fuzzy_measure({0.3, 0.3});
    CHECK_THROWS_AS(mtad::sugeno_integral(std::vector<double>{0.5, 1.2}, measure),
                    std::invalid_argument);
    CHECK_THROWS_AS(mtad::choquet_integral(std::vector<double>{-0.1, 0.5}, measure),
                    std::invalid_argument);
}

TEST_CASE("unit rescale fit and apply") {
    const auto train = mtad::MultivariateSeries::from_rows({{-2.0, 3.0}, {0.0, 3.0}, {2.0, 3.0}});
    const auto params = mtad::fit_unit_rescale(train);
    CHECK(params.mins[0] == -2.0);
    CHECK(params.maxs[0] == 2.0);
    CHECK(params.mins[1] == doctest::Approx(2.5));  // constant column fallback
    CHECK(params.maxs[1] == doctest::Approx(3.5));

    const auto applied = mtad::apply_unit_rescale(train, params);
    CHECK(applied(0, 0) == 0.0);
    CHECK(applied(2, 0) == 1.0);
    CHECK(applied(1, 0) == doctest::Approx(0.5));
    CHECK(applied(1, 1) == doctest::Approx(0.5));

    const auto test = mtad::MultivariateSeries::from_rows({{5.0, 10.0}});
    const auto clamped = mtad::apply_unit_rescale(test, params);
    CHECK(clamped(0, 0) == 1.0);
    CHECK(clamped(0, 1) == 1.0);
}

TEST_CASE("label-correlated densities favor the informative column") {
    const std::size_t T = 200;
    mtad::Rng rng(21);
    mtad::MultivariateSeries train(T, 3);
    mtad::LabelSequence labels(T);
    for (std::size_t t = 0; t < T; ++t) {
        labels[t] = (t % 5 == 0) ? mtad::kAbnormalLabel : mtad::kNormalLabel;
        train(t, 0) = labels[t] == mtad::kAbnormalLabel ? 1.0 : 0.0;  // perfectly correlated
        train(t, 1) = rng.uniform(-1.0, 1.0);
        train(t, 2) = rng.uniform(-1.0, 1.0);
    }
    const auto g = mtad::densities_from_labels(train, labels, 0.6);
    CHECK(g.size() == 3);
    CHECK(std::abs(g[0] + g[1] + g[2] - 0.6) <= 1e-12);
    CHECK(g[0] > 5.0 * g[1]);
    CHECK(g[0] > 5.0 * g[2]);

    SUBCASE("single-class labels are reported") {
        const mtad::LabelSequence ones(T, mtad::kNormalLabel);
        CHECK_THROWS_AS(mtad::densities_from_labels(train, ones, 0.6), mtad::numeric_error);
    }
}

TEST_CASE("uniform densities and the additive short circuit") {
    const auto g = mtad::uniform_densities(4, 1.0);
    CHECK(g == std::vector<double>{0.25, 0.25, 0.25, 0.25});
    CHECK(mtad::solve_lambda(g) == 0.0);
    CHECK_THROWS_AS(mtad::uniform_densities(3, 3.0), std::invalid_argument);
}

}  // TEST_SUITE
