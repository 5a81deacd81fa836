#include "mtad/fcm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mtad/errors.hpp"
#include "mtad/rng.hpp"

namespace mtad {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        d2 += d * d;
    }
    return d2;
}

bool same_point(std::span<const double> a, std::span<const double> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// Seed prototypes at sampled data points, preferring pairwise-distinct values
// so well-separated structure is seen from the start; falls back to repeated
// values when the data hold fewer distinct points than clusters.
std::vector<std::vector<double>> init_prototypes(const MultivariateSeries& data, int clusters,
                                                 std::uint64_t seed) {
    Rng rng(Rng::derive_seed(seed, 0));
    const std::vector<std::size_t> order = rng.sample_indices(data.length(), data.length());

    std::vector<std::vector<double>> prototypes;
    std::vector<std::size_t> leftovers;
    for (std::size_t idx : order) {
        if (static_cast<int>(prototypes.size()) == clusters) break;
        const auto row = data.row(idx);
        bool duplicate = false;
        for (const auto& p : prototypes)
            if (same_point(row, p)) {
                duplicate = true;
                break;
            }
        if (duplicate)
            leftovers.push_back(idx);
        else
            prototypes.emplace_back(row.begin(), row.end());
    }
    for (std::size_t i = 0; static_cast<int>(prototypes.size()) < clusters; ++i) {
        const auto row = data.row(leftovers[i]);
        prototypes.emplace_back(row.begin(), row.end());
    }
    return prototypes;
}

}  // namespace

std::vector<double> fcm_memberships(std::span<const double> point,
                                    const std::vector<std::vector<double>>& prototypes,
                                    double fuzzifier) {
    const std::size_t c = prototypes.size();
    std::vector<double> d2(c);
    for (std::size_t i = 0; i < c; ++i) d2[i] = squared_distance(point, prototypes[i]);

    std::vector<double> u(c, 0.0);
    for (std::size_t i = 0; i < c; ++i) {
        if (d2[i] == 0.0) {
            u[i] = 1.0;  // coincident prototype; lowest index wins
            return u;
        }
    }
    // u_i = (1/d2_i)^e / sum_l (1/d2_l)^e, normalized by the smallest distance
    // so every pow argument is <= 1 and nothing overflows.
    const double exponent = 1.0 / (fuzzifier - 1.0);
    const double d2_min = *std::min_element(d2.begin(), d2.end());
    double total = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
        u[i] = std::pow(d2_min / d2[i], exponent);
        total += u[i];
    }
    for (std::size_t i = 0; i < c; ++i) u[i] /= total;
    return u;
}

FcmModel fcm_fit(const MultivariateSeries& data, const FcmConfig& config) {
    if (config.clusters < 1) throw std::invalid_argument("cluster count must be >= 1");
    if (config.fuzzifier <= 1.0) throw std::invalid_argument("fuzzifier must be > 1");
    if (config.tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (config.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (!data.all_finite()) throw numeric_error("FCM input contains non-finite values");
    const std::size_t T = data.length();
    const std::size_t c = static_cast<std::size_t>(config.clusters);
    if (T < c) throw numeric_error("fewer time points than clusters");

    FcmModel model;
    model.prototypes = init_prototypes(data, config.clusters, config.seed);
    model.partition.assign(c, std::vector<double>(T, 0.0));
    model.fuzzifier = config.fuzzifier;

    auto update_partition = [&](std::vector<std::vector<double>>& U) {
        for (std::size_t j = 0; j < T; ++j) {
            const std::vector<double> u = fcm_memberships(data.row(j), model.prototypes,
                                                          config.fuzzifier);
            for (std::size_t i = 0; i < c; ++i) U[i][j] = u[i];
        }
    };
    auto update_prototypes = [&]() {
        const std::size_t n = data.arity();
        for (std::size_t i = 0; i < c; ++i) {
            std::vector<double> num(n, 0.0);
            double den = 0.0;
            for (std::size_t j = 0; j < T; ++j) {
                const double w = std::pow(model.partition[i][j], config.fuzzifier);
                den += w;
                for (std::size_t k = 0; k < n; ++k) num[k] += w * data(j, k);
            }
            if (den > 0.0)
                for (std::size_t k = 0; k < n; ++k) model.prototypes[i][k] = num[k] / den;
            // den == 0: cluster owns no mass this round; prototype stays put
        }
    };
    auto objective = [&]() {
        double q = 0.0;
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = 0; j < T; ++j)
                q += std::pow(model.partition[i][j], config.fuzzifier) *
                     squared_distance(data.row(j), model.prototypes[i]);
        return q;
    };

    std::vector<std::vector<double>> previous;
    for (int iter = 0; iter < config.max_iters; ++iter) {
        update_partition(model.partition);
        const bool converged = [&] {
            if (previous.empty()) return false;
            double delta = 0.0;
            for (std::size_t i = 0; i < c; ++i)
                for (std::size_t j = 0; j < T; ++j)
                    delta = std::max(delta, std::abs(model.partition[i][j] - previous[i][j]));
            return delta < config.tol;
        }();
        previous = model.partition;
        update_prototypes();
        model.objective_history.push_back(objective());
        if (converged) break;
    }

    // Refresh so the stored partition is the exact Eq-image of the final
    // prototypes; this step can only lower Q.
    update_partition(model.partition);
    model.objective_history.push_back(objective());
    model.objective = model.objective_history.back();
    return model;
}

ObservedSequence fcm_assign(const MultivariateSeries& points, const FcmModel& model) {
    if (model.prototypes.empty() || points.arity() != model.prototypes.front().size())
        throw std::invalid_argument("point arity does not match prototypes");

    ObservedSequence symbols;
    symbols.reserve(points.length());
    for (std::size_t j = 0; j < points.length(); ++j) {
        const std::vector<double> u =
            fcm_memberships(points.row(j), model.prototypes, model.fuzzifier);
        std::size_t best = 0;
        for (std::size_t i = 1; i < u.size(); ++i)
            if (u[i] > u[best]) best = i;
        symbols.push_back(static_cast<int>(best) + 1);
    }
    return symbols;
}

}  // namespace mtad
