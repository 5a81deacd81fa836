#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mtad/series.hpp"

namespace mtad {

struct FcmConfig {
    int clusters = 2;        // c; c = 1 accepted for degenerate checks
    double fuzzifier = 2.0;  // m > 1
    int max_iters = 300;
    double tol = 1e-6;       // convergence threshold on max |delta U|
    std::uint64_t seed = 1;
};

struct FcmModel {
    std::vector<std::vector<double>> prototypes;  // c x n
    std::vector<std::vector<double>> partition;   // c x T memberships, columns sum to 1
    double fuzzifier = 2.0;                       // m the model was fitted with
    double objective = 0.0;                       // final Q
    std::vector<double> objective_history;        // Q after every iteration, non-increasing
};

// Alternating optimization of the weighted squared-distance objective:
// memberships from the current prototypes, prototypes from the fuzzified
// memberships, until the partition matrix moves less than tol or max_iters
// is reached. Prototypes start at `clusters` sampled data points (distinct
// values preferred), so runs are reproducible per seed. The returned
// partition is the exact membership image of the returned prototypes.
FcmModel fcm_fit(const MultivariateSeries& data, const FcmConfig& config);

// Membership column for one point against frozen prototypes. A point that
// exactly coincides with a prototype gets membership 1 there (lowest index
// when several coincide) and 0 elsewhere.
std::vector<double> fcm_memberships(std::span<const double> point,
                                    const std::vector<std::vector<double>>& prototypes,
                                    double fuzzifier);

// Hard assignment: the 1-based index of the highest membership, ties broken
// toward the lower cluster index. These indices are the observed symbols.
ObservedSequence fcm_assign(const MultivariateSeries& points, const FcmModel& model);

}  // namespace mtad
