#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "mtad/series.hpp"

namespace mtad {

// Two-hidden-state HMM over discrete symbols 1..M. State 1 is normal,
// state 2 abnormal.
struct HmmModel {
    std::array<double, 2> pi{};                   // initial vector
    std::array<std::array<double, 2>, 2> trans{}; // row-stochastic
    std::array<std::vector<double>, 2> emit{};    // 2 x M, row-stochastic
    int m_symbols = 0;

    bool operator==(const HmmModel&) const = default;
};

struct StatePath {
    LabelSequence states;   // length T over {1, 2}
    double log_prob = 0.0;  // log of the path's joint probability, -inf possible
};

// Counting estimator with Laplace smoothing alpha:
//   pi_i = (count_i + alpha) / (T + 2 alpha)           (hidden-state frequency)
//   a_ij = (count_ij + alpha) / (count_i. + 2 alpha)   (transition counts)
//   b_ik = (count_ik + alpha) / (count_i + M alpha)    (emission counts)
// followed by an exact row renormalization. With alpha = 0 a state that never
// occurs gets uniform rows (the alpha -> 0 limit of the smoothed estimate);
// such a state is unreachable anyway because its pi and incoming transition
// estimates are 0.
HmmModel estimate_supervised(const ObservedSequence& obs, const LabelSequence& labels,
                             int m_symbols, double alpha);

// Log-space Viterbi with backpointer reconstruction. Ties break toward the
// lower state index at every max. Throws numeric_error when every full path
// has probability zero (undecodable sequence).
StatePath viterbi(const ObservedSequence& obs, const HmmModel& model);

// JSON round trip (fields pi, trans, emit, m_symbols); values survive
// serialization exactly.
nlohmann::json hmm_to_json(const HmmModel& model);
HmmModel hmm_from_json(const nlohmann::json& j);

}  // namespace mtad
