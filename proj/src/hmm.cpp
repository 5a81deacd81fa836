#include "mtad/hmm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mtad/errors.hpp"

namespace mtad {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_sequences(const ObservedSequence& obs, const LabelSequence& labels, int m_symbols) {
    if (obs.size() != labels.size())
        throw std::invalid_argument("observation and label lengths differ");
    if (obs.size() < 2) throw std::invalid_argument("need at least two labeled points");
    if (m_symbols < 1) throw std::invalid_argument("symbol count must be >= 1");
    for (int s : obs)
        if (s < 1 || s > m_symbols) throw std::invalid_argument("symbol outside 1..M");
    for (int l : labels)
        if (l != kNormalLabel && l != kAbnormalLabel)
            throw std::invalid_argument("label outside {1,2}");
}

void normalize_row(std::vector<double>& row) {
    double sum = 0.0;
    for (double v : row) sum += v;
    for (double& v : row) v /= sum;
}

double safe_log(double p) { return p > 0.0 ? std::log(p) : kNegInf; }

}  // namespace

HmmModel estimate_supervised(const ObservedSequence& obs, const LabelSequence& labels,
                             int m_symbols, double alpha) {
    check_sequences(obs, labels, m_symbols);
    if (alpha < 0.0) throw std::invalid_argument("smoothing must be >= 0");

    const std::size_t T = obs.size();
    const std::size_t M = static_cast<std::size_t>(m_symbols);

    std::array<double, 2> state_count{0.0, 0.0};
    std::array<std::array<double, 2>, 2> trans_count{};
    std::array<std::vector<double>, 2> emit_count{std::vector<double>(M, 0.0),
                                                  std::vector<double>(M, 0.0)};
    for (std::size_t t = 0; t < T; ++t) {
        const int i = labels[t] - 1;
        state_count[i] += 1.0;
        emit_count[i][obs[t] - 1] += 1.0;
        if (t + 1 < T) trans_count[i][labels[t + 1] - 1] += 1.0;
    }

    HmmModel model;
    model.m_symbols = m_symbols;

    for (int i = 0; i < 2; ++i)
        model.pi[i] = (state_count[i] + alpha) / (static_cast<double>(T) + 2.0 * alpha);
    {
        std::vector<double> pi(model.pi.begin(), model.pi.end());
        normalize_row(pi);
        model.pi = {pi[0], pi[1]};
    }

    for (int i = 0; i < 2; ++i) {
        const double from = trans_count[i][0] + trans_count[i][1];
        std::vector<double> row(2);
        if (from + alpha > 0.0) {
            for (int j = 0; j < 2; ++j)
                row[j] = (trans_count[i][j] + alpha) / (from + 2.0 * alpha);
        } else {
            row = {0.5, 0.5};  // state absent, alpha = 0
        }
        normalize_row(row);
        model.trans[i] = {row[0], row[1]};
    }

    for (int i = 0; i < 2; ++i) {
        std::vector<double> row(M);
        if (state_count[i] + alpha > 0.0) {
            for (std::size_t k = 0; k < M; ++k)
                row[k] = (emit_count[i][k] + alpha) /
                         (state_count[i] + static_cast<double>(M) * alpha);
        } else {
            row.assign(M, 1.0 / static_cast<double>(M));
        }
        normalize_row(row);
        model.emit[i] = std::move(row);
    }
    return model;
}

StatePath viterbi(const ObservedSequence& obs, const HmmModel& model) {
    if (obs.empty()) throw std::invalid_argument("cannot decode an empty sequence");
    for (int s : obs)
        if (s < 1 || s > model.m_symbols)
            throw std::invalid_argument("symbol outside the model's 1..M range");

    const std::size_t T = obs.size();
    std::array<double, 2> log_pi{safe_log(model.pi[0]), safe_log(model.pi[1])};
    std::array<std::array<double, 2>, 2> log_a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) log_a[i][j] = safe_log(model.trans[i][j]);
    auto log_b = [&](int state, int symbol) { return safe_log(model.emit[state][symbol - 1]); };

    std::vector<std::array<unsigned char, 2>> back(T);
    std::array<double, 2> delta{log_pi[0] + log_b(0, obs[0]), log_pi[1] + log_b(1, obs[0])};

    for (std::size_t t = 1; t < T; ++t) {
        std::array<double, 2> next;
        for (int i = 0; i < 2; ++i) {
            double best = delta[0] + log_a[0][i];
            unsigned char arg = 0;
            const double cand = delta[1] + log_a[1][i];
            if (cand > best) {
                best = cand;
                arg = 1;
            }
            next[i] = best + log_b(i, obs[t]);
            back[t][i] = arg;
        }
        delta = next;
    }

    int last = delta[1] > delta[0] ? 1 : 0;
    if (delta[last] == kNegInf) throw numeric_error("undecodable sequence: all paths have probability zero");

    StatePath path;
    path.log_prob = delta[last];
    path.states.resize(T);
    path.states[T - 1] = last + 1;
    for (std::size_t t = T - 1; t > 0; --t) {
        last = back[t][last];
        path.states[t - 1] = last + 1;
    }
    return path;
}

nlohmann::json hmm_to_json(const HmmModel& model) {
    return nlohmann::json{
        {"pi", model.pi},
        {"trans", model.trans},
        {"emit", model.emit},
        {"m_symbols", model.m_symbols},
    };
}

HmmModel hmm_from_json(const nlohmann::json& j) {
    HmmModel model;
    model.pi = j.at("pi").get<std::array<double, 2>>();
    model.trans = j.at("trans").get<std::array<std::array<double, 2>, 2>>();
    model.emit = j.at("emit").get<std::array<std::vector<double>, 2>>();
    model.m_symbols = j.at("m_symbols").get<int>();
    if (model.m_symbols < 1 ||
        model.emit[0].size() != static_cast<std::size_t>(model.m_symbols) ||
        model.emit[1].size() != static_cast<std::size_t>(model.m_symbols))
        throw std::invalid_argument("emission width does not match m_symbols");
    return model;
}

}  // namespace mtad
