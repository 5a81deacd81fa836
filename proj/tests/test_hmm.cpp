#include <cmath>

#include <stdexcept>

#include <doctest.h>

#include "mtad/errors.hpp"
#include "mtad/hmm.hpp"
#include "mtad/rng.hpp"
#include "oracles.hpp"

using mtad::HmmModel;
using mtad::LabelSequence;
using mtad::ObservedSequence;

namespace {

HmmModel random_model(mtad::Rng& rng, int m_symbols) {
    HmmModel model;
    model.m_symbols = m_symbols;
    double pi0 = rng.uniform(0.05, 0.95);
    model.pi = {pi0, 1.0 - pi0};
    for (int i = 0; i < 2; ++i) {
        const double a = rng.uniform(0.05, 0.95);
        model.trans[i] = {a, 1.0 - a};
        std::vector<double> row(m_symbols);
        double sum = 0.0;
        for (double& v : row) {
            v = rng.uniform(0.05, 1.0);
            sum += v;
        }
        for (double& v : row) v /= sum;
        model.emit[i] = row;
    }
    return model;
}

}  // namespace

TEST_SUITE("hmm") {

TEST_CASE("supervised counts on a five-point example") {
    const ObservedSequence obs{1, 2, 1, 2, 2};
    const LabelSequence labels{1, 1, 2, 2, 1};
    const auto model = mtad::estimate_supervised(obs, labels, 2, 0.0);

    CHECK(model.pi[0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(model.pi[1] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(model.trans[0][0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.trans[0][1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.trans[1][0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.trans[1][1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.emit[0][0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(model.emit[0][1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(model.emit[1][0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.emit[1][1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("single-class labels without smoothing") {
    const ObservedSequence obs{1, 1, 2, 1};
    const LabelSequence labels{1, 1, 1, 1};
    const auto model = mtad::estimate_supervised(obs, labels, 2, 0.0);
    CHECK(model.pi[0] == 1.0);
    CHECK(model.pi[1] == 0.0);
    CHECK(model.trans[0][0] == 1.0);
}

TEST_CASE("Laplace smoothing keeps unseen symbols strictly positive") {
    const ObservedSequence obs{1, 1, 1, 2};
    const LabelSequence labels{1, 1, 2, 2};
    const int m = 3;  // symbol 3 never emitted
    const auto model = mtad::estimate_supervised(obs, labels, m, 1.0);
    // state 1 occurs twice; b_1k = (count + 1) / (2 + 3)
    CHECK(model.emit[0][2] == doctest::Approx(1.0 / 5.0).epsilon(1e-12));
    for (int i = 0; i < 2; ++i) {
        CHECK(model.pi[i] > 0.0);
        for (int j = 0; j < 2; ++j) CHECK(model.trans[i][j] > 0.0);
        for (int k = 0; k < m; ++k) CHECK(model.emit[i][k] > 0.0);
    }
}

TEST_CASE("rows are stochastic for random labeled data") {
    mtad::Rng rng(600);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t T = 2 + rng.index(60);
        const int m = 2 + static_cast<int>(rng.index(5));
        ObservedSequence obs(T);
        LabelSequence labels(T);
        for (std::size_t t = 0; t < T; ++t) {
            obs[t] = 1 + static_cast<int>(rng.index(m));
            labels[t] = rng.uniform() < 0.7 ? 1 : 2;
        }
        const double alpha = rng.uniform() < 0.5 ? 0.0 : rng.uniform(0.1, 2.0);
        const auto model = mtad::estimate_supervised(obs, labels, m, alpha);

        CHECK(std::abs(model.pi[0] + model.pi[1] - 1.0) <= 1e-12);
        for (int i = 0; i < 2; ++i) {
            CHECK(std::abs(model.trans[i][0] + model.trans[i][1] - 1.0) <= 1e-12);
            double sum = 0.0;
            for (double b : model.emit[i]) {
                CHECK(b >= 0.0);
                sum += b;
            }
            CHECK(std::abs(sum - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("estimation rejects malformed input") {
    CHECK_THROWS_AS(mtad::estimate_supervised({1, 2}, {1}, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(mtad::estimate_supervised({1, 3}, {1, 1}, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(mtad::estimate_supervised({1, 2}, {1, 5}, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(mtad::estimate_supervised({1, 2}, {1, 1}, 2, -0.5), std::invalid_argument);
}

TEST_CASE("absorbing single state decodes to all ones") {
    HmmModel model;
    model.m_symbols = 2;
    model.pi = {1.0, 0.0};
    model.trans = {{{1.0, 0.0}, {0.5, 0.5}}};
    model.emit[0] = {0.5, 0.5};
    model.emit[1] = {0.5, 0.5};
    const auto path = mtad::viterbi({1, 2, 1, 1, 2}, model);
    CHECK(path.states == LabelSequence{1, 1, 1, 1, 1});
}

TEST_CASE("three-step example decoded against full enumeration") {
    HmmModel model;
    model.m_symbols = 2;
    model.pi = {0.6, 0.4};
    model.trans = {{{0.7, 0.3}, {0.4, 0.6}}};
    model.emit[0] = {0.5, 0.5};
    model.emit[1] = {0.1, 0.9};
    const ObservedSequence obs{1, 2, 2};
    const auto path = mtad::viterbi(obs, model);
    CHECK(path.states == LabelSequence{1, 2, 2});
    CHECK(std::exp(path.log_prob) == doctest::Approx(0.04374).epsilon(1e-9));

    const auto brute = oracles::viterbi_bruteforce(obs, model);
    CHECK(brute.states == path.states);
    CHECK(path.log_prob == doctest::Approx(brute.log_prob).epsilon(1e-12));
}

TEST_CASE("matches exhaustive enumeration on random models") {
    mtad::Rng rng(601);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + static_cast<int>(rng.index(3));
        const std::size_t T = 2 + rng.index(7);
        const auto model = random_model(rng, m);
        ObservedSequence obs(T);
        for (auto& s : obs) s = 1 + static_cast<int>(rng.index(m));

        const auto fast = mtad::viterbi(obs, model);
        const auto brute = oracles::viterbi_bruteforce(obs, model);
        CHECK(std::abs(fast.log_prob - brute.log_prob) <= 1e-9);
        // the decoded path must itself attain the enumerated optimum
        CHECK(std::abs(oracles::path_log_prob(obs, model, fast.states) - brute.log_prob) <=
              1e-9);
        CHECK(std::abs(oracles::path_log_prob(obs, model, fast.states) - fast.log_prob) <= 1e-9);
        if (brute.runner_up < brute.log_prob - 1e-9) CHECK(fast.states == brute.states);
    }
}

TEST_CASE("emission scaling does not change the decoded path") {
    mtad::Rng rng(602);
    const auto model = random_model(rng, 3);
    ObservedSequence obs(40);
    for (auto& s : obs) s = 1 + static_cast<int>(rng.index(3));
    const auto base = mtad::viterbi(obs, model);

    HmmModel scaled = model;  // scale then renormalize: identical rows
    for (int i = 0; i < 2; ++i) {
        double sum = 0.0;
        for (double& b : scaled.emit[i]) {
            b *= 7.5;
            sum += b;
        }
        for (double& b : scaled.emit[i]) b /= sum;
    }
    CHECK(mtad::viterbi(obs, scaled).states == base.states);
}

TEST_CASE("deterministic emissions recover the training labels") {
    mtad::Rng rng(603);
    const std::size_t T = 400;
    ObservedSequence obs(T);
    LabelSequence labels(T);
    for (std::size_t t = 0; t < T; ++t) {
        labels[t] = rng.uniform() < 0.8 ? 1 : 2;
        obs[t] = labels[t] == 1 ? 1 + static_cast<int>(rng.index(2))
                                : 3 + static_cast<int>(rng.index(2));
    }
    const auto model = mtad::estimate_supervised(obs, labels, 4, 1e-6);
    CHECK(mtad::viterbi(obs, model).states == labels);
}

TEST_CASE("an impossible sequence is undecodable") {
    HmmModel model;
    model.m_symbols = 2;
    model.pi = {1.0, 0.0};
    model.trans = {{{1.0, 0.0}, {1.0, 0.0}}};
    model.emit[0] = {1.0, 0.0};  // state 1 can never emit symbol 2
    model.emit[1] = {1.0, 0.0};
    CHECK_THROWS_AS(mtad::viterbi({1, 2}, model), mtad::numeric_error);
}

TEST_CASE("JSON round trip is exact") {
    mtad::Rng rng(604);
    const auto model = random_model(rng, 5);
    const auto j = mtad::hmm_to_json(model);
    const auto back = mtad::hmm_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == model);
}

}  // TEST_SUITE
