#include "mtad/baseline.hpp"

#include <cmath>
#include <stdexcept>

#include "mtad/errors.hpp"
#include "mtad/rng.hpp"

namespace mtad {

namespace {

std::vector<double> mat_vec(const std::vector<std::vector<double>>& m,
                            const std::vector<double>& v) {
    std::vector<double> out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

PcaModel pca_fit(const MultivariateSeries& train) {
    const std::size_t T = train.length();
    const std::size_t n = train.arity();
    if (T < 2) throw std::invalid_argument("pca_fit needs at least two time points");

    PcaModel model;
    model.column_means.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t t = 0; t < T; ++t) sum += train(t, i);
        model.column_means[i] = sum / static_cast<double>(T);
    }

    std::vector<std::vector<double>> cov(n, std::vector<double>(n, 0.0));
    for (std::size_t t = 0; t < T; ++t)
        for (std::size_t i = 0; i < n; ++i) {
            const double di = train(t, i) - model.column_means[i];
            for (std::size_t j = i; j < n; ++j)
                cov[i][j] += di * (train(t, j) - model.column_means[j]);
        }
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            cov[i][j] /= static_cast<double>(T);
            cov[j][i] = cov[i][j];
            scale = std::max(scale, std::abs(cov[i][j]));
        }
    if (scale == 0.0) throw numeric_error("degenerate input: all points identical");

    // Power iteration; a start vector orthogonal to the dominant eigenspace
    // shows up as a stalled direction, in which case we restart from a fresh
    // random draw.
    Rng rng(0x5ca1ab1eu);
    std::vector<double> v(n);
    double eigenvalue = 0.0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        for (double& x : v) x = rng.uniform(-1.0, 1.0);
        const double vn = norm2(v);
        if (vn == 0.0) continue;
        for (double& x : v) x /= vn;

        bool converged = false;
        for (int iter = 0; iter < 1000; ++iter) {
            std::vector<double> w = mat_vec(cov, v);
            const double wn = norm2(w);
            if (wn == 0.0) break;  // v fell in the null space; try a new start
            for (double& x : w) x /= wn;
            double delta = 0.0;
            for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, std::abs(w[i] - v[i]));
            v = std::move(w);
            if (delta < 1e-9) {
                converged = true;
                break;
            }
        }
        if (converged) break;
    }

    const std::vector<double> cv = mat_vec(cov, v);
    eigenvalue = 0.0;
    for (std::size_t i = 0; i < n; ++i) eigenvalue += v[i] * cv[i];

    std::size_t largest = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[largest])) largest = i;
    if (v[largest] < 0.0)
        for (double& x : v) x = -x;

    model.direction = std::move(v);
    model.eigenvalue = eigenvalue;
    return model;
}

std::vector<double> pca_project(const MultivariateSeries& series, const PcaModel& model) {
    const std::size_t n = series.arity();
    if (model.direction.size() != n)
        throw std::invalid_argument("PCA model arity does not match series");

    std::vector<double> out(series.length(), 0.0);
    for (std::size_t t = 0; t < series.length(); ++t) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            dot += model.direction[i] * (series(t, i) - model.column_means[i]);
        out[t] = dot;
    }
    return out;
}

std::vector<double> mean_fusion(const MultivariateSeries& series) {
    std::vector<double> out(series.length(), 0.0);
    for (std::size_t t = 0; t < series.length(); ++t) {
        double sum = 0.0;
        for (std::size_t i = 0; i < series.arity(); ++i) sum += series(t, i);
        out[t] = sum / static_cast<double>(series.arity());
    }
    return out;
}

}  // namespace mtad
