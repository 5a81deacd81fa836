#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mtad {

inline constexpr int kNormalLabel = 1;
inline constexpr int kAbnormalLabel = 2;

// Per-time-point hidden-state labels: 1 = normal, 2 = abnormal.
using LabelSequence = std::vector<int>;

// Discrete observation symbols in 1..M.
using ObservedSequence = std::vector<int>;

// T x n matrix of readings: one row per time point, one column per variable.
// Row-major storage; immutable in practice once filled.
class MultivariateSeries {
public:
    MultivariateSeries() = default;
    MultivariateSeries(std::size_t length, std::size_t arity);

    // Throws std::invalid_argument on ragged rows or zero arity.
    static MultivariateSeries from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t length() const { return rows_; }  // T
    std::size_t arity() const { return cols_; }   // n

    double operator()(std::size_t t, std::size_t var) const { return values_[t * cols_ + var]; }
    double& operator()(std::size_t t, std::size_t var) { return values_[t * cols_ + var]; }

    std::span<const double> row(std::size_t t) const {
        return {values_.data() + t * cols_, cols_};
    }

    std::vector<double> column(std::size_t var) const;

    // First `count` rows.
    MultivariateSeries head(std::size_t count) const;

    bool all_finite() const;

    bool operator==(const MultivariateSeries&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

}  // namespace mtad
