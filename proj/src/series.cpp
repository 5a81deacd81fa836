#include "mtad/series.hpp"

#include <cmath>
#include <stdexcept>

namespace mtad {

MultivariateSeries::MultivariateSeries(std::size_t length, std::size_t arity)
    : rows_(length), cols_(arity), values_(length * arity, 0.0) {
    if (arity == 0) throw std::invalid_argument("series arity must be >= 1");
}

MultivariateSeries MultivariateSeries::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("series needs at least one row");
    const std::size_t arity = rows.front().size();
    if (arity == 0) throw std::invalid_argument("series arity must be >= 1");
    MultivariateSeries out(rows.size(), arity);
    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (rows[t].size() != arity) throw std::invalid_argument("ragged rows in series");
        for (std::size_t i = 0; i < arity; ++i) out(t, i) = rows[t][i];
    }
    return out;
}

std::vector<double> MultivariateSeries::column(std::size_t var) const {
    std::vector<double> out(rows_);
    for (std::size_t t = 0; t < rows_; ++t) out[t] = (*this)(t, var);
    return out;
}

MultivariateSeries MultivariateSeries::head(std::size_t count) const {
    if (count > rows_) throw std::invalid_argument("head count exceeds series length");
    MultivariateSeries out(count, cols_);
    for (std::size_t t = 0; t < count; ++t)
        for (std::size_t i = 0; i < cols_; ++i) out(t, i) = (*this)(t, i);
    return out;
}

bool MultivariateSeries::all_finite() const {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace mtad
