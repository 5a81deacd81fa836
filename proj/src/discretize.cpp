#include "mtad/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mtad {

Discretizer fit_bins(const std::vector<double>& train_values, int m_symbols) {
    if (train_values.size() < 2) throw std::invalid_argument("fit_bins needs at least two values");
    if (m_symbols < 2) throw std::invalid_argument("fit_bins needs at least two symbols");

    const auto [lo_it, hi_it] = std::minmax_element(train_values.begin(), train_values.end());
    Discretizer disc;
    disc.m_symbols = m_symbols;
    disc.lo = *lo_it;
    disc.hi = *hi_it;
    if (disc.hi - disc.lo < 1e-12) {
        disc.lo -= 0.5;
        disc.hi += 0.5;
    }
    return disc;
}

int to_symbol(double value, const Discretizer& disc) {
    if (value < disc.lo) return 1;
    if (value >= disc.hi) return disc.m_symbols;
    const double fraction = (value - disc.lo) / (disc.hi - disc.lo);
    const int bin = 1 + static_cast<int>(std::floor(fraction * disc.m_symbols));
    return std::clamp(bin, 1, disc.m_symbols);
}

ObservedSequence to_symbols(const std::vector<double>& values, const Discretizer& disc) {
    ObservedSequence out;
    out.reserve(values.size());
    for (double v : values) out.push_back(to_symbol(v, disc));
    return out;
}

}  // namespace mtad
