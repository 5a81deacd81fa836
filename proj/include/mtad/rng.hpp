#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mtad {

// Deterministic random source built on std::mt19937_64, whose output stream
// is pinned by the C++ standard. All derived draws (uniform, normal, bounded
// index) use explicit arithmetic instead of std::*_distribution, which are
// implementation-defined, so identical seeds give identical values on every
// platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Gaussian via Box-Muller; consumes exactly two engine draws per call.
    double normal(double mean = 0.0, double stddev = 1.0);

    // Uniform integer in [0, n), rejection-sampled so the result is unbiased.
    std::size_t index(std::size_t n);

    // k distinct indices from [0, n), in draw order (partial Fisher-Yates).
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

    // Decorrelated child seed for stream `stream` (splitmix64 mix), used to
    // give sweep grid points and generator stages independent streams.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 engine_;
};

}  // namespace mtad
