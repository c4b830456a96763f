#pragma once

#include <cstdint>
#include <random>

namespace fastlex {

// Seeded random stream shared by every stochastic operation of one run.
//
// Wraps std::mt19937_64 but implements the distributions itself, so that a
// given seed yields the same sequence on every standard library.
class RandomSource {
public:
    using result_type = std::uint64_t;

    explicit RandomSource(std::uint64_t seed = 0) : engine_(seed) {}

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    // Uniform integer in [0, bound). bound must be positive.
    std::uint64_t uniform_index(std::uint64_t bound);

    // Uniform integer in [lo, hi], inclusive.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) { return lo + uniform_index(hi - lo + 1); }

    // Uniform real in [0, 1) with 53 bits of resolution.
    double uniform_real();

    bool bernoulli(double p) { return uniform_real() < p; }

    // Standard normal deviate (Box-Muller).
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

// Independent stream seed for `stream` derived from a master seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

} // namespace fastlex
