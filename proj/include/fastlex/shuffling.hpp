#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fastlex/random.hpp"
#include "fastlex/types.hpp"
#include "fastlex/weighting.hpp"

namespace fastlex {

enum class ShuffleKind {
    Uniform,
    Weighted,
    Ranked,
};

std::string_view to_string(ShuffleKind kind);
std::optional<ShuffleKind> parse_shuffle(std::string_view text);

// How cases are ordered for each selection event. Weighted and Ranked carry
// the bias metric that drives their weights; Uniform carries none.
class ShufflePolicy {
public:
    static ShufflePolicy uniform() { return ShufflePolicy(ShuffleKind::Uniform, std::nullopt); }
    static ShufflePolicy weighted(BiasMetric bias) { return ShufflePolicy(ShuffleKind::Weighted, bias); }
    static ShufflePolicy ranked(BiasMetric bias) { return ShufflePolicy(ShuffleKind::Ranked, bias); }
    // Throws ConfigError when the bias presence does not match the kind.
    static ShufflePolicy make(ShuffleKind kind, std::optional<BiasMetric> bias);

    ShuffleKind kind() const { return kind_; }
    std::optional<BiasMetric> bias() const { return bias_; }
    bool is_uniform() const { return kind_ == ShuffleKind::Uniform; }

    friend bool operator==(const ShufflePolicy&, const ShufflePolicy&) = default;

private:
    ShufflePolicy(ShuffleKind kind, std::optional<BiasMetric> bias) : kind_(kind), bias_(bias) {}

    ShuffleKind kind_;
    std::optional<BiasMetric> bias_;
};

// Uniformly random permutation of {0, ..., n-1} (Fisher-Yates).
std::vector<CaseId> uniform_shuffle(std::size_t n, RandomSource& rng);

// Sequential sampling without replacement, each draw proportional to the
// weights of the cases not yet placed. Throws ConfigError on a weight <= 0.
std::vector<CaseId> weighted_shuffle(std::span<const double> weights, RandomSource& rng);
std::vector<CaseId> weighted_shuffle(const WeightVector& weights, RandomSource& rng);

// Rank-based ordering. Cases are ranked by descending weight (ties in random
// order); each position then draws an upper bound u in [1, m] over the m
// remaining ranks, an index in [1, u], and takes the case at that rank.
// Only the order of the weights matters, not their magnitudes.
std::vector<CaseId> ranked_shuffle(std::span<const double> weights, RandomSource& rng);
std::vector<CaseId> ranked_shuffle(const WeightVector& weights, RandomSource& rng);

// Dispatch on the policy kind; `weights` is ignored for Uniform.
std::vector<CaseId> shuffle_cases(const ShufflePolicy& policy, const WeightVector& weights, RandomSource& rng);

} // namespace fastlex
