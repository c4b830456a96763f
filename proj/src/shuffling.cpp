#include "fastlex/shuffling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <fmt/core.h>

namespace fastlex {

namespace {

// Fenwick tree over non-negative weights supporting removal and prefix-sum inversion.
class SumTree {
public:
    explicit SumTree(std::span<const double> weights)
        : tree_(weights.size() + 1, 0.0)
        , leaf_(weights.begin(), weights.end())
    {
        for (std::size_t i = 0; i < weights.size(); ++i) {
            tree_[i + 1] += weights[i];
            auto parent = i + 1 + ((i + 1) & (~(i + 1) + 1));
            if (parent < tree_.size()) {
                tree_[parent] += tree_[i + 1];
            }
        }
    }

    double total() const
    {
        double sum = 0.0;
        for (auto i = leaf_.size(); i > 0; i &= i - 1) {
            sum += tree_[i];
        }
        return sum;
    }

    void remove(std::size_t index)
    {
        double w = leaf_[index];
        leaf_[index] = 0.0;
        for (auto i = index + 1; i < tree_.size(); i += i & (~i + 1)) {
            tree_[i] -= w;
        }
    }

    // Smallest index whose inclusive prefix sum exceeds `target`.
    std::size_t find(double target) const
    {
        std::size_t pos = 0;
        for (auto step = std::bit_floor(leaf_.size()); step > 0; step >>= 1) {
            auto next = pos + step;
            if (next < tree_.size() && tree_[next] <= target) {
                pos = next;
                target -= tree_[next];
            }
        }
        // Rounding can push the target past the last live entry.
        while (pos < leaf_.size() && leaf_[pos] <= 0.0) {
            ++pos;
        }
        if (pos == leaf_.size()) {
            pos = leaf_.size() - 1;
            while (leaf_[pos] <= 0.0) {
                --pos;
            }
        }
        return pos;
    }

private:
    std::vector<double> tree_;
    std::vector<double> leaf_;
};

void check_weights(std::span<const double> weights)
{
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
            throw ConfigError(fmt::format("shuffle weight {} = {} must be positive and finite", i, weights[i]));
        }
    }
}

} // namespace

std::string_view to_string(ShuffleKind kind)
{
    switch (kind) {
    case ShuffleKind::Uniform:
        return "uniform";
    case ShuffleKind::Weighted:
        return "weighted";
    case ShuffleKind::Ranked:
        return "ranked";
    }
    return "?";
}

std::optional<ShuffleKind> parse_shuffle(std::string_view text)
{
    for (auto kind : { ShuffleKind::Uniform, ShuffleKind::Weighted, ShuffleKind::Ranked }) {
        if (text == to_string(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

ShufflePolicy ShufflePolicy::make(ShuffleKind kind, std::optional<BiasMetric> bias)
{
    if (kind == ShuffleKind::Uniform && bias) {
        throw ConfigError("uniform shuffle takes no bias metric");
    }
    if (kind != ShuffleKind::Uniform && !bias) {
        throw ConfigError(fmt::format("{} shuffle requires a bias metric", to_string(kind)));
    }
    return ShufflePolicy(kind, bias);
}

std::vector<CaseId> uniform_shuffle(std::size_t n, RandomSource& rng)
{
    std::vector<CaseId> order(n);
    std::iota(order.begin(), order.end(), CaseId { 0 });
    for (auto i = n; i > 1; --i) {
        auto j = rng.uniform_index(i);
        std::swap(order[i - 1], order[j]);
    }
    return order;
}

std::vector<CaseId> weighted_shuffle(std::span<const double> weights, RandomSource& rng)
{
    check_weights(weights);
    std::vector<CaseId> order;
    order.reserve(weights.size());
    SumTree tree(weights);
    for (std::size_t placed = 0; placed < weights.size(); ++placed) {
        auto index = tree.find(rng.uniform_real() * tree.total());
        order.push_back(index);
        tree.remove(index);
    }
    return order;
}

std::vector<CaseId> weighted_shuffle(const WeightVector& weights, RandomSource& rng)
{
    return weighted_shuffle(weights.values(), rng);
}

std::vector<CaseId> ranked_shuffle(std::span<const double> weights, RandomSource& rng)
{
    check_weights(weights);
    auto n = weights.size();

    // Random pre-permutation then a stable sort leaves tied weights in random order.
    auto ranking = uniform_shuffle(n, rng);
    std::stable_sort(ranking.begin(), ranking.end(), [&](CaseId a, CaseId b) { return weights[a] > weights[b]; });

    std::vector<double> live(n, 1.0);
    SumTree remaining(live);
    std::vector<CaseId> order;
    order.reserve(n);
    for (auto left = n; left > 0; --left) {
        auto upper = rng.uniform_int(1, left);
        auto rank = rng.uniform_int(1, upper);
        auto slot = remaining.find(static_cast<double>(rank - 1));
        order.push_back(ranking[slot]);
        remaining.remove(slot);
    }
    return order;
}

std::vector<CaseId> ranked_shuffle(const WeightVector& weights, RandomSource& rng)
{
    return ranked_shuffle(weights.values(), rng);
}

std::vector<CaseId> shuffle_cases(const ShufflePolicy& policy, const WeightVector& weights, RandomSource& rng)
{
    switch (policy.kind()) {
    case ShuffleKind::Uniform:
        return uniform_shuffle(weights.size(), rng);
    case ShuffleKind::Weighted:
        return weighted_shuffle(weights, rng);
    case ShuffleKind::Ranked:
        return ranked_shuffle(weights, rng);
    }
    return {};
}

} // namespace fastlex
