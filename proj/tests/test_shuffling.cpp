#include <algorithm>

#include <gtest/gtest.h>

#include "fastlex/shuffling.hpp"
#include "oracles.hpp"

using namespace fastlex;

namespace {

bool is_permutation_of_n(std::vector<CaseId> order, std::size_t n)
{
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] != i) {
            return false;
        }
    }
    return order.size() == n;
}

template <typename Shuffle>
std::vector<double> permutation_counts(std::size_t n, int draws, Shuffle&& shuffle)
{
    std::size_t factorial = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        factorial *= k;
    }
    std::vector<double> counts(factorial, 0.0);
    for (int d = 0; d < draws; ++d) {
        counts[oracle::permutation_index(shuffle())] += 1.0;
    }
    return counts;
}

template <typename Shuffle>
std::vector<double> first_position_frequencies(std::size_t n, int draws, Shuffle&& shuffle)
{
    std::vector<double> freq(n, 0.0);
    for (int d = 0; d < draws; ++d) {
        freq[shuffle().front()] += 1.0 / draws;
    }
    return freq;
}

} // namespace

TEST(UniformShuffle, EdgeSizes)
{
    RandomSource rng(1);
    EXPECT_TRUE(uniform_shuffle(0, rng).empty());
    EXPECT_EQ(uniform_shuffle(1, rng), std::vector<CaseId> { 0 });
}

TEST(UniformShuffle, AllSixOrdersEquallyLikely)
{
    RandomSource rng(11);
    const int draws = 60000;
    auto counts = permutation_counts(3, draws, [&] { return uniform_shuffle(3, rng); });
    std::vector<double> expected(6, 1.0 / 6.0);
    EXPECT_LT(oracle::chi_square(counts, expected, draws), oracle::kChiSquare999Df5);
}

TEST(WeightedShuffle, ThreeToOneFirstPosition)
{
    RandomSource rng(2);
    std::vector<double> w { 3, 1 };
    auto freq = first_position_frequencies(2, 100000, [&] { return weighted_shuffle(w, rng); });
    EXPECT_NEAR(freq[0], 0.75, 0.01);
}

TEST(WeightedShuffle, SequentialDrawProbabilities)
{
    RandomSource rng(3);
    std::vector<double> w { 1, 1, 2 };
    const int draws = 100000;
    auto counts = permutation_counts(3, draws, [&] { return weighted_shuffle(w, rng); });
    auto first_two = 0.0;
    for (auto& c : counts) {
        c /= draws;
    }
    // Orders starting with case 2 are (2,0,1) and (2,1,0).
    first_two = counts[oracle::permutation_index({ 2, 0, 1 })] + counts[oracle::permutation_index({ 2, 1, 0 })];
    EXPECT_NEAR(first_two, 0.5, 0.01);
    EXPECT_NEAR(counts[oracle::permutation_index({ 2, 0, 1 })], oracle::weighted_order_probability(w, { 2, 0, 1 }), 0.01);
    EXPECT_DOUBLE_EQ(oracle::weighted_order_probability(w, { 2, 0, 1 }), 0.25);
}

TEST(WeightedShuffle, MatchesAnalyticOrderDistribution)
{
    RandomSource rng(4);
    std::vector<double> w { 5, 1, 2, 3 };
    const int draws = 100000;
    auto counts = permutation_counts(4, draws, [&] { return weighted_shuffle(w, rng); });
    std::vector<double> expected(24);
    std::vector<std::size_t> perm { 0, 1, 2, 3 };
    do {
        expected[oracle::permutation_index(perm)] = oracle::weighted_order_probability(w, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_LT(oracle::chi_square(counts, expected, draws), oracle::kChiSquare999Df23);
}

TEST(WeightedShuffle, EqualWeightsLookUniform)
{
    RandomSource rng(5);
    std::vector<double> w(3, 4.0);
    const int draws = 60000;
    auto counts = permutation_counts(3, draws, [&] { return weighted_shuffle(w, rng); });
    EXPECT_LT(oracle::chi_square(counts, std::vector<double>(6, 1.0 / 6.0), draws), oracle::kChiSquare999Df5);
}

TEST(WeightedShuffle, RejectsNonPositiveWeights)
{
    RandomSource rng(6);
    EXPECT_THROW(weighted_shuffle(std::vector<double> { 1, 0 }, rng), ConfigError);
    EXPECT_THROW(weighted_shuffle(std::vector<double> { 1, -2 }, rng), ConfigError);
    EXPECT_THROW(ranked_shuffle(std::vector<double> { 0, 1 }, rng), ConfigError);
}

TEST(RankedShuffle, FirstPositionFollowsRankFormula)
{
    RandomSource rng(7);
    for (std::size_t m : { 2u, 3u, 5u }) {
        std::vector<double> w;
        for (std::size_t i = 0; i < m; ++i) {
            w.push_back(static_cast<double>(m - i)); // case i has rank i + 1
        }
        auto freq = first_position_frequencies(m, 100000, [&] { return ranked_shuffle(w, rng); });
        for (std::size_t i = 0; i < m; ++i) {
            EXPECT_NEAR(freq[i], oracle::ranked_first_probability(i + 1, m), 0.01) << "m=" << m << " rank=" << i + 1;
        }
    }
    EXPECT_NEAR(oracle::ranked_first_probability(1, 2), 0.75, 1e-12);
    EXPECT_NEAR(oracle::ranked_first_probability(1, 3), 11.0 / 18.0, 1e-12);
}

TEST(RankedShuffle, EqualWeightsAreMarginallyUniform)
{
    RandomSource rng(8);
    std::vector<double> w(3, 2.0);
    const int draws = 60000;
    auto freq = first_position_frequencies(3, draws, [&] { return ranked_shuffle(w, rng); });
    std::vector<double> counts;
    for (auto f : freq) {
        counts.push_back(f * draws);
    }
    EXPECT_LT(oracle::chi_square(counts, std::vector<double>(3, 1.0 / 3.0), draws), oracle::kChiSquare999Df2);
}

TEST(RankedShuffle, IgnoresWeightMagnitudes)
{
    // Same descending order of cases, very different magnitudes: same stream, same output.
    std::vector<double> a { 2, 9, 1, 5 };
    std::vector<double> b { 3, 1000, 1, 4 };
    RandomSource ra(99);
    RandomSource rb(99);
    for (int i = 0; i < 200; ++i) {
        ASSERT_EQ(ranked_shuffle(a, ra), ranked_shuffle(b, rb));
    }
}

TEST(Shuffles, AlwaysPermutationsAndDeterministic)
{
    RandomSource gen(10);
    for (int trial = 0; trial < 300; ++trial) {
        auto n = 1 + gen.uniform_index(40);
        std::vector<double> w(n);
        for (auto& x : w) {
            x = static_cast<double>(gen.uniform_int(1, 6));
        }
        auto seed = gen();
        for (auto kind : { ShuffleKind::Uniform, ShuffleKind::Weighted, ShuffleKind::Ranked }) {
            auto run = [&] {
                RandomSource rng(seed);
                switch (kind) {
                case ShuffleKind::Uniform:
                    return uniform_shuffle(n, rng);
                case ShuffleKind::Weighted:
                    return weighted_shuffle(w, rng);
                default:
                    return ranked_shuffle(w, rng);
                }
            };
            auto order = run();
            ASSERT_TRUE(is_permutation_of_n(order, n));
            ASSERT_EQ(order, run());
        }
    }
}

TEST(ShufflePolicy, BiasPresenceMatchesKind)
{
    EXPECT_THROW(ShufflePolicy::make(ShuffleKind::Uniform, BiasMetric::NumZeros), ConfigError);
    EXPECT_THROW(ShufflePolicy::make(ShuffleKind::Ranked, std::nullopt), ConfigError);
    EXPECT_EQ(ShufflePolicy::make(ShuffleKind::Weighted, BiasMetric::NumNonzeros),
        ShufflePolicy::weighted(BiasMetric::NumNonzeros));
    EXPECT_FALSE(ShufflePolicy::uniform().bias());
}

TEST(ShufflePolicy, DispatchUsesWeights)
{
    auto w = WeightVector({ 1, 1, 1, 6 }, 1, 6);
    RandomSource a(12);
    RandomSource b(12);
    EXPECT_EQ(shuffle_cases(ShufflePolicy::weighted(BiasMetric::NumZeros), w, a), weighted_shuffle(w, b));
    EXPECT_EQ(shuffle_cases(ShufflePolicy::ranked(BiasMetric::NumZeros), w, a), ranked_shuffle(w, b));
    EXPECT_EQ(shuffle_cases(ShufflePolicy::uniform(), w, a), uniform_shuffle(4, b));
}
