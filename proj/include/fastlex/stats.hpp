#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fastlex/telemetry.hpp"

namespace fastlex::stats {

// Standard normal CDF.
double normal_cdf(double z);

struct ZTestResult {
    double z_statistic = 0.0;
    double p_value = 0.0;
    std::uint64_t n = 0;
    double p_hat = 0.0;
    double p0 = 0.0;
};

// One-proportion z-test of H0: p = p0 against H1: p < p0.
// Throws ConfigError unless 0 < p0 < 1 and n >= 1.
ZTestResult one_proportion_ztest_left(double p_hat, double p0, std::uint64_t n);

// Trailing mean over the last min(window, i + 1) points. Throws ConfigError on window 0.
std::vector<double> moving_average(std::span<const double> series, std::size_t window);

struct RunPoint {
    std::uint64_t run_id = 0;
    std::uint64_t step = 0;
    double value = 0.0;
};

struct MeanPoint {
    std::uint64_t step = 0;
    double mean = 0.0;
    std::size_t active_runs = 0;
};

// Per-step mean over the runs that have a row at that step. A run stops
// contributing once it has finished; steps with no active run are omitted.
std::vector<MeanPoint> aggregate_active_runs(std::span<const RunPoint> points);
// Same, over evaluations_total of generations.csv rows.
std::vector<MeanPoint> aggregate_active_runs(std::span<const GenerationStats> rows);

struct AlignedSeries {
    // Position of values.front() on the shared axis; every series ends at k - 1.
    std::size_t offset = 0;
    std::vector<double> values;
};

std::vector<AlignedSeries> align_last_k(std::span<const std::vector<double>> series, std::size_t k);

// Wilcoxon signed-rank test, normal approximation with tie correction.
// One-sided p-value for H1: x tends to be smaller than y (paired samples).
// Zero differences are dropped; returns 1 when nothing is left.
double wilcoxon_signed_rank_less(std::span<const double> x, std::span<const double> y);

// Exact sign test, one-sided p-value for H1: x < y more often than not.
double sign_test_less(std::span<const double> x, std::span<const double> y);

// One-sided Fisher exact test of H1: rate of group a < rate of group b.
double fisher_exact_less(std::uint64_t successes_a, std::uint64_t n_a, std::uint64_t successes_b, std::uint64_t n_b);

} // namespace fastlex::stats
