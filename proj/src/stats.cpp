#include "fastlex/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <fmt/core.h>

namespace fastlex::stats {

namespace {

double log_choose(std::uint64_t n, std::uint64_t k)
{
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0)
        - std::lgamma(static_cast<double>(n - k) + 1.0);
}

void check_paired(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size()) {
        throw ConfigError(fmt::format("paired samples differ in length ({} vs {})", x.size(), y.size()));
    }
}

} // namespace

double normal_cdf(double z)
{
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

ZTestResult one_proportion_ztest_left(double p_hat, double p0, std::uint64_t n)
{
    if (!(p0 > 0.0 && p0 < 1.0)) {
        throw ConfigError(fmt::format("baseline proportion {} must lie strictly between 0 and 1", p0));
    }
    if (n == 0) {
        throw ConfigError("z-test needs a sample size of at least 1");
    }
    ZTestResult result;
    result.p_hat = p_hat;
    result.p0 = p0;
    result.n = n;
    double standard_error = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(n));
    result.z_statistic = (p_hat - p0) / standard_error;
    result.p_value = normal_cdf(result.z_statistic);
    return result;
}

std::vector<double> moving_average(std::span<const double> series, std::size_t window)
{
    if (window == 0) {
        throw ConfigError("moving average window must be at least 1");
    }
    std::vector<double> smoothed(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        auto count = std::min(window, i + 1);
        double sum = 0.0;
        for (auto j = i + 1 - count; j <= i; ++j) {
            sum += series[j];
        }
        smoothed[i] = sum / static_cast<double>(count);
    }
    return smoothed;
}

std::vector<MeanPoint> aggregate_active_runs(std::span<const RunPoint> points)
{
    std::map<std::uint64_t, std::pair<double, std::size_t>> by_step;
    for (const auto& point : points) {
        auto& [sum, count] = by_step[point.step];
        sum += point.value;
        ++count;
    }
    std::vector<MeanPoint> series;
    series.reserve(by_step.size());
    for (const auto& [step, acc] : by_step) {
        series.push_back({ step, acc.first / static_cast<double>(acc.second), acc.second });
    }
    return series;
}

std::vector<MeanPoint> aggregate_active_runs(std::span<const GenerationStats> rows)
{
    std::vector<RunPoint> points;
    points.reserve(rows.size());
    for (const auto& row : rows) {
        points.push_back({ row.run_id, row.generation, static_cast<double>(row.evaluations_total) });
    }
    return aggregate_active_runs(points);
}

std::vector<AlignedSeries> align_last_k(std::span<const std::vector<double>> series, std::size_t k)
{
    std::vector<AlignedSeries> aligned;
    aligned.reserve(series.size());
    for (const auto& s : series) {
        auto keep = std::min(k, s.size());
        AlignedSeries a;
        a.offset = k - keep;
        a.values.assign(s.end() - static_cast<std::ptrdiff_t>(keep), s.end());
        aligned.push_back(std::move(a));
    }
    return aligned;
}

double wilcoxon_signed_rank_less(std::span<const double> x, std::span<const double> y)
{
    check_paired(x, y);
    std::vector<double> diffs;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) {
            diffs.push_back(x[i] - y[i]);
        }
    }
    auto n = diffs.size();
    if (n == 0) {
        return 1.0;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return std::abs(diffs[a]) < std::abs(diffs[b]); });

    // Average ranks over ties of |d|.
    std::vector<double> rank(n);
    double tie_term = 0.0;
    for (std::size_t i = 0; i < n;) {
        auto j = i;
        while (j + 1 < n && std::abs(diffs[order[j + 1]]) == std::abs(diffs[order[i]])) {
            ++j;
        }
        double average = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (auto k = i; k <= j; ++k) {
            rank[order[k]] = average;
        }
        double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }

    double w_plus = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (diffs[i] > 0) {
            w_plus += rank[i];
        }
    }
    double nn = static_cast<double>(n);
    double mean = nn * (nn + 1.0) / 4.0;
    double variance = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
    if (variance <= 0.0) {
        return w_plus < mean ? 0.0 : 1.0;
    }
    // Small W+ means x tends below y.
    return normal_cdf((w_plus - mean) / std::sqrt(variance));
}

double sign_test_less(std::span<const double> x, std::span<const double> y)
{
    check_paired(x, y);
    std::uint64_t below = 0;
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) {
            ++n;
            below += x[i] < y[i] ? 1 : 0;
        }
    }
    if (n == 0) {
        return 1.0;
    }
    // P(B >= below) for B ~ Binomial(n, 1/2).
    double p = 0.0;
    for (auto k = below; k <= n; ++k) {
        p += std::exp(log_choose(n, k) - static_cast<double>(n) * std::numbers::ln2);
    }
    return std::min(1.0, p);
}

double fisher_exact_less(std::uint64_t successes_a, std::uint64_t n_a, std::uint64_t successes_b, std::uint64_t n_b)
{
    if (successes_a > n_a || successes_b > n_b) {
        throw ConfigError("successes exceed group size");
    }
    auto total = n_a + n_b;
    auto successes = successes_a + successes_b;
    auto lowest = successes > n_b ? successes - n_b : 0;
    double denominator = log_choose(total, n_a);
    double p = 0.0;
    // P(X <= successes_a), X hypergeometric with the margins held fixed.
    for (auto k = lowest; k <= successes_a; ++k) {
        p += std::exp(log_choose(successes, k) + log_choose(total - successes, n_a - k) - denominator);
    }
    return std::min(1.0, p);
}

} // namespace fastlex::stats
