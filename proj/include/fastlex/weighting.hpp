#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fastlex/types.hpp"

namespace fastlex {

enum class BiasMetric {
    NumZeros,    // easy cases first
    NumNonzeros, // hard cases first
};

enum class InitPolicy {
    DefaultMin,
    DefaultMax,
};

std::string_view to_string(BiasMetric bias);
std::string_view to_string(InitPolicy init);
std::optional<BiasMetric> parse_bias(std::string_view text);
std::optional<InitPolicy> parse_init(std::string_view text);

// Per-case shuffle weights, each kept inside [lower, upper] with lower >= 1.
class WeightVector {
public:
    WeightVector() = default;
    WeightVector(std::vector<double> values, double lower, double upper);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }

    double lower() const { return lower_; }
    double upper() const { return upper_; }

    // Throws ConfigError if `value` falls outside the bounds.
    void set(CaseId i, double value);

    bool all_equal() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<double> values_;
    double lower_ = 1.0;
    double upper_ = 1.0;
};

// Bounds are [1, population_size + 1]; every entry starts at one of the bounds.
WeightVector init_weights(std::size_t n_cases, InitPolicy policy, std::size_t population_size);

// Weight assigned to a case from the errors of the pool evaluated on it:
// count of zero (or nonzero) errors, plus one.
double bias_value(std::span<const ErrorValue> errors_on_case, BiasMetric bias);

} // namespace fastlex
