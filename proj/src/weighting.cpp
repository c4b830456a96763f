#include "fastlex/weighting.hpp"

#include <algorithm>

#include <fmt/core.h>

namespace fastlex {

std::string_view to_string(BiasMetric bias)
{
    return bias == BiasMetric::NumZeros ? "zeros" : "nonzeros";
}

std::string_view to_string(InitPolicy init)
{
    return init == InitPolicy::DefaultMin ? "min" : "max";
}

std::optional<BiasMetric> parse_bias(std::string_view text)
{
    if (text == "zeros") {
        return BiasMetric::NumZeros;
    }
    if (text == "nonzeros") {
        return BiasMetric::NumNonzeros;
    }
    return std::nullopt;
}

std::optional<InitPolicy> parse_init(std::string_view text)
{
    if (text == "min") {
        return InitPolicy::DefaultMin;
    }
    if (text == "max") {
        return InitPolicy::DefaultMax;
    }
    return std::nullopt;
}

WeightVector::WeightVector(std::vector<double> values, double lower, double upper)
    : values_(std::move(values))
    , lower_(lower)
    , upper_(upper)
{
    if (!(lower_ >= 1.0) || !(upper_ >= lower_)) {
        throw ConfigError(fmt::format("invalid weight bounds [{}, {}]", lower_, upper_));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] >= lower_ && values_[i] <= upper_)) {
            throw ConfigError(fmt::format("weight {} = {} outside [{}, {}]", i, values_[i], lower_, upper_));
        }
    }
}

void WeightVector::set(CaseId i, double value)
{
    if (i >= values_.size()) {
        throw LookupError(fmt::format("case {} outside weight vector of size {}", i, values_.size()));
    }
    if (!(value >= lower_ && value <= upper_)) {
        throw ConfigError(fmt::format("weight {} outside [{}, {}]", value, lower_, upper_));
    }
    values_[i] = value;
}

bool WeightVector::all_equal() const
{
    return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) == values_.end();
}

WeightVector init_weights(std::size_t n_cases, InitPolicy policy, std::size_t population_size)
{
    if (n_cases == 0) {
        throw ConfigError("weight vector needs at least one case");
    }
    if (population_size == 0) {
        throw ConfigError("population size must be at least 1");
    }
    double lower = 1.0;
    double upper = static_cast<double>(population_size) + 1.0;
    double fill = policy == InitPolicy::DefaultMin ? lower : upper;
    return WeightVector(std::vector<double>(n_cases, fill), lower, upper);
}

double bias_value(std::span<const ErrorValue> errors_on_case, BiasMetric bias)
{
    if (errors_on_case.empty()) {
        throw SelectionError("bias metric needs at least one evaluated candidate");
    }
    auto zeros = std::count(errors_on_case.begin(), errors_on_case.end(), 0.0);
    auto counted = bias == BiasMetric::NumZeros ? zeros : static_cast<std::ptrdiff_t>(errors_on_case.size()) - zeros;
    return static_cast<double>(counted) + 1.0;
}

} // namespace fastlex
