#include "fastlex/selection.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/core.h>

namespace fastlex {

namespace {

// Shared filtering loop. `on_case(case_id, errors)` sees the errors of the
// surviving pool on each visited case before filtering.
template <typename OnCase>
SelectionOutcome filter_pool(std::span<const CandidateId> pool, std::span<const CaseId> case_order,
    Evaluator& evaluator, RandomSource& rng, SelectionOptions options, OnCase&& on_case)
{
    if (pool.empty()) {
        throw SelectionError("selection event on an empty pool");
    }

    SelectionOutcome outcome;
    if (pool.size() == 1) {
        outcome.selected = pool.front();
        outcome.terminated_by = Termination::SingletonPool;
        outcome.final_pool_size = 1;
        return outcome;
    }

    std::vector<CandidateId> survivors(pool.begin(), pool.end());
    std::vector<ErrorValue> errors;
    for (auto case_id : case_order) {
        evaluator.evaluate_pool(survivors, case_id, errors);
        outcome.cases_visited.push_back(case_id);
        outcome.evaluations += survivors.size();
        on_case(case_id, std::span<const ErrorValue>(errors));

        auto best = *std::min_element(errors.begin(), errors.end());
        std::size_t kept = 0;
        for (std::size_t k = 0; k < survivors.size(); ++k) {
            if (errors[k] <= best + options.tolerance) {
                survivors[kept++] = survivors[k];
            }
        }
        survivors.resize(kept);

        if (survivors.size() == 1) {
            outcome.selected = survivors.front();
            outcome.terminated_by = Termination::SingleSurvivor;
            outcome.final_pool_size = 1;
            return outcome;
        }
    }

    outcome.selected = survivors[rng.uniform_index(survivors.size())];
    outcome.terminated_by = Termination::CasesExhausted;
    outcome.final_pool_size = survivors.size();
    return outcome;
}

} // namespace

std::string_view to_string(Termination termination)
{
    switch (termination) {
    case Termination::SingleSurvivor:
        return "single-survivor";
    case Termination::CasesExhausted:
        return "cases-exhausted";
    case Termination::SingletonPool:
        return "singleton-pool";
    }
    return "?";
}

std::vector<CandidateId> full_pool(std::size_t n)
{
    std::vector<CandidateId> pool(n);
    std::iota(pool.begin(), pool.end(), CandidateId { 0 });
    return pool;
}

SelectionOutcome lexicase_select(std::span<const CandidateId> pool, std::span<const CaseId> case_order,
    Evaluator& evaluator, RandomSource& rng, SelectionOptions options)
{
    return filter_pool(pool, case_order, evaluator, rng, options, [](CaseId, std::span<const ErrorValue>) {});
}

SelectionOutcome fast_lexicase_select(std::span<const CandidateId> pool, const WeightVector& weights,
    const ShufflePolicy& shuffle, Evaluator& evaluator, RandomSource& rng, SelectionOptions options)
{
    if (shuffle.is_uniform()) {
        throw ConfigError("fast lexicase selection needs a weighted or ranked shuffle");
    }
    if (weights.size() != evaluator.num_cases()) {
        throw ConfigError(fmt::format("weight vector has {} entries for {} cases", weights.size(), evaluator.num_cases()));
    }
    if (pool.empty()) {
        throw SelectionError("selection event on an empty pool");
    }

    auto bias = *shuffle.bias();
    WeightVector updated = weights;
    SelectionOutcome outcome;
    if (pool.size() == 1) {
        outcome = filter_pool(pool, {}, evaluator, rng, options, [](CaseId, std::span<const ErrorValue>) {});
    } else {
        auto order = shuffle_cases(shuffle, weights, rng);
        outcome = filter_pool(pool, order, evaluator, rng, options,
            [&](CaseId case_id, std::span<const ErrorValue> errors) { updated.set(case_id, bias_value(errors, bias)); });
    }
    outcome.updated_weights = std::move(updated);
    return outcome;
}

} // namespace fastlex
