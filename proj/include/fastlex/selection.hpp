#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fastlex/evaluator.hpp"
#include "fastlex/random.hpp"
#include "fastlex/shuffling.hpp"
#include "fastlex/types.hpp"
#include "fastlex/weighting.hpp"

namespace fastlex {

enum class Termination {
    SingleSurvivor,
    CasesExhausted,
    SingletonPool,
};

std::string_view to_string(Termination termination);

struct SelectionOutcome {
    CandidateId selected = 0;
    std::vector<CaseId> cases_visited;
    // Sum over visited cases of the pool size just before filtering on that case.
    std::uint64_t evaluations = 0;
    // Only filled by fast_lexicase_select; unvisited entries keep their input value.
    WeightVector updated_weights;
    Termination terminated_by = Termination::SingletonPool;
    std::size_t final_pool_size = 0;
};

struct SelectionOptions {
    // Survivors are candidates within `tolerance` of the case minimum.
    // Zero keeps exact-equality elite membership.
    double tolerance = 0.0;
};

// Candidate ids 0..n-1 in order.
std::vector<CandidateId> full_pool(std::size_t n);

// Standard lexicase selection over a fixed case order.
//
// The pool is filtered case by case down to the candidates with the minimum
// error on each case, preserving their relative order. A pool of one is
// returned without evaluating anything; if cases run out with several
// survivors, one is drawn uniformly from `rng`.
//
// Throws SelectionError on an empty pool.
SelectionOutcome lexicase_select(std::span<const CandidateId> pool, std::span<const CaseId> case_order,
    Evaluator& evaluator, RandomSource& rng, SelectionOptions options = {});

// Fast lexicase selection: weighted or ranked shuffle from `weights`, then
// lexicase filtering where every visited case's weight is reset to the
// policy's bias metric over the pool evaluated on it. The case order is
// fixed when the event starts; updates only affect later events.
//
// Throws ConfigError for a uniform policy or a weight vector whose size
// differs from the evaluator's case count.
SelectionOutcome fast_lexicase_select(std::span<const CandidateId> pool, const WeightVector& weights,
    const ShufflePolicy& shuffle, Evaluator& evaluator, RandomSource& rng, SelectionOptions options = {});

} // namespace fastlex
