#include "fastlex/evaluator.hpp"

#include <algorithm>
#include <thread>

#include <fmt/core.h>

namespace fastlex {

Evaluator::Evaluator(std::size_t n_candidates, std::size_t n_cases, ErrorFunction error_fn, EvaluatorOptions options)
    : n_candidates_(n_candidates)
    , n_cases_(n_cases)
    , error_fn_(std::move(error_fn))
    , options_(options)
{
    if (!error_fn_) {
        throw ConfigError("evaluator needs an error function");
    }
    options_.threads = std::max<std::size_t>(1, options_.threads);
    if (options_.cache) {
        values_.assign(n_candidates_ * n_cases_, 0.0);
        known_.assign(n_candidates_ * n_cases_, 0);
    }
}

std::size_t Evaluator::slot(CandidateId candidate, CaseId case_id) const
{
    if (candidate >= n_candidates_) {
        throw LookupError(fmt::format("unknown candidate {} (population of {})", candidate, n_candidates_));
    }
    if (case_id >= n_cases_) {
        throw LookupError(fmt::format("unknown case {} ({} cases)", case_id, n_cases_));
    }
    return candidate * n_cases_ + case_id;
}

ErrorValue Evaluator::evaluate(CandidateId candidate, CaseId case_id)
{
    auto index = slot(candidate, case_id);
    ++raw_evaluations_;
    if (options_.cache && known_[index]) {
        return values_[index];
    }
    auto value = error_fn_(candidate, case_id);
    ++executions_;
    if (options_.cache) {
        values_[index] = value;
        known_[index] = 1;
    }
    return value;
}

void Evaluator::evaluate_pool(std::span<const CandidateId> candidates, CaseId case_id, std::vector<ErrorValue>& out)
{
    out.resize(candidates.size());
    if (options_.threads == 1) {
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            out[k] = evaluate(candidates[k], case_id);
        }
        return;
    }

    // Parallel path: compute misses concurrently, then merge in candidate order
    // from this thread so the cache and counters have a single writer.
    misses_.clear();
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        auto index = slot(candidates[k], case_id);
        if (options_.cache && known_[index]) {
            out[k] = values_[index];
        } else {
            misses_.push_back(k);
        }
    }
    miss_values_.assign(misses_.size(), 0.0);
    auto workers = std::min(options_.threads, misses_.size());
    if (workers <= 1) {
        for (std::size_t m = 0; m < misses_.size(); ++m) {
            miss_values_[m] = error_fn_(candidates[misses_[m]], case_id);
        }
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (auto m = w; m < misses_.size(); m += workers) {
                    miss_values_[m] = error_fn_(candidates[misses_[m]], case_id);
                }
            });
        }
    }
    for (std::size_t m = 0; m < misses_.size(); ++m) {
        auto k = misses_[m];
        out[k] = miss_values_[m];
        if (options_.cache) {
            auto index = slot(candidates[k], case_id);
            values_[index] = out[k];
            known_[index] = 1;
        }
    }
    raw_evaluations_ += candidates.size();
    executions_ += misses_.size();
}

void Evaluator::new_generation()
{
    std::fill(known_.begin(), known_.end(), std::uint8_t { 0 });
}

} // namespace fastlex
