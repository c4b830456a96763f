#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fastlex/types.hpp"

namespace fastlex {

struct EvaluatorOptions {
    bool cache = true;
    // Worker threads used to fill cache misses of one pool on one case.
    // The error function must be safe to call concurrently when > 1.
    std::size_t threads = 1;
};

// Evaluate-or-look-up front end for a per-(candidate, case) error function.
//
// Every request counts as one raw evaluation, the hardware-agnostic
// efficiency metric. Calls that actually reach the error function count as
// executions. The memo cache lives for one generation; call new_generation()
// whenever the candidates behind the ids change.
class Evaluator {
public:
    using ErrorFunction = std::function<ErrorValue(CandidateId, CaseId)>;

    Evaluator(std::size_t n_candidates, std::size_t n_cases, ErrorFunction error_fn, EvaluatorOptions options = {});

    std::size_t num_candidates() const { return n_candidates_; }
    std::size_t num_cases() const { return n_cases_; }

    ErrorValue evaluate(CandidateId candidate, CaseId case_id);

    // Errors of `candidates` on one case, in the order given. Results and
    // counters are identical whatever the thread count.
    void evaluate_pool(std::span<const CandidateId> candidates, CaseId case_id, std::vector<ErrorValue>& out);

    void new_generation();

    std::uint64_t raw_evaluations() const { return raw_evaluations_; }
    std::uint64_t executions() const { return executions_; }

private:
    std::size_t slot(CandidateId candidate, CaseId case_id) const;

    std::size_t n_candidates_;
    std::size_t n_cases_;
    ErrorFunction error_fn_;
    EvaluatorOptions options_;

    std::vector<ErrorValue> values_;
    std::vector<std::uint8_t> known_;
    std::vector<std::size_t> misses_;
    std::vector<ErrorValue> miss_values_;

    std::uint64_t raw_evaluations_ = 0;
    std::uint64_t executions_ = 0;
};

} // namespace fastlex
