#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fastlex {

using CandidateId = std::size_t;
using CaseId = std::size_t;

// Per-case error. Zero means the candidate is perfect on that case.
using ErrorValue = double;

// Invalid parameters or inconsistent configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A selection event that cannot be performed (e.g. empty pool).
class SelectionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Candidate or case id outside the evaluator's domain.
class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Training produced a learner that can no longer be used (non-finite parameters).
class TrainingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fastlex
