#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fastlex/selection.hpp"

namespace fastlex {

// One row of generations.csv.
struct GenerationStats {
    std::uint64_t run_id = 0;
    std::uint64_t generation = 0;
    std::uint64_t selection_events = 0;
    std::uint64_t evaluations_total = 0;
    double evaluations_mean = 0.0;
    std::uint64_t executions_total = 0;
    bool success = false;

    friend bool operator==(const GenerationStats&, const GenerationStats&) = default;
};

// Sums the evaluation counts of one generation's selection events.
// `executions` is the evaluator's cache-miss count over the same generation.
GenerationStats generation_rollup(std::span<const SelectionOutcome> events, std::uint64_t executions = 0);

inline constexpr const char* kGenerationsHeader
    = "run_id,generation,selection_events,evaluations_total,evaluations_mean,executions_total,success";

void write_generations_csv(std::ostream& out, std::span<const GenerationStats> rows);
std::string format_generation_row(const GenerationStats& row);

} // namespace fastlex
