#include "fastlex/telemetry.hpp"

#include <fmt/core.h>

namespace fastlex {

GenerationStats generation_rollup(std::span<const SelectionOutcome> events, std::uint64_t executions)
{
    GenerationStats stats;
    stats.selection_events = events.size();
    for (const auto& event : events) {
        stats.evaluations_total += event.evaluations;
    }
    stats.evaluations_mean
        = events.empty() ? 0.0 : static_cast<double>(stats.evaluations_total) / static_cast<double>(events.size());
    stats.executions_total = executions;
    return stats;
}

std::string format_generation_row(const GenerationStats& row)
{
    return fmt::format("{},{},{},{},{},{},{}", row.run_id, row.generation, row.selection_events, row.evaluations_total,
        row.evaluations_mean, row.executions_total, row.success ? 1 : 0);
}

void write_generations_csv(std::ostream& out, std::span<const GenerationStats> rows)
{
    out << kGenerationsHeader << '\n';
    for (const auto& row : rows) {
        out << format_generation_row(row) << '\n';
    }
}

} // namespace fastlex
