#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fastlex/evaluator.hpp"
#include "fastlex/random.hpp"
#include "fastlex/selection.hpp"
#include "fastlex/shuffling.hpp"
#include "fastlex/telemetry.hpp"
#include "fastlex/weighting.hpp"

namespace fastlex::ga {

using Genome = std::vector<std::uint8_t>;

// Per-case rates: the first `hard_cases` cases get `hard_rate`, the rest `easy_rate`.
// For bitstrings a rate is the chance an initial bit already matches the
// target; for synthetic matrices it is the chance a candidate passes the case.
struct DifficultyProfile {
    std::size_t n_cases = 64;
    std::size_t hard_cases = 16;
    double hard_rate = 0.05;
    double easy_rate = 0.5;

    std::vector<double> rates() const;
};

// Bit-matching problem: case i is passed (error 0) iff genome[i] == target[i].
class BitstringProblem {
public:
    BitstringProblem(Genome target, std::vector<double> initial_match_rates);
    static BitstringProblem random(const DifficultyProfile& profile, RandomSource& rng);

    std::size_t num_cases() const { return target_.size(); }
    const Genome& target() const { return target_; }

    ErrorValue error(const Genome& genome, CaseId case_id) const
    {
        return genome[case_id] == target_[case_id] ? 0.0 : 1.0;
    }
    bool is_solution(const Genome& genome) const { return genome == target_; }
    Genome random_genome(RandomSource& rng) const;

private:
    Genome target_;
    std::vector<double> match_rates_;
};

// Static population x cases error matrix, redrawn every generation from
// per-case pass probabilities. Nothing evolves; it isolates selection behaviour.
class SyntheticErrorMatrix {
public:
    SyntheticErrorMatrix(std::size_t population_size, std::vector<double> pass_rates);

    std::size_t num_candidates() const { return population_size_; }
    std::size_t num_cases() const { return pass_rates_.size(); }

    void resample(RandomSource& rng);
    ErrorValue error(CandidateId candidate, CaseId case_id) const { return matrix_[candidate * num_cases() + case_id]; }
    bool has_perfect_row() const;

private:
    std::size_t population_size_;
    std::vector<double> pass_rates_;
    std::vector<ErrorValue> matrix_;
};

enum class ProblemKind {
    Bitstring,
    Synthetic,
};

struct RunConfig {
    std::size_t runs = 50;
    std::size_t population_size = 1000;
    std::size_t max_generations = 300;
    ShufflePolicy shuffle = ShufflePolicy::uniform();
    InitPolicy init = InitPolicy::DefaultMax;
    // Per-bit flip probability; unset means 1 / n_cases.
    std::optional<double> mutation_rate;
    std::uint64_t seed = 0;
    bool reset_weights_each_generation = false;
    std::size_t jobs = 1;
    EvaluatorOptions evaluator;
    ProblemKind problem = ProblemKind::Bitstring;
    DifficultyProfile difficulty;

    // Throws ConfigError.
    void validate() const;
    double resolved_mutation_rate() const;
    // "uniform", or "<shuffle>-<bias>-<init>" for the fast variants.
    std::string method_name() const;
};

// Performs population_size selection events over the current generation.
// Uniform policies use plain lexicase selection; the others use fast lexicase
// and write their weight updates back into `weights`.
std::vector<SelectionOutcome> select_parents(
    const RunConfig& config, WeightVector& weights, Evaluator& evaluator, RandomSource& rng);

// One generation of the bitstring GA: selects population_size parents,
// mutates each into the next population (in place, so an evaluator bound to
// `population` stays valid), and clears the evaluator cache.
// `success` reports whether the generation just selected from held a solution.
// run_id and generation are left for the caller to fill in.
GenerationStats run_generation(std::vector<Genome>& population, const BitstringProblem& problem,
    const RunConfig& config, WeightVector& weights, Evaluator& evaluator, RandomSource& rng,
    std::vector<SelectionOutcome>* events = nullptr);

// One generation in synthetic mode: selection over the current matrix, then a redraw.
GenerationStats run_synthetic_generation(SyntheticErrorMatrix& matrix, const RunConfig& config,
    WeightVector& weights, Evaluator& evaluator, RandomSource& rng, std::vector<SelectionOutcome>* events = nullptr);

struct RunResult {
    std::uint64_t run_id = 0;
    std::vector<GenerationStats> generations;
    std::optional<std::uint64_t> solved_generation;
    // Weights at the end of each generation, when requested.
    std::vector<WeightVector> weight_history;
};

struct ExperimentResult {
    std::vector<RunResult> runs;
    std::size_t success_count = 0;
    // Mean evaluations_total over every active (run, generation) row.
    double mean_evaluations_overall = 0.0;

    std::vector<GenerationStats> all_rows() const;
};

// Executes `runs` independent runs, each seeded by derive_seed(seed, run index)
// and stopped after the first generation that holds a solution. Results do
// not depend on `jobs`.
RunResult run_single(const RunConfig& config, std::uint64_t run_id, bool record_weights = false);
ExperimentResult run_experiment(const RunConfig& config, bool record_weights = false);

inline constexpr const char* kSummaryHeader = "method,success_count,runs,mean_evaluations_overall";

} // namespace fastlex::ga
