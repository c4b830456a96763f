#include "fastlex/harness_ga.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/core.h>

namespace fastlex::ga {

std::vector<double> DifficultyProfile::rates() const
{
    std::vector<double> rates(n_cases, easy_rate);
    std::fill_n(rates.begin(), std::min(hard_cases, n_cases), hard_rate);
    return rates;
}

BitstringProblem::BitstringProblem(Genome target, std::vector<double> initial_match_rates)
    : target_(std::move(target))
    , match_rates_(std::move(initial_match_rates))
{
    if (target_.empty()) {
        throw ConfigError("bitstring problem needs at least one case");
    }
    if (match_rates_.size() != target_.size()) {
        throw ConfigError("one initial match rate per case is required");
    }
}

BitstringProblem BitstringProblem::random(const DifficultyProfile& profile, RandomSource& rng)
{
    Genome target(profile.n_cases);
    for (auto& bit : target) {
        bit = static_cast<std::uint8_t>(rng.uniform_index(2));
    }
    return BitstringProblem(std::move(target), profile.rates());
}

Genome BitstringProblem::random_genome(RandomSource& rng) const
{
    Genome genome(target_.size());
    for (std::size_t i = 0; i < genome.size(); ++i) {
        genome[i] = rng.bernoulli(match_rates_[i]) ? target_[i] : static_cast<std::uint8_t>(1 - target_[i]);
    }
    return genome;
}

SyntheticErrorMatrix::SyntheticErrorMatrix(std::size_t population_size, std::vector<double> pass_rates)
    : population_size_(population_size)
    , pass_rates_(std::move(pass_rates))
    , matrix_(population_size_ * pass_rates_.size(), 0.0)
{
    if (population_size_ == 0 || pass_rates_.empty()) {
        throw ConfigError("synthetic error matrix needs candidates and cases");
    }
}

void SyntheticErrorMatrix::resample(RandomSource& rng)
{
    auto n = num_cases();
    for (std::size_t c = 0; c < population_size_; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            matrix_[c * n + i] = rng.bernoulli(pass_rates_[i]) ? 0.0 : 1.0;
        }
    }
}

bool SyntheticErrorMatrix::has_perfect_row() const
{
    auto n = num_cases();
    for (std::size_t c = 0; c < population_size_; ++c) {
        auto row = matrix_.begin() + static_cast<std::ptrdiff_t>(c * n);
        if (std::all_of(row, row + static_cast<std::ptrdiff_t>(n), [](double e) { return e == 0.0; })) {
            return true;
        }
    }
    return false;
}

void RunConfig::validate() const
{
    if (runs == 0 || population_size == 0 || max_generations == 0) {
        throw ConfigError("runs, population size and generations must all be at least 1");
    }
    if (difficulty.n_cases == 0) {
        throw ConfigError("problem needs at least one case");
    }
    if (mutation_rate && !(*mutation_rate >= 0.0 && *mutation_rate <= 1.0)) {
        throw ConfigError(fmt::format("mutation rate {} outside [0, 1]", *mutation_rate));
    }
    for (double rate : { difficulty.hard_rate, difficulty.easy_rate }) {
        if (!(rate >= 0.0 && rate <= 1.0)) {
            throw ConfigError(fmt::format("difficulty rate {} outside [0, 1]", rate));
        }
    }
    if (jobs == 0) {
        throw ConfigError("jobs must be at least 1");
    }
}

double RunConfig::resolved_mutation_rate() const
{
    return mutation_rate.value_or(1.0 / static_cast<double>(difficulty.n_cases));
}

std::string RunConfig::method_name() const
{
    if (shuffle.is_uniform()) {
        return "uniform";
    }
    return fmt::format("{}-{}-{}", to_string(shuffle.kind()), to_string(*shuffle.bias()), to_string(init));
}

std::vector<SelectionOutcome> select_parents(
    const RunConfig& config, WeightVector& weights, Evaluator& evaluator, RandomSource& rng)
{
    auto pool = full_pool(config.population_size);
    std::vector<SelectionOutcome> events;
    events.reserve(config.population_size);
    for (std::size_t e = 0; e < config.population_size; ++e) {
        if (config.shuffle.is_uniform()) {
            auto order = uniform_shuffle(evaluator.num_cases(), rng);
            events.push_back(lexicase_select(pool, order, evaluator, rng));
        } else {
            auto outcome = fast_lexicase_select(pool, weights, config.shuffle, evaluator, rng);
            weights = outcome.updated_weights;
            events.push_back(std::move(outcome));
        }
    }
    return events;
}

namespace {

GenerationStats finish_generation(std::vector<SelectionOutcome>& events, Evaluator& evaluator,
    std::uint64_t executions_before, bool success, std::vector<SelectionOutcome>* events_out)
{
    auto stats = generation_rollup(events, evaluator.executions() - executions_before);
    stats.success = success;
    evaluator.new_generation();
    if (events_out != nullptr) {
        *events_out = std::move(events);
    }
    return stats;
}

} // namespace

GenerationStats run_generation(std::vector<Genome>& population, const BitstringProblem& problem,
    const RunConfig& config, WeightVector& weights, Evaluator& evaluator, RandomSource& rng,
    std::vector<SelectionOutcome>* events_out)
{
    if (population.size() != config.population_size) {
        throw ConfigError(
            fmt::format("population holds {} genomes, config expects {}", population.size(), config.population_size));
    }
    auto executions_before = evaluator.executions();
    auto events = select_parents(config, weights, evaluator, rng);
    bool success = std::any_of(
        population.begin(), population.end(), [&](const Genome& g) { return problem.is_solution(g); });

    auto rate = config.resolved_mutation_rate();
    std::vector<Genome> next;
    next.reserve(population.size());
    for (const auto& event : events) {
        Genome child = population[event.selected];
        if (rate > 0.0) {
            for (auto& bit : child) {
                if (rng.bernoulli(rate)) {
                    bit = static_cast<std::uint8_t>(1 - bit);
                }
            }
        }
        next.push_back(std::move(child));
    }
    population.swap(next);
    return finish_generation(events, evaluator, executions_before, success, events_out);
}

GenerationStats run_synthetic_generation(SyntheticErrorMatrix& matrix, const RunConfig& config,
    WeightVector& weights, Evaluator& evaluator, RandomSource& rng, std::vector<SelectionOutcome>* events_out)
{
    auto executions_before = evaluator.executions();
    auto events = select_parents(config, weights, evaluator, rng);
    bool success = matrix.has_perfect_row();
    matrix.resample(rng);
    return finish_generation(events, evaluator, executions_before, success, events_out);
}

RunResult run_single(const RunConfig& config, std::uint64_t run_id, bool record_weights)
{
    config.validate();
    RandomSource rng(derive_seed(config.seed, run_id));
    RunResult result;
    result.run_id = run_id;

    auto n = config.difficulty.n_cases;
    auto p = config.population_size;
    auto weights = init_weights(n, config.init, p);

    auto record = [&](GenerationStats stats, std::uint64_t generation) {
        stats.run_id = run_id;
        stats.generation = generation;
        result.generations.push_back(stats);
        if (record_weights) {
            result.weight_history.push_back(weights);
        }
        if (stats.success) {
            result.solved_generation = generation;
        }
        return stats.success;
    };

    if (config.problem == ProblemKind::Bitstring) {
        auto problem = BitstringProblem::random(config.difficulty, rng);
        std::vector<Genome> population;
        population.reserve(p);
        for (std::size_t i = 0; i < p; ++i) {
            population.push_back(problem.random_genome(rng));
        }
        Evaluator evaluator(
            p, n, [&](CandidateId c, CaseId i) { return problem.error(population[c], i); }, config.evaluator);
        for (std::uint64_t g = 1; g <= config.max_generations; ++g) {
            if (config.reset_weights_each_generation) {
                weights = init_weights(n, config.init, p);
            }
            if (record(run_generation(population, problem, config, weights, evaluator, rng), g)) {
                break;
            }
        }
    } else {
        SyntheticErrorMatrix matrix(p, config.difficulty.rates());
        matrix.resample(rng);
        Evaluator evaluator(
            p, n, [&](CandidateId c, CaseId i) { return matrix.error(c, i); }, config.evaluator);
        for (std::uint64_t g = 1; g <= config.max_generations; ++g) {
            if (config.reset_weights_each_generation) {
                weights = init_weights(n, config.init, p);
            }
            if (record(run_synthetic_generation(matrix, config, weights, evaluator, rng), g)) {
                break;
            }
        }
    }
    return result;
}

std::vector<GenerationStats> ExperimentResult::all_rows() const
{
    std::vector<GenerationStats> rows;
    for (const auto& run : runs) {
        rows.insert(rows.end(), run.generations.begin(), run.generations.end());
    }
    return rows;
}

ExperimentResult run_experiment(const RunConfig& config, bool record_weights)
{
    config.validate();
    ExperimentResult result;
    result.runs.resize(config.runs);

    auto workers = std::min(config.jobs, config.runs);
    if (workers <= 1) {
        for (std::size_t r = 0; r < config.runs; ++r) {
            result.runs[r] = run_single(config, r, record_weights);
        }
    } else {
        std::atomic<std::size_t> next { 0 };
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    for (auto r = next++; r < config.runs; r = next++) {
                        try {
                            result.runs[r] = run_single(config, r, record_weights);
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure) {
                                failure = std::current_exception();
                            }
                        }
                    }
                });
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    double total = 0.0;
    std::size_t rows = 0;
    for (const auto& run : result.runs) {
        if (run.solved_generation) {
            ++result.success_count;
        }
        for (const auto& g : run.generations) {
            total += static_cast<double>(g.evaluations_total);
            ++rows;
        }
    }
    result.mean_evaluations_overall = rows == 0 ? 0.0 : total / static_cast<double>(rows);
    return result;
}

} // namespace fastlex::ga
