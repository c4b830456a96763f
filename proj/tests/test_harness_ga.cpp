#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "fastlex/harness_ga.hpp"

using namespace fastlex;
using namespace fastlex::ga;

namespace {

RunConfig small_config(std::size_t pop, std::size_t cases)
{
    RunConfig config;
    config.runs = 1;
    config.population_size = pop;
    config.max_generations = 10;
    config.difficulty = { cases, 0, 0.5, 0.5 };
    return config;
}

Evaluator bind_evaluator(const std::vector<Genome>& population, const BitstringProblem& problem)
{
    return Evaluator(population.size(), problem.num_cases(),
        [&](CandidateId c, CaseId i) { return problem.error(population[c], i); });
}

} // namespace

TEST(BitstringProblem, ErrorsAreZeroOne)
{
    BitstringProblem problem({ 1, 0, 1 }, { 0.5, 0.5, 0.5 });
    Genome g { 1, 1, 1 };
    EXPECT_EQ(problem.error(g, 0), 0.0);
    EXPECT_EQ(problem.error(g, 1), 1.0);
    EXPECT_FALSE(problem.is_solution(g));
    EXPECT_TRUE(problem.is_solution(problem.target()));
    EXPECT_THROW(BitstringProblem({}, {}), ConfigError);
    EXPECT_THROW(BitstringProblem({ 1 }, { 0.5, 0.5 }), ConfigError);
}

TEST(BitstringProblem, InitialMatchRatesAreHonoured)
{
    RandomSource rng(1);
    DifficultyProfile profile { 8, 4, 0.1, 0.9 };
    auto problem = BitstringProblem::random(profile, rng);
    std::vector<double> matches(8, 0.0);
    const int samples = 20000;
    for (int s = 0; s < samples; ++s) {
        auto g = problem.random_genome(rng);
        for (std::size_t i = 0; i < 8; ++i) {
            matches[i] += problem.error(g, i) == 0.0 ? 1.0 / samples : 0.0;
        }
    }
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(matches[i], i < 4 ? 0.1 : 0.9, 0.015);
    }
}

TEST(RunGeneration, PerfectPopulationExhaustsCases)
{
    auto config = small_config(6, 5);
    BitstringProblem problem({ 1, 0, 0, 1, 1 }, std::vector<double>(5, 0.5));
    std::vector<Genome> population(6, problem.target());
    auto ev = bind_evaluator(population, problem);
    auto weights = init_weights(5, config.init, 6);
    RandomSource rng(2);
    std::vector<SelectionOutcome> events;
    auto stats = run_generation(population, problem, config, weights, ev, rng, &events);
    ASSERT_EQ(events.size(), 6u);
    for (const auto& e : events) {
        EXPECT_EQ(e.terminated_by, Termination::CasesExhausted);
        EXPECT_EQ(e.cases_visited.size(), 5u);
        EXPECT_EQ(e.evaluations, 30u);
    }
    EXPECT_TRUE(stats.success);
    EXPECT_EQ(stats.evaluations_total, 180u);
    // Cache: 6 x 5 distinct pairs executed once each.
    EXPECT_EQ(stats.executions_total, 30u);
}

TEST(RunGeneration, NoMutationCopiesSelectedParents)
{
    auto config = small_config(12, 8);
    config.mutation_rate = 0.0;
    RandomSource rng(3);
    auto problem = BitstringProblem::random(config.difficulty, rng);
    std::vector<Genome> population;
    for (int i = 0; i < 12; ++i) {
        population.push_back(problem.random_genome(rng));
    }
    auto before = population;
    auto ev = bind_evaluator(population, problem);
    auto weights = init_weights(8, config.init, 12);
    std::vector<SelectionOutcome> events;
    run_generation(population, problem, config, weights, ev, rng, &events);
    for (std::size_t k = 0; k < events.size(); ++k) {
        EXPECT_EQ(population[k], before[events[k].selected]);
    }
}

TEST(RunGeneration, RejectsWrongPopulationSize)
{
    auto config = small_config(4, 3);
    BitstringProblem problem({ 1, 1, 1 }, std::vector<double>(3, 0.5));
    std::vector<Genome> population(3, problem.target());
    auto ev = bind_evaluator(population, problem);
    auto weights = init_weights(3, config.init, 4);
    RandomSource rng(4);
    EXPECT_THROW(run_generation(population, problem, config, weights, ev, rng), ConfigError);
}

TEST(RunGeneration, NeverSelectsDominatedCandidates)
{
    // All cases are visited when filtering exhausts them, and a dominated
    // candidate survives only alongside its dominator, so it can never be chosen.
    RandomSource rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto config = small_config(2 + rng.uniform_index(8), 1 + rng.uniform_index(6));
        auto problem = BitstringProblem::random(config.difficulty, rng);
        std::vector<Genome> population;
        for (std::size_t i = 0; i < config.population_size; ++i) {
            population.push_back(problem.random_genome(rng));
        }
        auto snapshot = population;
        auto ev = bind_evaluator(population, problem);
        auto weights = init_weights(problem.num_cases(), config.init, config.population_size);
        if (rng.bernoulli(0.5)) {
            config.shuffle = ShufflePolicy::ranked(BiasMetric::NumNonzeros);
        }
        std::vector<SelectionOutcome> events;
        run_generation(population, problem, config, weights, ev, rng, &events);
        auto dominated = [&](std::size_t a) {
            for (std::size_t b = 0; b < snapshot.size(); ++b) {
                bool no_worse = true;
                bool better = false;
                for (std::size_t i = 0; i < problem.num_cases(); ++i) {
                    auto ea = problem.error(snapshot[a], i);
                    auto eb = problem.error(snapshot[b], i);
                    no_worse = no_worse && eb <= ea;
                    better = better || eb < ea;
                }
                if (no_worse && better) {
                    return true;
                }
            }
            return false;
        };
        for (const auto& e : events) {
            ASSERT_FALSE(dominated(e.selected));
            ASSERT_LE(e.evaluations, config.population_size * problem.num_cases());
        }
    }
}

TEST(RunGeneration, FixedSeedRegression)
{
    auto config = small_config(10, 16);
    config.seed = 2024;
    config.max_generations = 3;
    auto a = run_single(config, 0);
    auto b = run_single(config, 0);
    ASSERT_EQ(a.generations, b.generations);
    ASSERT_FALSE(a.generations.empty());
    const auto& first = a.generations.front();
    // Recorded from the first implementation run.
    EXPECT_EQ(first.selection_events, 10u);
    EXPECT_EQ(first.evaluations_total, 181u);
    EXPECT_EQ(first.executions_total, 112u);
}

TEST(RunExperiment, OneCaseProblemSolvesImmediately)
{
    RunConfig config;
    config.runs = 50;
    config.population_size = 100;
    config.max_generations = 100;
    config.difficulty = { 1, 0, 0.5, 0.5 };
    auto result = run_experiment(config);
    EXPECT_EQ(result.success_count, 50u);
    for (const auto& run : result.runs) {
        EXPECT_EQ(run.solved_generation, 1u);
        EXPECT_EQ(run.generations.size(), 1u);
    }
}

TEST(RunExperiment, DeterministicAndIndependentOfJobs)
{
    RunConfig config;
    config.runs = 6;
    config.population_size = 30;
    config.max_generations = 15;
    config.difficulty = { 24, 6, 0.05, 0.5 };
    config.shuffle = ShufflePolicy::weighted(BiasMetric::NumNonzeros);
    config.seed = 11;
    auto a = run_experiment(config);
    auto b = run_experiment(config);
    config.jobs = 3;
    auto c = run_experiment(config);
    EXPECT_EQ(a.all_rows(), b.all_rows());
    EXPECT_EQ(a.all_rows(), c.all_rows());
    EXPECT_EQ(a.success_count, c.success_count);
    EXPECT_EQ(a.mean_evaluations_overall, c.mean_evaluations_overall);
}

TEST(RunExperiment, CacheDoesNotChangeTheMetric)
{
    RunConfig config;
    config.runs = 2;
    config.population_size = 30;
    config.max_generations = 10;
    config.difficulty = { 20, 5, 0.1, 0.5 };
    config.shuffle = ShufflePolicy::ranked(BiasMetric::NumNonzeros);
    auto cached = run_experiment(config).all_rows();
    config.evaluator.cache = false;
    auto uncached = run_experiment(config).all_rows();
    ASSERT_EQ(cached.size(), uncached.size());
    for (std::size_t k = 0; k < cached.size(); ++k) {
        EXPECT_EQ(cached[k].evaluations_total, uncached[k].evaluations_total);
        EXPECT_EQ(uncached[k].executions_total, uncached[k].evaluations_total);
        EXPECT_LE(cached[k].executions_total, cached[k].evaluations_total);
    }
}

TEST(RunExperiment, SolvedRunsStopContributing)
{
    RunConfig config;
    config.runs = 8;
    config.population_size = 40;
    config.max_generations = 60;
    config.difficulty = { 16, 4, 0.1, 0.5 };
    config.seed = 3;
    auto result = run_experiment(config);
    for (const auto& run : result.runs) {
        for (std::size_t g = 0; g < run.generations.size(); ++g) {
            EXPECT_EQ(run.generations[g].generation, g + 1);
            bool last = g + 1 == run.generations.size();
            EXPECT_EQ(run.generations[g].success, last && run.solved_generation.has_value());
        }
    }
}

TEST(RunExperiment, ResetFlagRestartsWeights)
{
    RunConfig config;
    config.runs = 1;
    config.population_size = 20;
    config.max_generations = 5;
    config.difficulty = { 30, 10, 0.05, 0.5 };
    config.shuffle = ShufflePolicy::ranked(BiasMetric::NumNonzeros);
    config.init = InitPolicy::DefaultMax;
    config.reset_weights_each_generation = true;
    auto reset = run_single(config, 0, true);
    config.reset_weights_each_generation = false;
    auto kept = run_single(config, 0, true);
    // Identical first generation, diverging afterwards.
    EXPECT_EQ(reset.weight_history.front(), kept.weight_history.front());
    EXPECT_NE(reset.generations, kept.generations);
}

TEST(SyntheticMode, RunsAndStaysInBounds)
{
    RunConfig config;
    config.runs = 3;
    config.population_size = 25;
    config.max_generations = 20;
    config.problem = ProblemKind::Synthetic;
    config.difficulty = { 20, 5, 0.2, 0.9 };
    config.shuffle = ShufflePolicy::weighted(BiasMetric::NumNonzeros);
    auto result = run_experiment(config, true);
    for (const auto& run : result.runs) {
        for (const auto& w : run.weight_history) {
            for (auto v : w.values()) {
                ASSERT_GE(v, 1.0);
                ASSERT_LE(v, 26.0);
            }
        }
        for (const auto& g : run.generations) {
            EXPECT_EQ(g.selection_events, 25u);
            EXPECT_LE(g.evaluations_total, 25u * 25u * 20u);
        }
    }
}

TEST(SyntheticMatrix, PerfectRowDetection)
{
    SyntheticErrorMatrix always(3, { 1.0, 1.0 });
    SyntheticErrorMatrix never(3, { 0.0, 1.0 });
    RandomSource rng(6);
    always.resample(rng);
    never.resample(rng);
    EXPECT_TRUE(always.has_perfect_row());
    EXPECT_FALSE(never.has_perfect_row());
    EXPECT_EQ(never.error(2, 0), 1.0);
}

TEST(RunConfig, Validation)
{
    RunConfig config;
    config.runs = 0;
    EXPECT_THROW(config.validate(), ConfigError);
    config = RunConfig {};
    config.mutation_rate = 1.5;
    EXPECT_THROW(config.validate(), ConfigError);
    config = RunConfig {};
    EXPECT_DOUBLE_EQ(config.resolved_mutation_rate(), 1.0 / 64.0);
    config.shuffle = ShufflePolicy::ranked(BiasMetric::NumNonzeros);
    config.init = InitPolicy::DefaultMax;
    EXPECT_EQ(config.method_name(), "ranked-nonzeros-max");
}
