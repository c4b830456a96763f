#include "fastlex/harness_gradient.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <fmt/core.h>

namespace fastlex::gradient {

Dataset::Dataset(std::size_t n_features, std::size_t n_classes)
    : n_features_(n_features)
    , n_classes_(n_classes)
{
    if (n_features_ == 0 || n_classes_ < 2) {
        throw ConfigError("dataset needs at least one feature and two classes");
    }
}

void Dataset::add(std::span<const double> x, std::size_t label)
{
    if (x.size() != n_features_ || label >= n_classes_) {
        throw ConfigError("sample does not match the dataset shape");
    }
    features_.insert(features_.end(), x.begin(), x.end());
    labels_.push_back(label);
}

Dataset make_blobs(std::size_t n, std::span<const std::vector<double>> centers, double spread, RandomSource& rng)
{
    if (centers.size() < 2) {
        throw ConfigError("blobs need at least two centers");
    }
    Dataset data(centers.front().size(), centers.size());
    std::vector<double> x(data.num_features());
    for (std::size_t i = 0; i < n; ++i) {
        auto label = i % centers.size();
        for (std::size_t f = 0; f < x.size(); ++f) {
            x[f] = rng.normal(centers[label][f], spread);
        }
        data.add(x, label);
    }
    return data;
}

Dataset make_default_blobs(std::size_t n, RandomSource& rng, double spread)
{
    const std::vector<std::vector<double>> centers { { 1.0, 1.0 }, { -1.0, 1.0 }, { -1.0, -1.0 }, { 1.0, -1.0 } };
    return make_blobs(n, centers, spread, rng);
}

double Learner::accuracy(const Dataset& data) const
{
    if (data.size() == 0) {
        return 0.0;
    }
    std::size_t correct = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        correct += predict(data.features(i)) == data.label(i) ? 1 : 0;
    }
    return static_cast<double>(correct) / static_cast<double>(data.size());
}

ToyLinearLearner::ToyLinearLearner(std::size_t n_features, std::size_t n_classes, double learning_rate)
    : n_features_(n_features)
    , n_classes_(n_classes)
    , learning_rate_(learning_rate)
    , weights_(n_features * n_classes, 0.0)
    , biases_(n_classes, 0.0)
    , scratch_(n_classes, 0.0)
{
    if (!(learning_rate_ >= 0.0) || !std::isfinite(learning_rate_)) {
        throw ConfigError(fmt::format("learning rate {} must be finite and non-negative", learning_rate_));
    }
}

ToyLinearLearner::ToyLinearLearner(
    std::size_t n_features, std::size_t n_classes, double learning_rate, RandomSource& rng)
    : ToyLinearLearner(n_features, n_classes, learning_rate)
{
    for (auto& w : weights_) {
        w = rng.normal(0.0, 0.01);
    }
}

std::unique_ptr<Learner> ToyLinearLearner::clone() const
{
    return std::make_unique<ToyLinearLearner>(*this);
}

void ToyLinearLearner::train_on(const Dataset& data, std::span<const std::size_t> subset)
{
    auto& probs = scratch_;
    for (auto i : subset) {
        auto x = data.features(i);
        double peak = -INFINITY;
        for (std::size_t c = 0; c < n_classes_; ++c) {
            double z = biases_[c];
            for (std::size_t f = 0; f < n_features_; ++f) {
                z += weights_[c * n_features_ + f] * x[f];
            }
            probs[c] = z;
            peak = std::max(peak, z);
        }
        double norm = 0.0;
        for (auto& z : probs) {
            z = std::exp(z - peak);
            norm += z;
        }
        for (std::size_t c = 0; c < n_classes_; ++c) {
            double grad = probs[c] / norm - (c == data.label(i) ? 1.0 : 0.0);
            biases_[c] -= learning_rate_ * grad;
            for (std::size_t f = 0; f < n_features_; ++f) {
                weights_[c * n_features_ + f] -= learning_rate_ * grad * x[f];
            }
        }
    }
}

std::size_t ToyLinearLearner::predict(std::span<const double> x) const
{
    std::size_t best = 0;
    double best_score = -INFINITY;
    for (std::size_t c = 0; c < n_classes_; ++c) {
        double z = biases_[c];
        for (std::size_t f = 0; f < n_features_; ++f) {
            z += weights_[c * n_features_ + f] * x[f];
        }
        if (z > best_score) {
            best_score = z;
            best = c;
        }
    }
    return best;
}

bool ToyLinearLearner::parameters_finite() const
{
    auto finite = [](double v) { return std::isfinite(v); };
    return std::all_of(weights_.begin(), weights_.end(), finite) && std::all_of(biases_.begin(), biases_.end(), finite);
}

void GradientConfig::validate() const
{
    if (population_size < 2) {
        throw ConfigError("gradient lexicase needs a population of at least 2");
    }
    if (n_cases < population_size) {
        throw ConfigError(fmt::format("{} training cases cannot be split into {} subsets", n_cases, population_size));
    }
    if (!(spread > 0.0) || !(learning_rate >= 0.0)) {
        throw ConfigError("spread must be positive and learning rate non-negative");
    }
    if (jobs == 0) {
        throw ConfigError("jobs must be at least 1");
    }
}

std::string GradientConfig::method_name() const
{
    if (shuffle.is_uniform()) {
        return "uniform";
    }
    return fmt::format("{}-{}-{}", to_string(shuffle.kind()), to_string(*shuffle.bias()), to_string(init));
}

std::vector<std::vector<std::size_t>> partition_subsets(std::size_t n, std::size_t p, RandomSource& rng)
{
    if (p == 0 || n < p) {
        throw ConfigError(fmt::format("cannot draw {} non-empty subsets from {} cases", p, n));
    }
    auto order = uniform_shuffle(n, rng);
    auto size = n / p;
    std::vector<std::vector<std::size_t>> subsets(p);
    for (std::size_t j = 0; j < p; ++j) {
        auto first = order.begin() + static_cast<std::ptrdiff_t>(j * size);
        subsets[j].assign(first, first + static_cast<std::ptrdiff_t>(size));
    }
    return subsets;
}

EpochResult gradient_lexicase_epoch(std::vector<std::unique_ptr<Learner>>& candidates, const Dataset& data,
    WeightVector& weights, const GradientConfig& config, RandomSource& rng)
{
    auto p = candidates.size();
    if (p == 0) {
        throw SelectionError("gradient lexicase epoch without candidates");
    }
    auto subsets = partition_subsets(data.size(), p, rng);

    auto train = [&](std::size_t j) { candidates[j]->train_on(data, subsets[j]); };
    auto workers = std::min(config.jobs, p);
    if (workers <= 1) {
        for (std::size_t j = 0; j < p; ++j) {
            train(j);
        }
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (auto j = w; j < p; j += workers) {
                    train(j);
                }
            });
        }
    }
    for (std::size_t j = 0; j < p; ++j) {
        if (!candidates[j]->parameters_finite()) {
            throw TrainingError(fmt::format("candidate {} has non-finite parameters after training", j));
        }
    }

    Evaluator evaluator(
        p, data.size(), [&](CandidateId c, CaseId i) { return candidates[c]->error(data, i); }, config.evaluator);
    auto pool = full_pool(p);
    EpochResult result;
    if (config.shuffle.is_uniform()) {
        auto order = uniform_shuffle(data.size(), rng);
        result.selection = lexicase_select(pool, order, evaluator, rng);
    } else {
        result.selection = fast_lexicase_select(pool, weights, config.shuffle, evaluator, rng);
        weights = result.selection.updated_weights;
    }

    result.parent = candidates[result.selection.selected]->clone();
    for (auto& candidate : candidates) {
        candidate = result.parent->clone();
    }
    result.record.evaluations = result.selection.evaluations;
    result.record.pool_final_size = result.selection.final_pool_size;
    result.record.parent_train_acc = result.parent->accuracy(data);
    return result;
}

GradientRunResult run_gradient_experiment(const GradientConfig& config, std::uint64_t run_id)
{
    config.validate();
    RandomSource rng(derive_seed(config.seed, run_id));
    auto train = make_default_blobs(config.n_cases, rng, config.spread);
    auto test = make_default_blobs(config.n_test_cases, rng, config.spread);

    auto p = config.population_size;
    GradientRunResult result;
    result.parent
        = std::make_unique<ToyLinearLearner>(train.num_features(), train.num_classes(), config.learning_rate, rng);
    std::vector<std::unique_ptr<Learner>> candidates;
    for (std::size_t j = 0; j < p; ++j) {
        candidates.push_back(result.parent->clone());
    }
    auto weights = init_weights(train.size(), config.init, p);

    for (std::uint64_t epoch = 1; epoch <= config.epochs; ++epoch) {
        if (config.reset_weights_each_epoch) {
            weights = init_weights(train.size(), config.init, p);
        }
        auto step = gradient_lexicase_epoch(candidates, train, weights, config, rng);
        step.record.epoch = epoch;
        result.epochs.push_back(step.record);
        result.parent = std::move(step.parent);
    }
    result.train_accuracy = result.parent->accuracy(train);
    result.test_accuracy = result.parent->accuracy(test);
    return result;
}

} // namespace fastlex::gradient
