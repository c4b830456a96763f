#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fastlex/evaluator.hpp"
#include "fastlex/random.hpp"
#include "fastlex/selection.hpp"
#include "fastlex/shuffling.hpp"
#include "fastlex/weighting.hpp"

namespace fastlex::gradient {

// Labelled feature vectors, row-major.
class Dataset {
public:
    Dataset(std::size_t n_features, std::size_t n_classes);

    std::size_t size() const { return labels_.size(); }
    std::size_t num_features() const { return n_features_; }
    std::size_t num_classes() const { return n_classes_; }

    std::span<const double> features(std::size_t i) const
    {
        return { features_.data() + i * n_features_, n_features_ };
    }
    std::size_t label(std::size_t i) const { return labels_[i]; }

    void add(std::span<const double> x, std::size_t label);

private:
    std::size_t n_features_;
    std::size_t n_classes_;
    std::vector<double> features_;
    std::vector<std::size_t> labels_;
};

// Isotropic Gaussian blobs, one per center, assigned round-robin so classes are balanced.
Dataset make_blobs(std::size_t n, std::span<const std::vector<double>> centers, double spread, RandomSource& rng);

// Four blobs at (+-1, +-1) with spread 0.7: roughly 15% of cases fall on the
// wrong side of the optimal boundary.
Dataset make_default_blobs(std::size_t n, RandomSource& rng, double spread = 0.7);

// A trainable candidate.
class Learner {
public:
    virtual ~Learner() = default;

    virtual std::unique_ptr<Learner> clone() const = 0;
    // One pass of gradient descent over `subset`, in the given order.
    virtual void train_on(const Dataset& data, std::span<const std::size_t> subset) = 0;
    virtual std::size_t predict(std::span<const double> x) const = 0;
    virtual bool parameters_finite() const = 0;

    // 0/1 error of the argmax prediction on case i.
    ErrorValue error(const Dataset& data, std::size_t i) const
    {
        return predict(data.features(i)) == data.label(i) ? 0.0 : 1.0;
    }
    double accuracy(const Dataset& data) const;
};

// Multiclass linear classifier trained by per-sample softmax cross-entropy SGD.
class ToyLinearLearner final : public Learner {
public:
    ToyLinearLearner(std::size_t n_features, std::size_t n_classes, double learning_rate);
    // Small random initial weights.
    ToyLinearLearner(std::size_t n_features, std::size_t n_classes, double learning_rate, RandomSource& rng);

    std::unique_ptr<Learner> clone() const override;
    void train_on(const Dataset& data, std::span<const std::size_t> subset) override;
    std::size_t predict(std::span<const double> x) const override;
    bool parameters_finite() const override;

    std::span<const double> weights() const { return weights_; }
    std::span<const double> biases() const { return biases_; }

private:
    std::size_t n_features_;
    std::size_t n_classes_;
    double learning_rate_;
    std::vector<double> weights_; // classes x features
    std::vector<double> biases_;
    mutable std::vector<double> scratch_;
};

struct GradientConfig {
    std::size_t population_size = 4;
    std::size_t epochs = 200;
    std::size_t n_cases = 2000;
    std::size_t n_test_cases = 1000;
    double spread = 0.7;
    double learning_rate = 0.05;
    ShufflePolicy shuffle = ShufflePolicy::uniform();
    InitPolicy init = InitPolicy::DefaultMax;
    std::uint64_t seed = 0;
    bool reset_weights_each_epoch = false;
    // Threads training the candidates of one epoch.
    std::size_t jobs = 1;
    EvaluatorOptions evaluator;

    // Throws ConfigError.
    void validate() const;
    std::string method_name() const;
};

// p disjoint subsets of size floor(n / p) drawn without replacement. Throws ConfigError when n < p.
std::vector<std::vector<std::size_t>> partition_subsets(std::size_t n, std::size_t p, RandomSource& rng);

struct EpochRecord {
    std::uint64_t epoch = 0;
    std::uint64_t evaluations = 0;
    std::size_t pool_final_size = 0;
    double parent_train_acc = 0.0;

    friend bool operator==(const EpochRecord&, const EpochRecord&) = default;
};

struct EpochResult {
    std::unique_ptr<Learner> parent;
    SelectionOutcome selection;
    EpochRecord record;
};

// One epoch: trains candidate j on subset j, picks a parent with one
// lexicase event over the whole training set (fast lexicase unless the
// policy is uniform), then refills `candidates` with clones of the parent.
// Throws TrainingError when a trained candidate has non-finite parameters.
EpochResult gradient_lexicase_epoch(std::vector<std::unique_ptr<Learner>>& candidates, const Dataset& data,
    WeightVector& weights, const GradientConfig& config, RandomSource& rng);

struct GradientRunResult {
    std::vector<EpochRecord> epochs;
    std::unique_ptr<Learner> parent;
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
};

// K epochs from p clones of one randomly initialised toy learner, with a
// single weight vector kept for the whole run unless reset_weights_each_epoch. K = 0 returns the initial learner.
// The run's stream is derive_seed(config.seed, run_id).
GradientRunResult run_gradient_experiment(const GradientConfig& config, std::uint64_t run_id = 0);

inline constexpr const char* kEpochsHeader = "epoch,evaluations,pool_final_size,parent_train_acc";

} // namespace fastlex::gradient
