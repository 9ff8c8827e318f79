#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "surro/dataset.hpp"

namespace surro {

// One-hidden-layer sigmoid regressor trained by online backpropagation with
// momentum. The output layer is sigmoid as well, so targets are normalized
// into the open unit interval before training.
struct MlfnConfig {
    int n_inputs = 0;  // 0 = derive from the training data
    int n_hidden = 7;
    double learning_rate = 0.9;
    double momentum = 0.9;
    int epochs = 200;
    std::uint64_t seed = 1;
    double init_half_width = 0.5;
};

void validate(const MlfnConfig& cfg);

struct MlfnModel {
    MlfnConfig config;
    std::vector<std::string> feature_names;
    std::string target_name;
    NormStats norm;
    std::vector<double> hidden_weights;  // n_hidden x n_inputs, row-major
    std::vector<double> hidden_biases;   // n_hidden
    std::vector<double> output_weights;  // n_hidden
    double output_bias = 0.0;
};

struct MlfnGradient {
    std::vector<double> hidden_weights;
    std::vector<double> hidden_biases;
    std::vector<double> output_weights;
    double output_bias = 0.0;
};

// Numerically stable logistic clamped into the open interval (0, 1).
double sigmoid(double t);

// Fresh model with every parameter drawn uniformly from
// [-init_half_width, +init_half_width] by a generator seeded with cfg.seed.
// Draw order: hidden weights row-major, hidden biases, output weights,
// output bias.
MlfnModel init(const MlfnConfig& cfg);

// Forward pass on an already-normalized input vector; strictly in (0, 1).
double forward(const MlfnModel& m, std::span<const double> x);

// Analytic gradient of 0.5 * (forward(m, x) - target)^2 for every parameter.
MlfnGradient gradient(const MlfnModel& m, std::span<const double> x, double target);

struct TrainResult {
    MlfnModel model;
    std::vector<double> epoch_mse;  // normalized-space MSE after each epoch
};

// Online training: update after every sample, sample order reshuffled each
// epoch by the seeded generator. Deterministic for a fixed (ds, cfg).
TrainResult train(const Dataset& ds, const MlfnConfig& cfg);

// Normalize the raw input, run forward, denormalize the output. Inputs more
// than 10 column spans outside the training range are rejected with
// ExtrapolationError.
double predict(const MlfnModel& m, std::span<const double> raw);

}  // namespace surro
