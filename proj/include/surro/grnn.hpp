#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "surro/dataset.hpp"
#include "surro/metrics.hpp"

namespace surro {

// General regression network: a Gaussian-kernel weighted average over stored
// training exemplars. No iterative training; fitting stores normalized rows.
struct GrnnModel {
    double sigma = 0.0;  // kernel smoothing width in normalized feature space
    std::vector<std::string> feature_names;
    std::string target_name;
    NormStats norm;
    std::vector<std::vector<double>> exemplar_features;  // normalized
    std::vector<double> exemplar_targets;                // normalized
};

GrnnModel fit(const Dataset& ds, double sigma);

// Kernel-weighted average in normalized space:
//   y = sum_i t_i exp(-d_i^2 / (2 sigma^2)) / sum_i exp(-d_i^2 / (2 sigma^2))
// with Euclidean d_i. When every kernel weight underflows to zero the
// nearest exemplar's target is returned (lowest index on distance ties).
double predict_normalized(const GrnnModel& m, std::span<const double> x);

// Normalize, predict, denormalize; same extrapolation guard as mlfn.
double predict(const GrnnModel& m, std::span<const double> raw);

struct SigmaSelection {
    double best_sigma = 0.0;
    std::vector<double> grid;
    std::vector<double> mean_accuracy;  // aligned with grid
};

// Picks the grid sigma with the best mean k-fold tolerance accuracy; ties go
// to the smaller sigma.
SigmaSelection select_sigma(const Dataset& ds, std::span<const double> sigma_grid,
                            int k, std::uint64_t seed, const ToleranceSpec& spec = {});

}  // namespace surro
