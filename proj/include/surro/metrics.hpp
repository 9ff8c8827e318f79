#pragma once

#include <span>

namespace surro {

// Relative tolerance band; a prediction counts as accurate when it falls
// within fraction * |target| of the target (closed band). Targets of exactly
// zero use the absolute zero_target_epsilon band instead.
struct ToleranceSpec {
    double fraction = 0.30;
    double zero_target_epsilon = 0.0;
};

bool within_tolerance(double prediction, double target, const ToleranceSpec& spec);

// Fraction of predictions inside the band, in [0, 1].
double tolerance_accuracy(std::span<const double> predictions,
                          std::span<const double> targets,
                          const ToleranceSpec& spec = {});

double rmse(std::span<const double> predictions, std::span<const double> targets);

}  // namespace surro
