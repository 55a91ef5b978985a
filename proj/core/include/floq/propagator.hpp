#pragma once

#include <vector>

#include "floq/drive.hpp"
#include "floq/types.hpp"

namespace floq {

// exact exponential of -i H dt for the midpoint Hamiltonian; unitary by construction
Mat2 step_propagator(const DriveParams& p, double t0, double dt);

// U(t0 + span, t0) composed from `steps` midpoint substeps
Mat2 propagate(const DriveParams& p, double t0, double span, int steps);

// one-period propagator U(tau, 0)
Mat2 monodromy(const DriveParams& p, int steps_per_period);

// U(k tau / n_samples, 0) for k = 0..n_samples; steps_per_period must be a
// multiple of n_samples
std::vector<Mat2> sample_period(const DriveParams& p, int steps_per_period, int n_samples);

}  // namespace floq
