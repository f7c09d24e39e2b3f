#pragma once

#include <vector>

namespace gvfit {

/// Target residual bound, sweep cap, and step fraction toward the local
/// average. relaxation 1 jumps straight to the neighbor midpoint.
struct PolishConfig {
    double epsilon = 1e-6;
    int max_iters = 10000;
    double relaxation = 1.0;
};

struct PolishOutcome {
    std::vector<double> values;
    bool converged = false;
    int iterations = 0;       // full sweeps performed
    double max_residual = 0.0;
};

/// |2 seq[i+1] - seq[i] - seq[i+2]|, the equal-spacing slope mismatch.
double second_difference_residual(const std::vector<double>& seq, int i);

/// Slope mismatch of consecutive divided differences over coordinates xs;
/// reduces to second_difference_residual at unit spacing.
double general_slope_residual(const std::vector<double>& seq, const std::vector<double>& xs,
                              int i);

/// 1e-6 of the value range (small positive fallback for constant input).
double default_polish_epsilon(const std::vector<double>& values);

/// Gauss-Seidel sweeps in ascending index order: every non-guiding interior
/// index whose centered residual exceeds epsilon moves toward the midpoint of
/// its neighbors by the relaxation fraction. Guiding values come back
/// bit-identical. Non-convergence within max_iters is reported, not thrown.
PolishOutcome polish_1d(const std::vector<double>& seq, const std::vector<bool>& guiding,
                        const PolishConfig& cfg);

/// Grid polish: the centered residual is enforced along rows and columns
/// independently; a non-guiding interior vertex with either residual above
/// epsilon moves toward the average of its 4-neighborhood.
PolishOutcome polish_grid(const std::vector<double>& values, int width, int height,
                          const std::vector<bool>& guiding, const PolishConfig& cfg);

}  // namespace gvfit
