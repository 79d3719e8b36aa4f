#pragma once

// Per-path Euler-Maruyama exit-time kernels plus the two drivers that fan
// them out: a plain serial loop kept as the reference, and the OpenMP loop
// used in production. Both fill the same per-path outcome array, so results
// are bit-identical whatever the thread count.

#include <cstdint>
#include <functional>
#include <span>

namespace exitgeo::kernels {

/// Radial part of Brownian motion on a rotationally symmetric space of
/// dimension dim: the Euclidean Bessel step plus the bounded drift
/// (dim - 1)/2 * correction(rho).
struct RadialModel {
    int dim = 2;
    std::function<double(double)> correction;  // f'/f - 1/t; empty means zero
    double radius = 1.0;                       // absorbing sphere
};

struct StepConfig {
    double dt = 1e-4;
    std::uint64_t seed = 0;
    double t_max = 1.0;  // censoring horizon, in exit-time units
};

struct PathOutcome {
    double time = 0.0;  // exit time in the Laplace(E) = -1 normalisation (clock / 2)
    bool censored = false;
};

PathOutcome radial_path(const RadialModel& model, double start, const StepConfig& cfg, std::uint64_t path);

/// Product of a radial base ball and the height interval (-half_height, half_height).
PathOutcome slab_path(const RadialModel& base, double half_height, double rho0, double h0,
                      const StepConfig& cfg, std::uint64_t path);

using PathKernel = std::function<PathOutcome(std::uint64_t)>;

void run_serial(const PathKernel& kernel, std::span<PathOutcome> out);

/// threads <= 0 uses the OpenMP default.
void run_parallel(const PathKernel& kernel, std::span<PathOutcome> out, int threads);

}  // namespace exitgeo::kernels
