#include "exitgeo/brownian_kernels.hpp"

#include "exitgeo/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include <omp.h>

namespace exitgeo::kernels {

namespace {

using rng::PathRandom;
using rng::Stream;

// Crossing probability of a Brownian bridge (unit diffusion) between two
// points at distances a, b > 0 from a flat barrier over one step.
inline bool bridge_crossed(double a, double b, double dt, const PathRandom& rand, Stream s, std::uint32_t step) {
    const double exponent = 2.0 * a * b / dt;
    return exponent < 40.0 && rand.uniform(s, step) < std::exp(-exponent);
}

// One step of the radial process. The Euclidean part moves the point
// (rho, 0, ..., 0) by a full dim-dimensional Gaussian increment, which is
// exact for f = t and avoids the 1/rho singularity of the radial drift:
// |x + sZ|^2 = rho^2 + 2 rho s Z_0 + s^2 |Z|^2.
inline double radial_step(const RadialModel& model, const PathRandom& rand, double rho, double dt,
                          double sqrt_dt, std::uint32_t step) {
    double along = 0.0;
    double norm_sq = 0.0;
    if (model.dim == 2) {
        // Polar method: |Z|^2 = -2 ln S and Z_0 = V_1 sqrt(-2 ln S / S).
        const auto [v1, v2, sq] = rand.disk_point(Stream::radial_normal, step);
        norm_sq = -2.0 * std::log(sq);
        along = v1 * std::sqrt(norm_sq / sq);
    } else {
        for (int i = 0, block = 0; i < model.dim; i += 2, ++block) {
            const auto [z0, z1] = rand.normals(Stream::radial_normal, step, static_cast<std::uint32_t>(block));
            if (i == 0) along = z0;
            norm_sq += z0 * z0;
            if (i + 1 < model.dim) norm_sq += z1 * z1;
        }
    }
    double next = std::sqrt(std::max(0.0, rho * rho + 2.0 * rho * sqrt_dt * along + dt * norm_sq));
    if (model.correction) next += 0.5 * (model.dim - 1) * model.correction(rho) * dt;
    return std::abs(next);
}

inline std::uint64_t step_limit(const StepConfig& cfg) {
    return static_cast<std::uint64_t>(std::ceil(2.0 * cfg.t_max / cfg.dt));
}

}  // namespace

PathOutcome radial_path(const RadialModel& model, double start, const StepConfig& cfg, std::uint64_t path) {
    const PathRandom rand(cfg.seed, path);
    const double sqrt_dt = std::sqrt(cfg.dt);
    const std::uint64_t limit = step_limit(cfg);
    double rho = start;
    for (std::uint64_t k = 0; k < limit; ++k) {
        const auto step = static_cast<std::uint32_t>(k);
        const double next = radial_step(model, rand, rho, cfg.dt, sqrt_dt, step);
        if (next >= model.radius ||
            bridge_crossed(model.radius - rho, model.radius - next, cfg.dt, rand, Stream::radial_bridge, step)) {
            return {0.5 * static_cast<double>(k + 1) * cfg.dt, false};
        }
        rho = next;
    }
    return {0.5 * static_cast<double>(limit) * cfg.dt, true};
}

PathOutcome slab_path(const RadialModel& base, double half_height, double rho0, double h0,
                      const StepConfig& cfg, std::uint64_t path) {
    const PathRandom rand(cfg.seed, path);
    const double sqrt_dt = std::sqrt(cfg.dt);
    const std::uint64_t limit = step_limit(cfg);
    double rho = rho0;
    double h = h0;
    for (std::uint64_t k = 0; k < limit; ++k) {
        const auto step = static_cast<std::uint32_t>(k);
        const double rho_next = radial_step(base, rand, rho, cfg.dt, sqrt_dt, step);
        const double h_next = h + sqrt_dt * rand.normals(Stream::height_normal, step).first;

        bool exited = rho_next >= base.radius || std::abs(h_next) >= half_height;
        if (!exited) {
            exited = bridge_crossed(base.radius - rho, base.radius - rho_next, cfg.dt, rand, Stream::radial_bridge,
                                    step);
        }
        if (!exited) {
            // Both walls of the interval; the union probability is 1 - (1-p)(1-q).
            const double p_top = (2.0 * (half_height - h) * (half_height - h_next) / cfg.dt) < 40.0
                                     ? std::exp(-2.0 * (half_height - h) * (half_height - h_next) / cfg.dt)
                                     : 0.0;
            const double p_bottom = (2.0 * (half_height + h) * (half_height + h_next) / cfg.dt) < 40.0
                                        ? std::exp(-2.0 * (half_height + h) * (half_height + h_next) / cfg.dt)
                                        : 0.0;
            const double p = 1.0 - (1.0 - p_top) * (1.0 - p_bottom);
            exited = p > 0.0 && rand.uniform(Stream::height_bridge, step) < p;
        }
        if (exited) return {0.5 * static_cast<double>(k + 1) * cfg.dt, false};
        rho = rho_next;
        h = h_next;
    }
    return {0.5 * static_cast<double>(limit) * cfg.dt, true};
}

void run_serial(const PathKernel& kernel, std::span<PathOutcome> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = kernel(i);
}

void run_parallel(const PathKernel& kernel, std::span<PathOutcome> out, int threads) {
    const auto n = static_cast<std::int64_t>(out.size());
    const int workers = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = kernel(static_cast<std::uint64_t>(i));
    }
}

}  // namespace exitgeo::kernels
