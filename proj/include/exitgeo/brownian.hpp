#pragma once

#include "exitgeo/model_spaces.hpp"
#include "exitgeo/warping_profile.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace exitgeo {

enum class Scheme { euler_maruyama };

/// Monte Carlo campaign parameters.
///
/// Times (t_max, and everything in SimStats) are in the normalisation of the
/// mean exit time E with Laplace(E) = -1. Standard Brownian motion has
/// generator Laplace/2, so its clock runs twice as fast: E = E[clock] / 2.
struct SimConfig {
    std::int64_t paths = 100000;
    double dt = 1e-4;
    std::uint64_t seed = 42;
    double t_max = 0.0;  ///< censoring horizon; 0 selects 50x the predicted mean
    Scheme scheme = Scheme::euler_maruyama;
    int threads = 0;     ///< 0 uses every available worker (capped by EXITGEO_THREADS)

    void validate() const;
};

struct SimStats {
    double mean = 0.0;
    double std_error = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::int64_t n_paths = 0;
    std::int64_t n_censored = 0;
    double wall_time = 0.0;  ///< seconds; excluded from any deterministic output

    [[nodiscard]] bool conclusive() const { return n_censored == 0; }
};

/// Mean, standard error and 95% interval of per-path exit times. The sums are
/// pairwise over the fixed path order, so the result does not depend on how
/// the paths were computed.
SimStats summarize(std::span<const double> times, std::int64_t censored);

/// Worker count after applying the EXITGEO_THREADS cap.
int resolve_threads(int requested);

namespace brownian {

/// Exit time of B(r) for Brownian motion started at radius `start`, simulated
/// through dρ = (n-1)/2 (f'/f)(ρ) dt + dW.
SimStats radial_exit_sim(const WarpingProfile& p, double start, double r, const SimConfig& cfg);

struct SlabStart {
    double rho = 0.0;
    double h = 0.0;
};

/// Exit time of B^{m-1}_b(R) x (-L, L) in M^{m-1}(b) x R: independent radial
/// and height motions, stopped at the first exit of either.
SimStats slab_exit_sim(int m, Curvature b, double R, double L, SlabStart start, const SimConfig& cfg);

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

struct ComparisonResult {
    Verdict verdict = Verdict::inconclusive;
    SimStats stats;
    double bound = 0.0;
    double z = 0.0;  ///< (mean - bound) / stderr; negative when below the bound
    bool rerun = false;
};

/// One-sided Monte Carlo check that the slab's mean exit time does not exceed
/// the model exit time of the base ball.
///
/// PASS when mean - 3 stderr <= bound. A violation counts as FAIL only with
/// z > 5, and only after a confirming re-run with 4x the paths; anything in
/// between, or any censored path, is INCONCLUSIVE. bound_scale multiplies the
/// comparison value (harness self-tests only).
ComparisonResult verify_exit_comparison(int m, Curvature b, double R, double L, SlabStart start,
                                        const SimConfig& cfg, double bound_scale = 1.0);

}  // namespace brownian
}  // namespace exitgeo
