#include "exitgeo/brownian.hpp"

#include "exitgeo/bounds.hpp"
#include "exitgeo/brownian_kernels.hpp"
#include "exitgeo/errors.hpp"
#include "exitgeo/warped_manifold.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include <fmt/core.h>

namespace exitgeo {

namespace {

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 16) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

kernels::StepConfig step_config(const SimConfig& cfg, double predicted_mean) {
    const double t_max = cfg.t_max > 0.0 ? cfg.t_max : std::max(50.0 * predicted_mean, 100.0 * cfg.dt);
    if (!(t_max >= 100.0 * cfg.dt)) {
        throw DomainError(fmt::format("SimConfig: t_max = {} must be >= 100 dt = {}", t_max, 100.0 * cfg.dt));
    }
    if (2.0 * t_max / cfg.dt > static_cast<double>(std::numeric_limits<std::uint32_t>::max())) {
        throw DomainError(fmt::format("SimConfig: t_max / dt = {} exceeds the step counter range", t_max / cfg.dt));
    }
    return {cfg.dt, cfg.seed, t_max};
}

SimStats run(const kernels::PathKernel& kernel, const SimConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    std::vector<kernels::PathOutcome> outcomes(static_cast<std::size_t>(cfg.paths));
    kernels::run_parallel(kernel, outcomes, resolve_threads(cfg.threads));

    std::vector<double> times(outcomes.size());
    std::int64_t censored = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        times[i] = outcomes[i].time;
        censored += outcomes[i].censored ? 1 : 0;
    }
    SimStats stats = summarize(times, censored);
    stats.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return stats;
}

SimStats degenerate(std::int64_t paths) {
    SimStats s;
    s.n_paths = paths;
    return s;
}

kernels::RadialModel radial_model(const WarpingProfile& p, double radius) {
    kernels::RadialModel model{.dim = p.dimension(), .correction = {}, .radius = radius};
    if (const auto& b = p.model_curvature()) {
        if (b->b != 0.0) model.correction = [b = *b](double t) { return model_drift_correction(b, t); };
    } else {
        model.correction = [p](double t) { return p.drift_correction(t); };
    }
    return model;
}

}  // namespace

void SimConfig::validate() const {
    if (paths < 1) throw DomainError(fmt::format("SimConfig: paths must be >= 1 (got {})", paths));
    if (!(dt > 0.0) || dt > 1e-2) throw DomainError(fmt::format("SimConfig: dt must lie in (0, 1e-2] (got {})", dt));
    if (t_max != 0.0 && !(t_max >= 100.0 * dt)) {
        throw DomainError(fmt::format("SimConfig: t_max = {} must be >= 100 dt", t_max));
    }
}

SimStats summarize(std::span<const double> times, std::int64_t censored) {
    SimStats s;
    s.n_paths = static_cast<std::int64_t>(times.size());
    s.n_censored = censored;
    if (times.empty()) return s;
    const double n = static_cast<double>(times.size());
    s.mean = pairwise_sum(times) / n;
    if (times.size() > 1) {
        std::vector<double> sq(times.size());
        std::transform(times.begin(), times.end(), sq.begin(), [m = s.mean](double t) { return (t - m) * (t - m); });
        s.std_error = std::sqrt(pairwise_sum(sq) / (n - 1.0)) / std::sqrt(n);
    }
    s.ci_lo = s.mean - 1.96 * s.std_error;
    s.ci_hi = s.mean + 1.96 * s.std_error;
    return s;
}

int resolve_threads(int requested) {
    int threads = requested;
    if (const char* env = std::getenv("EXITGEO_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || cap < 1) {
            throw DomainError(fmt::format("EXITGEO_THREADS must be a positive integer (got '{}')", env));
        }
        threads = threads > 0 ? std::min<int>(threads, static_cast<int>(cap)) : static_cast<int>(cap);
    }
    return threads;
}

namespace brownian {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

SimStats radial_exit_sim(const WarpingProfile& p, double start, double r, const SimConfig& cfg) {
    cfg.validate();
    if (!(start >= 0.0) || !(start <= r) || !(r < p.r_max())) {
        throw DomainError(fmt::format("radial_exit_sim: need 0 <= start <= r < r_max (got start={}, r={}, r_max={})",
                                      start, r, p.r_max()));
    }
    if (start == r) return degenerate(cfg.paths);
    const auto steps = step_config(cfg, warped::exit_time(p, r, start));
    const auto model = radial_model(p, r);
    return run([&](std::uint64_t i) { return kernels::radial_path(model, start, steps, i); }, cfg);
}

SimStats slab_exit_sim(int m, Curvature b, double R, double L, SlabStart start, const SimConfig& cfg) {
    cfg.validate();
    if (m < 2 || b.b > 0.0) {
        throw DomainError(fmt::format("slab_exit_sim: need m >= 2 and b <= 0 (got m={}, b={})", m, b.b));
    }
    if (!(R > 0.0) || !(L > 0.0) || !(start.rho >= 0.0) || !(start.rho < R) || !(std::abs(start.h) < L)) {
        throw DomainError(fmt::format("slab_exit_sim: need 0 <= rho < R and |h| < L (got rho={}, R={}, h={}, L={})",
                                      start.rho, R, start.h, L));
    }
    const double predicted = std::min(bounds::exit_time_upper(m, b, R, start.rho), 0.5 * (L * L - start.h * start.h));
    const auto steps = step_config(cfg, predicted);

    kernels::RadialModel base{.dim = m - 1, .correction = {}, .radius = R};
    if (m - 1 >= 2 && b.b != 0.0) base.correction = radial_model(WarpingProfile::model(m - 1, b), R).correction;
    return run([&](std::uint64_t i) { return kernels::slab_path(base, L, start.rho, start.h, steps, i); }, cfg);
}

ComparisonResult verify_exit_comparison(int m, Curvature b, double R, double L, SlabStart start,
                                        const SimConfig& cfg, double bound_scale) {
    ComparisonResult result;
    result.bound = bound_scale * bounds::exit_time_upper(m, b, R, start.rho);

    const auto judge = [&](const SimStats& stats) {
        result.stats = stats;
        result.z = stats.std_error > 0.0 ? (stats.mean - result.bound) / stats.std_error
                                         : (stats.mean > result.bound ? std::numeric_limits<double>::infinity() : 0.0);
        if (!stats.conclusive()) return Verdict::inconclusive;
        if (stats.mean - 3.0 * stats.std_error <= result.bound) return Verdict::pass;
        return result.z > 5.0 ? Verdict::fail : Verdict::inconclusive;
    };

    result.verdict = judge(slab_exit_sim(m, b, R, L, start, cfg));
    if (result.verdict == Verdict::fail) {
        SimConfig bigger = cfg;
        bigger.paths = 4 * cfg.paths;
        result.rerun = true;
        result.verdict = judge(slab_exit_sim(m, b, R, L, start, bigger));
    }
    return result;
}

}  // namespace brownian
}  // namespace exitgeo
