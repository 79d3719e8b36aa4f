#include "exitgeo/verify.hpp"

#include "exitgeo/bounds.hpp"
#include "exitgeo/csv.hpp"
#include "exitgeo/errors.hpp"
#include "exitgeo/roots.hpp"
#include "exitgeo/warped_manifold.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

namespace exitgeo::verify {

namespace {

using brownian::Verdict;

Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

std::vector<Check> dynkin_suite() {
    struct Case {
        WarpingProfile profile;
        double r;
    };
    const std::vector<Case> cases = {
        {WarpingProfile::euclidean(2), 1.0},
        {WarpingProfile::euclidean(5), 3.0},
        {WarpingProfile::hyperbolic(3), 2.0},
        {WarpingProfile::sphere(3), 1.5},
        {WarpingProfile::cubic(3), 1.0},
    };
    constexpr double tolerance = 1e-4;
    std::vector<Check> out;
    for (const auto& c : cases) {
        std::vector<double> grid;
        for (int k = 1; k < 10; ++k) grid.push_back(c.r * k / 10.0);
        const double residual = warped::verify_dynkin(c.profile, c.r, grid);
        out.push_back({"dynkin", fmt::format("{} n={} r={}", c.profile.name(), c.profile.dimension(), c.r),
                       verdict_of(residual < tolerance), residual, 0.0, tolerance, "max |Laplace(E) + 1|"});
    }
    return out;
}

std::vector<Check> exit_comparison_suite(const SimConfig& cfg) {
    struct Case {
        int m;
        double b;
        double R;
        double L;
    };
    const std::vector<Case> cases = {{3, -1.0, 1.0, 0.25}, {3, -1.0, 1.0, 1.0}, {3, -1.0, 1.0, 50.0}, {3, 0.0, 1.0, 0.5}};
    std::vector<Check> out;
    for (const auto& c : cases) {
        const auto res = brownian::verify_exit_comparison(c.m, Curvature{c.b}, c.R, c.L, {}, cfg);
        const auto& s = res.stats;
        const std::string detail = fmt::format("z={} stderr={} censored={} rerun={}", csv::real(res.z),
                                               csv::real(s.std_error), s.n_censored, res.rerun);
        out.push_back({"exit-comparison", fmt::format("slab m={} b={} R={} L={} mean <= bound", c.m, c.b, c.R, c.L),
                       res.verdict, s.mean, res.bound, 3.0 * s.std_error, detail});
        if (c.L >= 50.0) {
            // With a tall slab the interval exit almost never wins, so the
            // comparison becomes an equality.
            const bool close = std::abs(s.mean - res.bound) < 3.0 * s.std_error;
            out.push_back({"exit-comparison", fmt::format("slab m={} b={} R={} L={} mean ~ bound", c.m, c.b, c.R, c.L),
                           s.conclusive() ? verdict_of(close) : Verdict::inconclusive, s.mean, res.bound,
                           3.0 * s.std_error, detail});
        }
    }
    return out;
}

std::vector<Check> eigen_suite() {
    std::vector<Check> out;
    const auto j0 = roots::brent([](double x) { return std::cyl_bessel_j(0.0, x); }, 2.0, 3.0, 1e-14);
    const double j0_sq = j0.lo * j0.lo;
    const auto disk = WarpingProfile::euclidean(2);
    for (const double r : {0.5, 1.0, 2.0}) {
        const auto report = warped::eigen_bounds(disk, r);
        const double lambda1 = j0_sq / (r * r);
        out.push_back({"eigen", fmt::format("disk r={} exit bound <= j0^2/r^2", r),
                       verdict_of(report.exit_bound <= lambda1), report.exit_bound, lambda1, 0.0, ""});
        out.push_back({"eigen", fmt::format("disk r={} Barroso-Bessa bound <= j0^2/r^2", r),
                       verdict_of(report.barroso_bessa_bound <= lambda1), report.barroso_bessa_bound, lambda1, 0.0,
                       ""});
    }
    const double h2 = warped::eigen_bound_exit(WarpingProfile::hyperbolic(2), 30.0);
    out.push_back({"eigen", "hyperbolic plane r=30 exit bound ~ 1/4", verdict_of(std::abs(h2 - 0.25) <= 1e-3), h2,
                   0.25, 1e-3, ""});
    return out;
}

std::vector<Check> sharpness_suite() {
    std::vector<Check> out;
    constexpr double tol = 1e-12;
    for (const int m : {2, 3, 4}) {
        for (const double b : {0.0, -1.0}) {
            for (const int i : {1, 10, 100, 1000}) {
                const double gap = bounds::slab_family_ratio(m, Curvature{b}, 1.0, i) -
                                   bounds::product_lower_bound(m, Curvature{b}, 1.0).value;
                const double err = std::abs(gap - 1.0 / i);
                out.push_back({"sharpness", fmt::format("slab m={} b={} R=1 i={} ratio - product = 1/i", m, b, i),
                               verdict_of(err <= tol), gap, 1.0 / i, tol, ""});
            }
        }
    }
    const double r3 = bounds::crossover_radius(3);
    out.push_back({"sharpness", "crossover radius m=3", verdict_of(std::abs(r3 - 3.0) <= 1e-9), r3, 3.0, 1e-9, ""});
    for (int m = 4; m <= 8; ++m) {
        const double rm = bounds::crossover_radius(m);
        for (const double scale : {1.0, 1.5, 2.0}) {
            const double R = rm * scale;
            const double rough = bounds::rough_estimate(m, R);
            const double quotient = model::iso_quotient(m - 1, Curvature{-1.0}, R);
            const double mp = m / R;
            out.push_back({"sharpness", fmt::format("m={} R={}*R_m rough >= m/R", m, scale), verdict_of(rough >= mp),
                           rough, mp, 0.0, fmt::format("R_m={}", csv::real(rm))});
            out.push_back({"sharpness", fmt::format("m={} R={}*R_m quotient >= m/R", m, scale),
                           verdict_of(quotient >= mp), quotient, mp, 0.0, ""});
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"all", "dynkin", "exit-comparison", "eigen", "sharpness"};
    return names;
}

std::vector<Check> run(std::string_view suite, const SimConfig& cfg) {
    if (suite == "dynkin") return dynkin_suite();
    if (suite == "exit-comparison") return exit_comparison_suite(cfg);
    if (suite == "eigen") return eigen_suite();
    if (suite == "sharpness") return sharpness_suite();
    if (suite == "all") {
        std::vector<Check> out;
        for (auto part : {dynkin_suite(), eigen_suite(), sharpness_suite(), exit_comparison_suite(cfg)}) {
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw DomainError(fmt::format("unknown verify suite '{}'", suite));
}

bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Verdict::pass; });
}

std::vector<std::string> csv_header() {
    return {"suite", "check", "status", "measured", "reference", "tolerance", "detail"};
}

std::vector<std::string> csv_fields(const Check& c) {
    return {c.suite,
            c.name,
            brownian::to_string(c.status),
            csv::real(c.measured),
            csv::real(c.reference),
            csv::real(c.tolerance),
            c.detail};
}

}  // namespace exitgeo::verify
