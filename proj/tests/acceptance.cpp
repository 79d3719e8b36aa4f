// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "oracles.hpp"
#include "process.hpp"

#include "exitgeo/bounds.hpp"
#include "exitgeo/brownian.hpp"
#include "exitgeo/model_spaces.hpp"
#include "exitgeo/roots.hpp"
#include "exitgeo/warped_manifold.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <string>
#include <vector>

using namespace exitgeo;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double time_limit, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, fmt::format("exception: {}", e.what())};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit > 0.0 && secs > time_limit) {
        o.pass = false;
        o.detail += fmt::format("; over the {} s budget", time_limit);
    }
    failures += o.pass ? 0 : 1;
    fmt::print("criterion {:>2}: {}  {}  [{}] ({:.2f} s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail, secs);
    std::fflush(stdout);
}

std::vector<double> interior_grid(double r, int count) {
    std::vector<double> g;
    for (int i = 1; i <= count; ++i) g.push_back(r * i / (count + 1));
    return g;
}

}  // namespace

int main() {
    criterion(1, "exit time matches (R^2 - rho^2)/(2m) in flat space", 1.0, [] {
        double worst = 0.0;
        for (int m : {2, 3, 5}) {
            const auto p = WarpingProfile::euclidean(m);
            for (double R : {0.5, 1.0, 3.0}) {
                for (double frac : {0.0, 0.5, 0.9}) {
                    const double rho = frac * R;
                    worst = std::max(worst, std::abs(warped::exit_time(p, R, rho) - oracle::euclidean_exit(m, R, rho)));
                }
            }
        }
        return Outcome{worst < 1e-8, fmt::format("max error {:.3e} < 1e-8", worst)};
    });

    criterion(2, "Dynkin residual on the shipped profiles", 5.0, [] {
        double worst = 0.0;
        const std::vector<std::pair<WarpingProfile, double>> cases{
            {WarpingProfile::euclidean(3), 1.0},
            {WarpingProfile::hyperbolic(3), 2.0},
            {WarpingProfile::sphere(3), 1.5},
            {WarpingProfile::cubic(3), 1.0},
        };
        for (const auto& [p, r] : cases) {
            const auto grid = interior_grid(r, 49);
            worst = std::max(worst, warped::verify_dynkin(p, r, grid));
        }
        return Outcome{worst < 1e-4, fmt::format("max residual {:.3e} < 1e-4", worst)};
    });

    criterion(3, "finite-difference slope of E equals -V/S", 0.0, [] {
        double worst = 0.0;
        const double h = 1e-5;
        for (const auto& [p, r] : std::vector<std::pair<WarpingProfile, double>>{
                 {WarpingProfile::euclidean(2), 1.0},
                 {WarpingProfile::hyperbolic(2), 1.0},
                 {WarpingProfile::hyperbolic(4), 3.0},
                 {WarpingProfile::sphere(3), 1.5},
                 {WarpingProfile::cubic(3), 1.0}}) {
            const ExitTimeProfile E(p, r, 1e-13);
            for (double rho : interior_grid(r, 19)) {
                const double slope = (E(rho + h) - E(rho - h)) / (2 * h);
                const double palmer = -warped::ball_volume_w(p, rho) / warped::surface_volume(p, rho);
                worst = std::max(worst, std::abs(slope - palmer));
            }
        }
        return Outcome{worst < 1e-5, fmt::format("max |slope + V/S| {:.3e} < 1e-5", worst)};
    });

    criterion(4, "slab family ratio minus product bound equals 1/i", 0.0, [] {
        double worst = 0.0;
        for (int i : {1, 10, 100, 1000}) {
            for (int m : {2, 3, 4}) {
                for (double b : {0.0, -1.0}) {
                    const double gap = bounds::slab_family_ratio(m, Curvature{b}, 1.0, i) -
                                       bounds::product_lower_bound(m, Curvature{b}, 1.0).value;
                    worst = std::max(worst, std::abs(gap - 1.0 / i));
                }
            }
        }
        return Outcome{worst <= 1e-12, fmt::format("max deviation {:.3e} <= 1e-12", worst)};
    });

    criterion(5, "crossover radius and the rough-estimate chain", 0.0, [] {
        const double r3 = bounds::crossover_radius(3);
        bool chain = true;
        for (int m = 4; m <= 8; ++m) {
            const double rm = bounds::crossover_radius(m);
            for (double k : {1.0, 1.5, 2.0}) {
                const double R = rm * k;
                chain = chain && bounds::rough_estimate(m, R) >= m / R &&
                        model::iso_quotient(m - 1, Curvature{-1.0}, R) >= m / R;
            }
        }
        const bool ok = std::abs(r3 - 3.0) <= 1e-9 && chain;
        return Outcome{ok, fmt::format("R_3 = {:.15g}, chain {}", r3, chain ? "holds" : "broken")};
    });

    criterion(6, "eigenvalue bounds below j0^2/r^2; hyperbolic plane near 1/4", 0.0, [] {
        const double j0sq = oracle::bessel_j0_first_zero() * oracle::bessel_j0_first_zero();
        bool below = true;
        for (double r : {0.5, 1.0, 2.0}) {
            const auto rep = warped::eigen_bounds(WarpingProfile::euclidean(2), r);
            below = below && rep.exit_bound <= j0sq / (r * r) && rep.barroso_bessa_bound <= j0sq / (r * r);
        }
        const double h2 = warped::eigen_bound_exit(WarpingProfile::hyperbolic(2), 30.0);
        const bool ok = below && std::abs(j0sq - 5.7832) < 1e-4 && std::abs(h2 - 0.25) <= 1e-3;
        return Outcome{ok, fmt::format("j0^2 = {:.10f}, disks {}, H^2 bound at r=30 = {:.6f}", j0sq,
                                       below ? "below" : "above", h2)};
    });

    criterion(7, "Monte Carlo radial exit times match quadrature", 120.0, [] {
        SimConfig cfg;  // 1e5 paths, dt = 1e-4
        bool ok = true;
        std::string detail;
        for (const auto& [name, p, oracle_value] :
             {std::tuple{"flat", WarpingProfile::euclidean(2), 0.25},
              std::tuple{"sinh", WarpingProfile::hyperbolic(2), oracle::kTwoLnCoshHalf}}) {
            const auto s = brownian::radial_exit_sim(p, 0.0, 1.0, cfg);
            const double z = (s.mean - oracle_value) / s.std_error;
            ok = ok && std::abs(z) < 3.0 && s.std_error / s.mean < 0.01 && s.conclusive();
            detail += fmt::format("{}{}: mean {:.6f} oracle {:.6f} z {:+.2f} rel.se {:.4f}", detail.empty() ? "" : "; ",
                                  name, s.mean, oracle_value, z, s.std_error / s.mean);
        }
        return Outcome{ok, detail};
    });

    criterion(8, "slab exit time stays below the base-ball exit time", 0.0, [] {
        const SimConfig cfg;
        bool ok = true;
        std::string detail;
        struct Case {
            double b, L;
        };
        for (const auto& c : {Case{-1.0, 0.25}, Case{-1.0, 1.0}, Case{-1.0, 50.0}, Case{0.0, 0.5}}) {
            const auto res = brownian::verify_exit_comparison(3, Curvature{c.b}, 1.0, c.L, {}, cfg);
            ok = ok && res.verdict == brownian::Verdict::pass;
            detail += fmt::format("{}b={} L={}: {} z {:+.2f}", detail.empty() ? "" : "; ", c.b, c.L,
                                  brownian::to_string(res.verdict), res.z);
            if (c.L == 50.0) {
                const double z = (res.stats.mean - 0.240227) / res.stats.std_error;
                ok = ok && std::abs(z) < 3.0;
                detail += fmt::format(" (mean {:.6f} vs 0.240227, z {:+.2f})", res.stats.mean, z);
            }
        }
        return Outcome{ok, detail};
    });

    criterion(9, "totally geodesic inputs respect the tamed upper bound", 0.0, [] {
        bool ok = true;
        double margin = 1e300;
        for (int m : {2, 3}) {
            for (double R : {2.0, 4.0, 8.0}) {
                const TamedParams p{.b1 = Curvature{-1.0}, .b2 = Curvature{-1.0}, .c = 0.5, .r0 = 1.0,
                                    .psi0 = 1.0, .sup_h = 0.0, .R = R};
                const double gap = bounds::tamed_upper_bound(p).value - model::iso_quotient(m, Curvature{-1.0}, R);
                ok = ok && gap >= 0.0;
                margin = std::min(margin, gap);
            }
        }
        return Outcome{ok, fmt::format("smallest margin {:.6f}", margin)};
    });

    criterion(10, "verify exit-comparison CSV is identical for 1 and 8 workers", 0.0, [] {
        const auto one = testing::run("verify exit-comparison --seed 42", "EXITGEO_THREADS=1");
        const auto eight = testing::run("verify exit-comparison --seed 42", "EXITGEO_THREADS=8");
        const bool ok = one.status == 0 && eight.status == 0 && !one.out.empty() && one.out == eight.out;
        return Outcome{ok, fmt::format("status {}/{}, {} bytes, {}", one.status, eight.status, one.out.size(),
                                       one.out == eight.out ? "identical" : "different")};
    });

    fmt::print("{} of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
