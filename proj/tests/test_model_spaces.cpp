#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "exitgeo/errors.hpp"
#include "exitgeo/model_spaces.hpp"

#include <cmath>
#include <numbers>

using namespace exitgeo;
using namespace exitgeo::model;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
const Curvature flat{0.0};
const Curvature hyp{-1.0};
const Curvature sph{1.0};
}  // namespace

TEST_CASE("s_b, c_b, f_b against power-series oracles") {
    CHECK(s_b(flat, 2.5) == 2.5);
    CHECK(s_b(hyp, 1.0) == Approx(oracle::sinh(1.0)).epsilon(1e-15));
    CHECK(s_b(sph, pi / 4) == Approx(oracle::sin(pi / 4)).epsilon(1e-15));

    CHECK(c_b(flat, 7.0) == 1.0);
    CHECK(c_b(hyp, 1.0) == Approx(oracle::cosh(1.0)).epsilon(1e-15));
    CHECK(c_b(sph, 0.0) == 1.0);

    CHECK(f_b(flat, 2.0) == 2.0);
    CHECK(f_b(hyp, 1.0) == Approx(oracle::cosh(1.0) - 1.0).epsilon(1e-14));
    CHECK(f_b(sph, pi / 2) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("domain errors beyond the hemisphere radius and for negative radii") {
    CHECK_THROWS_AS(s_b(sph, pi / 2), DomainError);
    CHECK_THROWS_AS(c_b(sph, 2.0), DomainError);
    CHECK_THROWS_AS(f_b(sph, 1.6), DomainError);
    CHECK_THROWS_AS(s_b(hyp, -0.1), DomainError);
    CHECK_THROWS_AS(sphere_mean_curvature_bound(2, hyp, 0.0), DomainError);
    CHECK_THROWS_AS(iso_quotient(2, flat, 0.0), DomainError);
    CHECK_THROWS_AS(ModelSpace(0, flat), DomainError);
    CHECK(radius_limit(Curvature{4.0}) == Approx(pi / 4));
    CHECK(std::isinf(radius_limit(hyp)));
}

TEST_CASE("sphere and ball volumes") {
    CHECK(sphere_volume(2, flat, 1.0) == Approx(2 * pi));
    CHECK(sphere_volume(1, hyp, 3.7) == 2.0);
    CHECK(sphere_volume(3, hyp, 1.0) == Approx(4 * pi * std::pow(oracle::sinh(1.0), 2)).epsilon(1e-14));
    CHECK(unit_sphere_area(2) == Approx(4 * pi));
    CHECK(unit_sphere_area(3) == Approx(2 * pi * pi));

    CHECK(ball_volume(2, flat, 1.0) == Approx(pi).epsilon(1e-12));
    CHECK(ball_volume(2, hyp, 1.0) == Approx(2 * pi * (oracle::cosh(1.0) - 1.0)).epsilon(1e-12));
    CHECK(ball_volume(1, hyp, 2.5) == Approx(5.0).epsilon(1e-12));
    // Closed forms for m = 3 as cross-checks of the quadrature path.
    CHECK(ball_volume(3, flat, 2.0) == Approx(4.0 / 3.0 * pi * 8.0).epsilon(1e-12));
    CHECK(ball_volume(3, hyp, 1.0) == Approx(pi * (std::sinh(2.0) - 2.0)).epsilon(1e-12));
    CHECK(ball_volume(3, sph, 1.0) == Approx(pi * (2.0 - std::sin(2.0))).epsilon(1e-12));
    // Brute-force Simpson for a higher dimension.
    const double simpson = oracle::simpson([](double t) { return unit_sphere_area(5) * std::pow(oracle::sinh(t), 5); }, 0, 1.5);
    CHECK(ball_volume(6, hyp, 1.5) == Approx(simpson).epsilon(1e-10));
}

TEST_CASE("isoperimetric quotients and mean-curvature bound") {
    for (int m = 1; m <= 6; ++m) {
        for (double R : {0.5, 1.0, 3.0}) CHECK(iso_quotient(m, flat, R) == Approx(m / R).epsilon(1e-12));
    }
    CHECK(iso_quotient(2, hyp, 1.0) == Approx(oracle::kCothHalf).epsilon(1e-12));
    CHECK(iso_quotient(1, hyp, 4.0) == Approx(0.25).epsilon(1e-12));
    CHECK(sphere_mean_curvature_bound(3, flat, 2.0) == Approx(1.5));
    CHECK(sphere_mean_curvature_bound(2, sph, pi / 4) == Approx(2.0));
    CHECK(sphere_mean_curvature_bound(2, hyp, 1.0) ==
          Approx(2 * oracle::cosh(1.0) / oracle::sinh(1.0)).epsilon(1e-14));
}

TEST_CASE("Pythagorean identity c_b^2 + b s_b^2 = 1") {
    for (double b : {-4.0, -1.0, -1e-9, 0.0, 1e-9, 0.5, 2.0}) {
        const double limit = std::min(radius_limit(Curvature{b}), 4.0);
        for (int i = 0; i < 50; ++i) {
            const double t = limit * i / 50.0;
            const double s = s_b(Curvature{b}, t);
            const double c = c_b(Curvature{b}, t);
            CHECK(std::abs(c * c + b * s * s - 1.0) < 1e-12 * std::max(1.0, c * c));
        }
    }
}

TEST_CASE("F_b satisfies F'' = (C_b/S_b) F'") {
    constexpr double h = 1e-3;
    for (double b : {-2.0, -1.0, 0.0, 0.5}) {
        const Curvature k{b};
        const double t_end = std::min(3.0, radius_limit(k) - 0.05);
        for (double t = 0.1; t <= t_end; t += 0.1) {
            const double d1 = (f_b(k, t + h) - f_b(k, t - h)) / (2 * h);
            const double d2 = (f_b(k, t + h) - 2 * f_b(k, t) + f_b(k, t - h)) / (h * h);
            CHECK(std::abs(d2 - cot_b(k, t) * d1) < 1e-6 * std::max(1.0, std::abs(d2)));
        }
    }
}

TEST_CASE("Hessian comparison: C_c/S_c >= C_b/S_b for c <= b") {
    const double bs[] = {-3.0, -1.0, -0.2, 0.0, 0.3, 1.0};
    for (double lo : bs) {
        for (double hi : bs) {
            if (lo > hi) continue;
            const double limit = std::min(radius_limit(Curvature{hi}), 5.0);
            for (int i = 1; i < 40; ++i) {
                const double t = limit * i / 40.0;
                CHECK(cot_b(Curvature{lo}, t) >= cot_b(Curvature{hi}, t) - 1e-14);
            }
        }
    }
}

TEST_CASE("continuity in b at the flat model") {
    for (double eps : {1e-8, -1e-8}) {
        for (double t : {0.3, 1.0, 2.5}) {
            CHECK(std::abs(s_b(Curvature{eps}, t) - s_b(flat, t)) < 1e-6);
            CHECK(std::abs(ball_volume(3, Curvature{eps}, t) - ball_volume(3, flat, t)) < 1e-6);
            CHECK(std::abs(iso_quotient(3, Curvature{eps}, t) - iso_quotient(3, flat, t)) < 1e-6);
        }
    }
    // The series branch and the closed form meet smoothly at the switch.
    const double t = 1.0;
    for (double b : {-0.99e-8, -1.01e-8, 0.99e-8, 1.01e-8}) {
        CHECK(s_b(Curvature{b}, t) == Approx(t - b * t * t * t / 6.0).epsilon(1e-15));
    }
}

TEST_CASE("iso quotient decreases in r for b <= 0") {
    for (double b : {0.0, -0.5, -1.0, -3.0}) {
        for (int m : {2, 3, 5}) {
            double prev = iso_quotient(m, Curvature{b}, 0.05);
            for (double r = 0.1; r <= 6.0; r += 0.1) {
                const double q = iso_quotient(m, Curvature{b}, r);
                CHECK(q < prev);
                prev = q;
            }
        }
    }
}

TEST_CASE("ModelSpace forwards to the free functions") {
    const ModelSpace h3(3, hyp);
    CHECK(h3.dimension() == 3);
    CHECK(h3.iso_quotient(1.0) == Approx(oracle::kIsoHyperbolic3).epsilon(1e-12));
    CHECK(h3.mean_curvature_bound(1.0) == Approx(3.0 / std::tanh(1.0)));
}
