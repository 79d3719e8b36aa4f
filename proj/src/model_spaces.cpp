#include "exitgeo/model_spaces.hpp"

#include "exitgeo/errors.hpp"
#include "exitgeo/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/core.h>

namespace exitgeo {

namespace {

// Below this value of |b| t^2 the closed forms lose digits to cancellation and
// the truncated Taylor series is exact to double precision.
constexpr double kSeriesThreshold = 1e-8;

void check_radius(Curvature b, double t, const char* op, bool closed = false) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError(fmt::format("{}: radius must be finite and >= 0 (got {})", op, t));
    }
    const double limit = model::radius_limit(b);
    if (b.b > 0.0 && (t > limit || (t == limit && !closed))) {
        throw DomainError(fmt::format("{}: radius {} outside [0, pi/(2 sqrt(b))) = [0, {}) for b = {}",
                                      op, t, model::radius_limit(b), b.b));
    }
}

void check_dimension(int m, const char* op) {
    if (m < 1) throw DomainError(fmt::format("{}: dimension must be >= 1 (got {})", op, m));
}

}  // namespace

namespace model {

double radius_limit(Curvature b) {
    if (b.b > 0.0) return std::numbers::pi / (2.0 * std::sqrt(b.b));
    return std::numeric_limits<double>::infinity();
}

double s_b(Curvature b, double t) {
    check_radius(b, t, "s_b");
    const double x = b.b * t * t;
    if (std::abs(x) < kSeriesThreshold) return t * (1.0 - x / 6.0 + x * x / 120.0);
    if (b.b > 0.0) {
        const double k = std::sqrt(b.b);
        return std::sin(k * t) / k;
    }
    const double k = std::sqrt(-b.b);
    return std::sinh(k * t) / k;
}

double c_b(Curvature b, double t) {
    check_radius(b, t, "c_b");
    const double x = b.b * t * t;
    if (std::abs(x) < kSeriesThreshold) return 1.0 - x / 2.0 + x * x / 24.0;
    if (b.b > 0.0) return std::cos(std::sqrt(b.b) * t);
    return std::cosh(std::sqrt(-b.b) * t);
}

double f_b(Curvature b, double t) {
    // F_b stays bounded at the cap, so the endpoint itself is admitted.
    check_radius(b, t, "f_b", /*closed=*/true);
    const double x = b.b * t * t;
    if (std::abs(x) < kSeriesThreshold) return 0.5 * t * t * (1.0 - x / 12.0 + x * x / 360.0);
    if (b.b > 0.0) return (1.0 - std::cos(std::sqrt(b.b) * t)) / b.b;
    return (1.0 - std::cosh(std::sqrt(-b.b) * t)) / b.b;
}

double cot_b(Curvature b, double t) {
    if (t == 0.0) throw DomainError("cot_b: C_b/S_b has a pole at t = 0");
    return c_b(b, t) / s_b(b, t);
}

double unit_sphere_area(int k) {
    if (k < 0) throw DomainError(fmt::format("unit_sphere_area: k must be >= 0 (got {})", k));
    // 2 pi^{(k+1)/2} / Gamma((k+1)/2), by the recurrence omega_k = 2 pi omega_{k-2} / (k - 1).
    double omega = (k % 2 == 0) ? 2.0 : 2.0 * std::numbers::pi;
    for (int j = (k % 2 == 0) ? 2 : 3; j <= k; j += 2) omega *= 2.0 * std::numbers::pi / (j - 1);
    return omega;
}

double sphere_volume(int m, Curvature b, double r) {
    check_dimension(m, "sphere_volume");
    return unit_sphere_area(m - 1) * std::pow(s_b(b, r), m - 1);
}

double ball_volume(int m, Curvature b, double r) {
    check_dimension(m, "ball_volume");
    check_radius(b, r, "ball_volume");
    return quad::integral([&](double t) { return sphere_volume(m, b, t); }, 0.0, r,
                          {.abs = 1e-10, .rel = 1e-10});
}

double iso_quotient(int m, Curvature b, double r) {
    if (!(r > 0.0)) throw DomainError(fmt::format("iso_quotient: radius must be > 0 (got {})", r));
    return sphere_volume(m, b, r) / ball_volume(m, b, r);
}

double sphere_mean_curvature_bound(int m, Curvature b, double r) {
    check_dimension(m, "sphere_mean_curvature_bound");
    if (!(r > 0.0)) {
        throw DomainError(fmt::format("sphere_mean_curvature_bound: radius must be > 0 (got {})", r));
    }
    return m * cot_b(b, r);
}

}  // namespace model

ModelSpace::ModelSpace(int dimension, Curvature curvature) : m_(dimension), b_(curvature) {
    check_dimension(dimension, "ModelSpace");
    if (!std::isfinite(curvature.b)) throw DomainError("ModelSpace: curvature must be finite");
}

double ModelSpace::radius_limit() const { return model::radius_limit(b_); }
double ModelSpace::sphere_volume(double r) const { return model::sphere_volume(m_, b_, r); }
double ModelSpace::ball_volume(double r) const { return model::ball_volume(m_, b_, r); }
double ModelSpace::iso_quotient(double r) const { return model::iso_quotient(m_, b_, r); }
double ModelSpace::mean_curvature_bound(double r) const {
    return model::sphere_mean_curvature_bound(m_, b_, r);
}

}  // namespace exitgeo
