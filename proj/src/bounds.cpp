#include "exitgeo/bounds.hpp"

#include "exitgeo/errors.hpp"
#include "exitgeo/roots.hpp"
#include "exitgeo/warped_manifold.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

namespace exitgeo {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

// log(e^x - 1) for x > 0 without overflow.
double log_expm1(double x) { return x > 30.0 ? x + std::log1p(-std::exp(-x)) : std::log(std::expm1(x)); }

}  // namespace

void TamedParams::validate() const {
    require(b2.b <= 0.0, fmt::format("tamed: b2 must be <= 0 (got {})", b2.b));
    require(b1.b <= b2.b, fmt::format("tamed: need b1 <= b2 (got b1={}, b2={})", b1.b, b2.b));
    require(c > 0.0 && c < 1.0, fmt::format("tamed: c must lie in (0, 1) (got {})", c));
    require(r0 > 0.0, fmt::format("tamed: r0 must be > 0 (got {})", r0));
    require(psi0 > 0.0 && psi0 <= 1.0, fmt::format("tamed: psi0 must lie in (0, 1] (got {})", psi0));
    require(sup_h >= 0.0, fmt::format("tamed: supH must be >= 0 (got {})", sup_h));
    require(R >= r0, fmt::format("tamed: need R >= r0 (got R={}, r0={})", R, r0));
}

namespace bounds {

BoundReport mp_lower_bound(int m, Curvature b, double R) {
    BoundReport report{.kind = "mp", .side = BoundSide::lower, .inputs = {{"m", m}, {"b", b.b}, {"R", R}}};
    report.value = b.b <= 0.0 ? model::iso_quotient(m, b, R) : model::sphere_mean_curvature_bound(m, b, R);
    return report;
}

BoundReport product_lower_bound(int m, Curvature b, double rK) {
    require(m >= 2, fmt::format("product bound: m must be >= 2 (got {})", m));
    require(b.b <= 0.0, fmt::format("product bound: b must be <= 0 (got {})", b.b));
    require(rK > 0.0, fmt::format("product bound: rK must be > 0 (got {})", rK));
    return {.kind = "product",
            .value = model::iso_quotient(m - 1, b, rK),
            .side = BoundSide::lower,
            .inputs = {{"m", m}, {"b", b.b}, {"rK", rK}}};
}

double slab_family_ratio(int m, Curvature b, double R, int i) {
    require(m >= 2, fmt::format("slab: m must be >= 2 (got {})", m));
    require(b.b <= 0.0, fmt::format("slab: b must be <= 0 (got {})", b.b));
    require(i >= 1, fmt::format("slab: i must be >= 1 (got {})", i));
    const double area = model::sphere_volume(m - 1, b, R);
    const double volume = model::ball_volume(m - 1, b, R);
    // Lateral side 2i * area plus the two caps, over 2i * volume.
    return (2.0 * i * area + 2.0 * volume) / (2.0 * i * volume);
}

double rough_estimate(int m, double R) {
    require(m >= 3, fmt::format("rough estimate: m must be >= 3 (got {})", m));
    require(R > 0.0, fmt::format("rough estimate: R must be > 0 (got {})", R));
    const int k = m - 2;
    return k * std::exp(k * log_expm1(R) - log_expm1(k * R));
}

double crossover_radius(int m) {
    require(m >= 3, fmt::format("crossover: m must be >= 3 (got {})", m));
    const auto gap = [m](double R) { return rough_estimate(m, R) - m / R; };
    const auto bracket = roots::brent(gap, 1e-6, 100.0, 1e-12);
    return gap(bracket.hi) >= 0.0 ? bracket.hi : bracket.lo;
}

BoundComparison compare_bounds(int m, Curvature b, double R) {
    require(b.b <= 0.0, fmt::format("compare: b must be <= 0 (got {})", b.b));
    BoundComparison out{};
    out.mp = model::iso_quotient(m, Curvature{0.0}, R);
    out.product = model::iso_quotient(m - 1, b, R);
    out.winner = out.mp >= out.product ? BoundComparison::Winner::mp : BoundComparison::Winner::product;
    if (b.b == -1.0 && m >= 3) out.rough = rough_estimate(m, R);
    return out;
}

double tamed_B(Curvature b, double c, double r0, double psi0) {
    require(b.b <= 0.0, fmt::format("tamed_B: b must be <= 0 (got {})", b.b));
    require(c > 0.0 && c < 1.0, fmt::format("tamed_B: c must lie in (0, 1) (got {})", c));
    require(r0 > 0.0, fmt::format("tamed_B: r0 must be > 0 (got {})", r0));
    require(psi0 > 0.0 && psi0 <= 1.0, fmt::format("tamed_B: psi0 must lie in (0, 1] (got {})", psi0));
    // S_b(r0)/S_b(t + r0) falls from 1 at t = 0 towards 0, so the affine
    // combination peaks at one of the two ends.
    return std::max(std::sqrt(1.0 - psi0 * psi0), c);
}

double tamed_lambda(const TamedParams& p) {
    p.validate();
    return std::max(2.0 * p.r0 * p.sup_h, 2.0 * p.c * p.R * model::cot_b(p.b2, p.R));
}

BoundReport tamed_upper_bound(const TamedParams& p) {
    p.validate();
    const double B = tamed_B(p.b2, p.c, p.r0, p.psi0);
    const double lambda = tamed_lambda(p);
    const double x = std::sqrt(-p.b1.b) * p.R;
    const double x_coth_x = x == 0.0 ? 1.0 : x / std::tanh(x);
    const double denominator = p.R * std::sqrt(1.0 - B * B);
    if (!(denominator > 0.0)) throw NumericalError("tamed_upper_bound: vanishing denominator");
    return {.kind = "tamed",
            .value = (1.0 + x_coth_x + lambda) / denominator,
            .side = BoundSide::upper,
            .inputs = {{"b1", p.b1.b}, {"b2", p.b2.b}, {"c", p.c}, {"r0", p.r0},
                       {"psi0", p.psi0}, {"supH", p.sup_h}, {"R", p.R}}};
}

double exit_time_upper(int m, Curvature b, double rK, double rho) {
    require(m >= 2, fmt::format("exit_time_upper: m must be >= 2 (got {})", m));
    require(b.b <= 0.0, fmt::format("exit_time_upper: b must be <= 0 (got {})", b.b));
    require(rK > 0.0 && rho >= 0.0 && rho <= rK,
            fmt::format("exit_time_upper: need 0 <= rho <= rK (got rho={}, rK={})", rho, rK));
    // A one-dimensional base is the interval (-rK, rK).
    if (m == 2) return 0.5 * (rK * rK - rho * rho);
    return warped::exit_time(WarpingProfile::model(m - 1, b), rK, rho);
}

}  // namespace bounds
}  // namespace exitgeo
