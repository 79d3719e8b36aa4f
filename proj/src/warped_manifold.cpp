#include "exitgeo/warped_manifold.hpp"

#include "exitgeo/errors.hpp"
#include "exitgeo/quadrature.hpp"
#include "exitgeo/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

namespace exitgeo {

namespace {

constexpr std::size_t kMaxNodes = 1 << 14;
constexpr int kInitialCells = 16;

void check_open_radius(const WarpingProfile& p, double t, const char* op) {
    if (!(t > 0.0) || !(t < p.r_max())) {
        throw DomainError(fmt::format("{}: radius {} outside (0, r_max) = (0, {})", op, t, p.r_max()));
    }
}

bool agrees(double whole, double halves, double tol) {
    return std::abs(whole - halves) <= tol * std::abs(halves) + 1e-300;
}

}  // namespace

ExitTimeProfile::ExitTimeProfile(WarpingProfile profile, double r, double tolerance)
    : profile_(std::move(profile)), r_(r), tol_(tolerance) {
    if (!(r_ > 0.0) || !(r_ < profile_.r_max())) {
        throw DomainError(fmt::format("ExitTimeProfile: radius {} outside (0, r_max) = (0, {})", r_, profile_.r_max()));
    }
    if (!(tol_ > 0.0)) throw DomainError("ExitTimeProfile: tolerance must be > 0");
    build();
}

double ExitTimeProfile::area_density(double s) const {
    return std::pow(profile_.f(s), profile_.dimension() - 1);
}

std::size_t ExitTimeProfile::cell(double x) const {
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    const auto idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - nodes_.begin() - 1, 0));
    return std::min(idx, nodes_.size() - 2);
}

double ExitTimeProfile::inner_integral(double sigma) const {
    const std::size_t k = cell(sigma);
    return inner_[k] + quad::gauss_legendre([this](double s) { return area_density(s); }, nodes_[k], sigma);
}

double ExitTimeProfile::ratio(double s) const {
    if (s <= 0.0) return 0.0;
    return inner_integral(s) / area_density(s);
}

double ExitTimeProfile::primitive(double rho) const {
    const std::size_t k = cell(rho);
    return outer_[k] + quad::gauss_legendre([this](double s) { return ratio(s); }, nodes_[k], rho);
}

void ExitTimeProfile::build() {
    const auto density = [this](double s) { return area_density(s); };
    const auto ratio_fn = [this](double s) { return ratio(s); };

    nodes_.resize(kInitialCells + 1);
    for (int i = 0; i <= kInitialCells; ++i) nodes_[i] = r_ * i / kInitialCells;
    nodes_.back() = r_;

    for (;;) {
        inner_.assign(nodes_.size(), 0.0);
        for (std::size_t k = 0; k + 1 < nodes_.size(); ++k) {
            inner_[k + 1] = inner_[k] + quad::gauss_legendre(density, nodes_[k], nodes_[k + 1]);
        }

        std::vector<double> refined{nodes_.front()};
        bool split_any = false;
        for (std::size_t k = 0; k + 1 < nodes_.size(); ++k) {
            const double a = nodes_[k];
            const double b = nodes_[k + 1];
            const double m = 0.5 * (a + b);
            const bool inner_ok = agrees(quad::gauss_legendre(density, a, b),
                                         quad::gauss_legendre(density, a, m) + quad::gauss_legendre(density, m, b),
                                         0.1 * tol_);
            const bool outer_ok = agrees(quad::gauss_legendre(ratio_fn, a, b),
                                         quad::gauss_legendre(ratio_fn, a, m) + quad::gauss_legendre(ratio_fn, m, b),
                                         tol_);
            if (!inner_ok || !outer_ok) {
                refined.push_back(m);
                split_any = true;
            }
            refined.push_back(b);
        }
        if (!split_any) break;
        if (refined.size() > kMaxNodes) {
            throw NumericalError(fmt::format("ExitTimeProfile: grid for '{}' exceeded {} nodes at tolerance {}",
                                             profile_.name(), kMaxNodes, tol_));
        }
        nodes_ = std::move(refined);
    }

    outer_.assign(nodes_.size(), 0.0);
    for (std::size_t k = 0; k + 1 < nodes_.size(); ++k) {
        outer_[k + 1] = outer_[k] + quad::gauss_legendre(ratio_fn, nodes_[k], nodes_[k + 1]);
    }
}

double ExitTimeProfile::operator()(double rho) const {
    if (!(rho >= 0.0) || rho > r_) {
        throw DomainError(fmt::format("exit_time: rho = {} outside [0, r] = [0, {}]", rho, r_));
    }
    if (rho == r_) return 0.0;
    return outer_.back() - primitive(rho);
}

double ExitTimeProfile::derivative(double rho) const {
    if (!(rho >= 0.0) || rho > r_) {
        throw DomainError(fmt::format("exit_time derivative: rho = {} outside [0, {}]", rho, r_));
    }
    return -ratio(rho);
}

double ExitTimeProfile::continued(double rho) const {
    const double x = std::abs(rho);
    if (!(x < profile_.r_max())) {
        throw DomainError(fmt::format("exit_time: |rho| = {} outside [0, r_max)", x));
    }
    if (x == r_) return 0.0;
    return outer_.back() - primitive(x);
}

namespace warped {

double surface_volume(const WarpingProfile& p, double t) {
    check_open_radius(p, t, "surface_volume");
    return model::unit_sphere_area(p.dimension() - 1) * std::pow(p.f(t), p.dimension() - 1);
}

double ball_volume_w(const WarpingProfile& p, double t) {
    check_open_radius(p, t, "ball_volume_w");
    const double omega = model::unit_sphere_area(p.dimension() - 1);
    const int power = p.dimension() - 1;
    return omega * quad::integral([&](double s) { return std::pow(p.f(s), power); }, 0.0, t,
                                  {.abs = 0.0, .rel = 1e-12});
}

double exit_time(const WarpingProfile& p, double r, double rho) {
    return ExitTimeProfile(p, r)(rho);
}

double exit_time_derivative(const WarpingProfile& p, double rho) {
    check_open_radius(p, rho, "exit_time_derivative");
    return -ball_volume_w(p, rho) / surface_volume(p, rho);
}

double eigen_bound_exit(const WarpingProfile& p, double r) {
    check_open_radius(p, r, "eigen_bound_exit");
    // S/V ~ n/t blows up at the origin, so the infimum lives well inside
    // [r 1e-6, r]; the grid locates its basin and golden section polishes it.
    const auto objective = [&](double t) {
        const double q = surface_volume(p, t) / ball_volume_w(p, t);
        return 0.25 * q * q;
    };
    constexpr int samples = 128;
    const double lo = r * 1e-6;
    std::vector<double> grid(samples + 1);
    std::vector<double> values(samples + 1);
    for (int i = 0; i <= samples; ++i) {
        grid[i] = i == samples ? r : lo + (r - lo) * i / samples;
        values[i] = objective(grid[i]);
    }
    const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    double result = values[best];
    if (best > 0 && best < static_cast<std::size_t>(samples)) {
        const double t = roots::golden_min(objective, grid[best - 1], grid[best + 1], 1e-10 * r);
        result = std::min(result, objective(t));
    }
    return result;
}

double eigen_bound_barroso(const WarpingProfile& p, double r) {
    check_open_radius(p, r, "eigen_bound_barroso");
    const auto v_over_s = [&](double s) {
        if (s <= 0.0) return 0.0;
        return ball_volume_w(p, s) / surface_volume(p, s);
    };
    return 1.0 / quad::integral(v_over_s, 0.0, r, {.abs = 0.0, .rel = 1e-10});
}

EigenBoundReport eigen_bounds(const WarpingProfile& p, double r) {
    return {eigen_bound_exit(p, r), eigen_bound_barroso(p, r), r};
}

double essential_spectrum_bound(double c1, double c2, double c3) {
    if (!(c1 > 0.0) || !(c1 <= c2) || !(c3 > 0.0)) {
        throw DomainError(fmt::format(
            "essential_spectrum_bound: need 0 < c1 <= c2 and c3 > 0 (got c1={}, c2={}, c3={})", c1, c2, c3));
    }
    const double q = c1 * c3 / (2.0 * c2);
    return q * q;
}

double verify_dynkin(const WarpingProfile& p, double r, std::span<const double> grid) {
    constexpr double h = 1e-4;
    const ExitTimeProfile exit(p, r, 1e-13);
    double worst = 0.0;
    for (const double rho : grid) {
        if (!(rho > 0.0) || !(rho < r)) {
            throw DomainError(fmt::format("verify_dynkin: grid point {} outside (0, {})", rho, r));
        }
        const double e_minus = exit.continued(rho - h);
        const double e_mid = exit.continued(rho);
        const double e_plus = exit.continued(rho + h);
        const double d2 = (e_plus - 2.0 * e_mid + e_minus) / (h * h);
        const double d1 = (e_plus - e_minus) / (2.0 * h);
        const double residual = d2 + (p.dimension() - 1) * p.df(rho) / p.f(rho) * d1 + 1.0;
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

}  // namespace warped
}  // namespace exitgeo
