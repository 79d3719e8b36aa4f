#pragma once

#include "exitgeo/warping_profile.hpp"

#include <span>
#include <vector>

namespace exitgeo {

/// Mean exit time E of the geodesic ball B(r) in a spherically symmetric
/// manifold, E(rho) = int_rho^r F(s) / f(s)^{n-1} ds with F(s) = int_0^s f^{n-1}.
///
/// E solves Laplace(E) = -1 with E = 0 on the boundary, so E >= 0 inside.
/// F and the outer primitive are cached at the nodes of an adaptive grid; a
/// query adds a 20-point Gauss-Legendre tail from the nearest node, which keeps
/// E smooth in rho for finite-difference checks. The inner tolerance is 10x
/// tighter than the outer one.
///
/// Built once, then read-only: queries may run concurrently.
class ExitTimeProfile {
public:
    ExitTimeProfile(WarpingProfile profile, double r, double tolerance = 1e-12);

    /// E(rho) for 0 <= rho <= r. E(r) is exactly 0.
    [[nodiscard]] double operator()(double rho) const;

    /// dE/drho = -F(rho) / f(rho)^{n-1}; zero at the origin.
    [[nodiscard]] double derivative(double rho) const;

    /// Radial solution of Laplace(E) = -1 continued to any |rho| < r_max;
    /// negative outside the ball and even in rho.
    [[nodiscard]] double continued(double rho) const;

    /// F(sigma) = int_0^sigma f^{n-1}.
    [[nodiscard]] double inner_integral(double sigma) const;

    [[nodiscard]] const WarpingProfile& profile() const { return profile_; }
    [[nodiscard]] double radius() const { return r_; }
    [[nodiscard]] double tolerance() const { return tol_; }
    [[nodiscard]] std::size_t node_count() const { return nodes_.size(); }

private:
    [[nodiscard]] std::size_t cell(double x) const;
    [[nodiscard]] double area_density(double s) const;  // f^{n-1}
    [[nodiscard]] double ratio(double s) const;         // F / f^{n-1}
    [[nodiscard]] double primitive(double rho) const;   // int_0^rho ratio
    void build();

    WarpingProfile profile_;
    double r_;
    double tol_;
    std::vector<double> nodes_;
    std::vector<double> inner_;  // F at nodes
    std::vector<double> outer_;  // int_0^x F / f^{n-1} at nodes
};

/// Both Dirichlet eigenvalue lower bounds for B(r).
struct EigenBoundReport {
    double exit_bound;            ///< inf_{0<t<=r} (S/V)^2 / 4
    double barroso_bessa_bound;   ///< 1 / int_0^r V/S
    double r;
};

namespace warped {

/// S(t) = omega_{n-1} f(t)^{n-1}, for 0 < t < r_max.
double surface_volume(const WarpingProfile& p, double t);

/// V(t) = int_0^t S by adaptive quadrature (relative tolerance 1e-12).
double ball_volume_w(const WarpingProfile& p, double t);

double exit_time(const WarpingProfile& p, double r, double rho);

/// Palmer's identity E'(rho) = -V(rho) / S(rho), evaluated from the volumes
/// rather than from E.
double exit_time_derivative(const WarpingProfile& p, double rho);

double eigen_bound_exit(const WarpingProfile& p, double r);
double eigen_bound_barroso(const WarpingProfile& p, double r);
EigenBoundReport eigen_bounds(const WarpingProfile& p, double r);

/// (c1 c3 / (2 c2))^2 for volume growth c1 e^{c3 t} <= S(t) <= c2 e^{c3 t}.
double essential_spectrum_bound(double c1, double c2, double c3);

/// Largest |E'' + (n-1)(f'/f) E' + 1| over grid, with E'' and E' from centered
/// differences of step 1e-4.
double verify_dynkin(const WarpingProfile& p, double r, std::span<const double> grid);

}  // namespace warped
}  // namespace exitgeo
