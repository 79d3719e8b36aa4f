#pragma once

namespace exitgeo {

/// Sectional-curvature value of a constant-curvature model space. Any finite
/// real is accepted.
struct Curvature {
    double b = 0.0;

    constexpr Curvature() = default;
    constexpr explicit Curvature(double value) : b(value) {}
};

/// The simply connected space form of dimension m and curvature b.
///
/// For b > 0 every radial evaluation is restricted to t < pi / (2 sqrt(b)),
/// the hemisphere radius, not the full injectivity radius pi / sqrt(b).
class ModelSpace {
public:
    ModelSpace(int dimension, Curvature curvature);

    [[nodiscard]] int dimension() const { return m_; }
    [[nodiscard]] Curvature curvature() const { return b_; }

    /// Upper end of the admissible radius range (infinity when b <= 0).
    [[nodiscard]] double radius_limit() const;

    [[nodiscard]] double sphere_volume(double r) const;
    [[nodiscard]] double ball_volume(double r) const;
    [[nodiscard]] double iso_quotient(double r) const;
    [[nodiscard]] double mean_curvature_bound(double r) const;

private:
    int m_;
    Curvature b_;
};

namespace model {

/// pi / (2 sqrt(b)) for b > 0, +infinity otherwise.
double radius_limit(Curvature b);

/// Warping function S_b: sinh, identity or sin depending on the sign of b.
double s_b(Curvature b, double t);

/// C_b = S_b'. Satisfies C_b^2 + b S_b^2 = 1.
double c_b(Curvature b, double t);

/// F_b with F_b' = S_b: (1 - cos(sqrt(b) t)) / b, t^2 / 2, or
/// (1 - cosh(sqrt(-b) t)) / b. The last form is positive because b < 0.
double f_b(Curvature b, double t);

/// C_b / S_b, the principal curvature of a geodesic sphere of radius t.
double cot_b(Curvature b, double t);

/// Area of the unit (k)-sphere in R^{k+1}; omega(0) = 2 counts the two points
/// bounding an interval.
double unit_sphere_area(int k);

/// omega_{m-1} S_b(r)^{m-1}.
double sphere_volume(int m, Curvature b, double r);

/// Integral over [0, r] of sphere_volume by adaptive quadrature.
double ball_volume(int m, Curvature b, double r);

/// sphere_volume / ball_volume.
double iso_quotient(int m, Curvature b, double r);

/// m C_b(r) / S_b(r); lower bound for the mean curvature of a geodesic sphere.
double sphere_mean_curvature_bound(int m, Curvature b, double r);

}  // namespace model
}  // namespace exitgeo
