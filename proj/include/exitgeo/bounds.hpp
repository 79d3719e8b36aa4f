#pragma once

#include "exitgeo/model_spaces.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exitgeo {

enum class BoundSide { lower, upper };

/// One evaluated isoperimetric bound together with the inputs that produced it.
struct BoundReport {
    std::string kind;
    double value = 0.0;
    BoundSide side = BoundSide::lower;
    std::vector<std::pair<std::string, double>> inputs;
};

/// Hypotheses of the upper bound for extrinsic balls of immersions with tamed
/// second fundamental form in a Hadamard manifold with curvature in [b1, b2].
///
/// psi0 and sup_h are never defaulted: the caller asserts them.
struct TamedParams {
    Curvature b1;     ///< lower sectional curvature bound, b1 <= b2
    Curvature b2;     ///< upper sectional curvature bound, b2 <= 0
    double c = 0.0;   ///< taming constant in (a(M), 1)
    double r0 = 0.0;  ///< inner radius beyond which the taming holds
    double psi0 = 0.0;   ///< in (0, 1]
    double sup_h = 0.0;  ///< sup |H| over the inner ball, >= 0
    double R = 0.0;      ///< extrinsic radius, >= r0

    void validate() const;
};

struct BoundComparison {
    double mp;       ///< m / R, the Euclidean-model quotient
    double product;  ///< quotient of the (m-1)-dimensional model ball
    enum class Winner { mp, product } winner;
    std::optional<double> rough;  ///< lower estimate of product, only for b = -1 and m >= 3
};

namespace bounds {

/// Lower bound for vol(dD)/vol(D) of minimal m-submanifolds: model-ball quotient
/// for b <= 0, m C_b/S_b(R) for b > 0.
BoundReport mp_lower_bound(int m, Curvature b, double R);

/// Lower bound in N x R: quotient of the (m-1)-dimensional model ball of radius rK.
BoundReport product_lower_bound(int m, Curvature b, double rK);

/// Boundary/volume ratio of the slab B^{m-1}(R) x [-i, i] (m >= 2).
double slab_family_ratio(int m, Curvature b, double R, int i);

/// (m-2)(e^R - 1)^{m-2} / (e^{(m-2)R} - 1), evaluated in log space.
double rough_estimate(int m, double R);

/// Radius where rough_estimate(m, R) = m / R, found on [1e-6, 100]. Returns
/// the bracket end with rough_estimate >= m / R. Throws NumericalError if the
/// sign does not change on the interval.
double crossover_radius(int m);

BoundComparison compare_bounds(int m, Curvature b, double R);

/// max(sqrt(1 - psi0^2), c): the supremum over t >= 0 of
/// S_b(r0)/S_b(t + r0) (sqrt(1 - psi0^2) - c) + c.
double tamed_B(Curvature b, double c, double r0, double psi0);

/// max{2 r0 sup|H|, 2 c R (C_b2/S_b2)(R)}.
double tamed_lambda(const TamedParams& p);

/// (1 + sqrt(-b1) R coth(sqrt(-b1) R) + Lambda) / (R sqrt(1 - B^2)).
BoundReport tamed_upper_bound(const TamedParams& p);

/// Mean exit time of the (m-1)-dimensional model ball B(rK) at radius rho,
/// the comparison value for extrinsic balls in N x R.
double exit_time_upper(int m, Curvature b, double rK, double rho);

}  // namespace bounds
}  // namespace exitgeo
