#pragma once

#include <functional>

namespace exitgeo::roots {

struct Bracket {
    double lo;
    double hi;
};

/// Brent's method on a sign-changing bracket.
///
/// Returns the final bracket (width <= xtol) instead of a single point so that
/// callers can pick the side they need. Throws NumericalError if f(lo) and
/// f(hi) share a sign.
Bracket brent(const std::function<double(double)>& f, double lo, double hi,
              double xtol = 1e-12, int max_iter = 200);

/// Golden-section minimisation on [lo, hi]; returns the abscissa.
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double xtol = 1e-10);

}  // namespace exitgeo::roots
