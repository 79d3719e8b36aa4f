#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace exitgeo::quad {

using Integrand = std::function<double(double)>;

struct Tolerance {
    double abs = 1e-10;
    double rel = 1e-10;
    std::size_t max_intervals = 2000;
};

struct Result {
    double value = 0.0;
    double error = 0.0;
    std::size_t intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below max(tol.abs, tol.rel * |value|). Throws
/// NumericalError when tol.max_intervals is exhausted first.
Result integrate(const Integrand& f, double a, double b, const Tolerance& tol = {});

/// Convenience wrapper returning only the value.
double integral(const Integrand& f, double a, double b, const Tolerance& tol = {});

/// Fixed 20-point Gauss-Legendre rule on [a, b]. Smooth in the endpoints,
/// which matters when the result is differentiated numerically.
double gauss_legendre(const Integrand& f, double a, double b);

/// Nodes and weights of the 20-point rule on [-1, 1].
std::span<const double> gauss_legendre_nodes();
std::span<const double> gauss_legendre_weights();

}  // namespace exitgeo::quad
