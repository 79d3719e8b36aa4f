#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exitgeo/errors.hpp"
#include "exitgeo/quadrature.hpp"
#include "exitgeo/roots.hpp"

#include <cmath>
#include <numbers>

using namespace exitgeo;

TEST_CASE("Gauss-Kronrod integrates smooth functions to tolerance") {
    CHECK(quad::integral([](double x) { return std::exp(x); }, 0.0, 1.0) ==
          doctest::Approx(std::numbers::e - 1.0).epsilon(1e-13));
    CHECK(quad::integral([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
          doctest::Approx(2.0).epsilon(1e-13));
    // Endpoint singularity needs many bisections but stays integrable.
    const auto r = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {.abs = 1e-9, .rel = 1e-9});
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(r.intervals > 1);
}

TEST_CASE("Gauss-Kronrod reports an unmet tolerance") {
    const auto nasty = [](double x) { return std::sin(1.0 / x) / x; };
    CHECK_THROWS_AS(quad::integrate(nasty, 1e-9, 1.0, {.abs = 1e-14, .rel = 1e-14, .max_intervals = 50}),
                    NumericalError);
    CHECK(quad::integral([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("20-point Gauss-Legendre is exact for degree 39") {
    double wsum = 0.0;
    for (double w : quad::gauss_legendre_weights()) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
    const double v = quad::gauss_legendre([](double x) { return std::pow(x, 39) + std::pow(x, 38); }, 0.0, 1.0);
    CHECK(v == doctest::Approx(1.0 / 40.0 + 1.0 / 39.0).epsilon(1e-14));
}

TEST_CASE("Brent brackets roots and refuses same-sign intervals") {
    const auto br = roots::brent([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14);
    CHECK(br.lo <= std::sqrt(2.0));
    CHECK(br.hi >= std::sqrt(2.0));
    CHECK(br.hi - br.lo <= 1e-13);
    CHECK_THROWS_AS(roots::brent([](double x) { return x * x + 1.0; }, -1.0, 1.0), NumericalError);
}

TEST_CASE("golden section finds an interior minimum") {
    const double x = roots::golden_min([](double t) { return (t - 0.3) * (t - 0.3) + 1.0; }, 0.0, 1.0, 1e-10);
    CHECK(x == doctest::Approx(0.3).epsilon(1e-8));
}
