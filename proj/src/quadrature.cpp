#include "exitgeo/quadrature.hpp"

#include "exitgeo/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include <fmt/core.h>

namespace exitgeo::quad {

namespace {

// Kronrod abscissae on [0, 1]; the odd entries are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

// QUADPACK qk15 with its error heuristic.
Segment kronrod15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double abs_half = std::abs(half);

    std::array<double, 15> fv{};
    const double fc = f(center);
    double result_g = fc * kWg[3];
    double result_k = fc * kWgk[7];
    double result_abs = std::abs(result_k);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        result_k += kWgk[j] * (f1 + f2);
        result_abs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) result_g += kWg[j / 2] * (f1 + f2);
    }
    fv[14] = fc;

    const double mean = 0.5 * result_k;
    double result_asc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        result_asc += kWgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
    }

    result_k *= half;
    result_abs *= abs_half;
    result_asc *= abs_half;

    double err = std::abs((result_k - result_g * half));
    if (result_asc != 0.0 && err != 0.0) {
        err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (result_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        err = std::max(50.0 * eps * result_abs, err);
    }
    return {a, b, result_k, err};
}

struct GaussLegendre20 {
    std::array<double, 20> nodes{};
    std::array<double, 20> weights{};

    GaussLegendre20() {
        constexpr int n = 20;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double step = p1 / dp;
                x -= step;
                if (std::abs(step) < 1e-16) break;
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GaussLegendre20& gl20() {
    static const GaussLegendre20 rule;
    return rule;
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, const Tolerance& tol) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate: limits must be finite");
    }
    if (a == b) return {0.0, 0.0, 0};

    std::priority_queue<Segment> heap;
    Segment first = kronrod15(f, a, b);
    double total = first.value;
    double total_err = first.error;
    heap.push(first);

    auto target = [&] { return std::max(tol.abs, tol.rel * std::abs(total)); };

    while (total_err > target()) {
        if (heap.size() >= tol.max_intervals) {
            throw NumericalError(fmt::format(
                "integrate: tolerance not met on [{}, {}] after {} intervals (error {:.3g}, target {:.3g})",
                a, b, heap.size(), total_err, target()));
        }
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = kronrod15(f, worst.a, mid);
        const Segment right = kronrod15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from scratch to shed the cancellation accumulated by the updates.
    const std::size_t count = heap.size();
    double value = 0.0;
    double error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    return {value, error, count};
}

double integral(const Integrand& f, double a, double b, const Tolerance& tol) {
    return integrate(f, a, b, tol).value;
}

double gauss_legendre(const Integrand& f, double a, double b) {
    const auto& rule = gl20();
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(center + half * rule.nodes[i]);
    }
    return half * sum;
}

std::span<const double> gauss_legendre_nodes() { return gl20().nodes; }
std::span<const double> gauss_legendre_weights() { return gl20().weights; }

}  // namespace exitgeo::quad
