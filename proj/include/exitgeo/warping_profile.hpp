#pragma once

#include "exitgeo/model_spaces.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exitgeo {

/// Radial warping function f of a spherically symmetric manifold
/// ([0, r_max) x S^{n-1}, dt^2 + f(t)^2 dtheta^2).
///
/// Construction validates f(0) = 0 and f'(0) = 1 (probed at t = 1e-8 to
/// within 1e-6) and f > 0 on a sampled grid of (0, r_max).
class WarpingProfile {
public:
    using Function = std::function<double(double)>;

    WarpingProfile(int n, Function f, Function df, double r_max, std::string name = "custom");

    /// Profile whose derivative is a centered difference of f with h = 1e-6
    /// (about 1e-10 accuracy for smooth f of unit scale).
    static WarpingProfile with_fd_derivative(int n, Function f, double r_max,
                                             std::string name = "custom");

    static WarpingProfile euclidean(int n);
    /// f = S_b; r_max follows the model space radius cap.
    static WarpingProfile model(int n, Curvature b);
    static WarpingProfile hyperbolic(int n, double k = 1.0) { return model(n, Curvature{-k}); }
    static WarpingProfile sphere(int n, double k = 1.0) { return model(n, Curvature{k}); }
    /// f = t + t^3.
    static WarpingProfile cubic(int n);

    /// Cubic Hermite interpolant of sampled (t, f) pairs. t must start at 0 and
    /// increase strictly; r_max is the last abscissa. Without df the slopes are
    /// Fritsch-Carlson with f'(0) pinned to 1.
    static WarpingProfile from_samples(int n, std::vector<double> t, std::vector<double> f,
                                       std::vector<double> df = {});

    /// Builtin by name: "euclidean", "hyperbolic:k", "sphere:k", "cubic".
    static WarpingProfile builtin(std::string_view descriptor, int n);

    /// Flat key=value file with keys dimension, t, f and optionally df, name
    /// (comma-separated lists). A dimension in the file wins over n_default.
    static WarpingProfile load(const std::filesystem::path& path, std::optional<int> n_default = {});

    [[nodiscard]] int dimension() const { return n_; }
    [[nodiscard]] double r_max() const { return r_max_; }
    [[nodiscard]] const std::string& name() const { return name_; }

    [[nodiscard]] double f(double t) const { return f_(t); }
    [[nodiscard]] double df(double t) const { return df_(t); }

    /// f'/f - 1/t, the bounded part of the radial drift. Zero for f = t.
    [[nodiscard]] double drift_correction(double t) const;

    /// Curvature b when f = S_b (builtin model profiles only).
    [[nodiscard]] const std::optional<Curvature>& model_curvature() const { return curvature_; }

private:
    int n_;
    Function f_;
    Function df_;
    double r_max_;
    std::string name_;
    Function correction_;
    std::optional<Curvature> curvature_;
};

/// sqrt|b| (coth or cot)(sqrt|b| t) - 1/t without domain checks, switching to
/// its Taylor series near the origin.
double model_drift_correction(Curvature b, double t);

}  // namespace exitgeo
