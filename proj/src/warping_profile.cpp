#include "exitgeo/warping_profile.hpp"

#include "exitgeo/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

#include <fmt/core.h>

namespace exitgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

double parse_real(std::string_view text, std::string_view what) {
    const std::string token = trim(text);
    double value = 0.0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw DomainError(fmt::format("cannot parse {} value '{}'", what, token));
    }
    return value;
}

std::vector<double> parse_list(std::string_view text, std::string_view what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        if (!trim(piece).empty()) out.push_back(parse_real(piece, what));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

// Piecewise cubic Hermite data shared by f and df closures.
struct HermiteTable {
    std::vector<double> t;
    std::vector<double> f;
    std::vector<double> d;

    std::size_t cell(double x) const {
        const auto it = std::upper_bound(t.begin(), t.end(), x);
        const auto idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - t.begin() - 1, 0));
        return std::min(idx, t.size() - 2);
    }
    double value(double x) const {
        const std::size_t k = cell(x);
        const double h = t[k + 1] - t[k];
        const double s = (x - t[k]) / h;
        const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
        const double h10 = s * (1 - s) * (1 - s);
        const double h01 = s * s * (3 - 2 * s);
        const double h11 = s * s * (s - 1);
        return h00 * f[k] + h10 * h * d[k] + h01 * f[k + 1] + h11 * h * d[k + 1];
    }
    double slope(double x) const {
        const std::size_t k = cell(x);
        const double h = t[k + 1] - t[k];
        const double s = (x - t[k]) / h;
        const double d00 = 6 * s * (s - 1) / h;
        const double d10 = (1 - s) * (1 - 3 * s);
        const double d01 = -d00;
        const double d11 = s * (3 * s - 2);
        return d00 * f[k] + d10 * d[k] + d01 * f[k + 1] + d11 * d[k + 1];
    }
};

std::vector<double> fritsch_carlson(const std::vector<double>& t, const std::vector<double>& f) {
    const std::size_t n = t.size();
    std::vector<double> delta(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) delta[k] = (f[k + 1] - f[k]) / (t[k + 1] - t[k]);
    std::vector<double> d(n);
    d[0] = 1.0;
    d[n - 1] = delta[n - 2];
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (delta[k - 1] * delta[k] <= 0.0) {
            d[k] = 0.0;
        } else {
            const double h0 = t[k] - t[k - 1];
            const double h1 = t[k + 1] - t[k];
            const double w1 = 2 * h1 + h0;
            const double w2 = h1 + 2 * h0;
            d[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
        }
    }
    return d;
}

}  // namespace

WarpingProfile::WarpingProfile(int n, Function f, Function df, double r_max, std::string name)
    : n_(n), f_(std::move(f)), df_(std::move(df)), r_max_(r_max), name_(std::move(name)) {
    if (n_ < 2) throw DomainError(fmt::format("WarpingProfile: dimension must be >= 2 (got {})", n_));
    if (!f_ || !df_) throw DomainError("WarpingProfile: f and df must be callable");
    if (!(r_max_ > 0.0)) throw DomainError(fmt::format("WarpingProfile: r_max must be > 0 (got {})", r_max_));

    constexpr double probe = 1e-8;
    if (std::abs(f_(probe)) > 1e-6 || std::abs(df_(probe) - 1.0) > 1e-6) {
        throw DomainError(fmt::format(
            "WarpingProfile '{}': need f(0) = 0 and f'(0) = 1 (f(1e-8) = {}, f'(1e-8) = {})", name_,
            f_(probe), df_(probe)));
    }
    const double span = std::isfinite(r_max_) ? r_max_ : 10.0;
    constexpr int samples = 256;
    for (int i = 1; i < samples; ++i) {
        const double t = span * i / samples;
        if (!(f_(t) > 0.0)) {
            throw DomainError(fmt::format("WarpingProfile '{}': f must be positive on (0, r_max); f({}) = {}",
                                          name_, t, f_(t)));
        }
    }

    correction_ = [f = f_, df = df_](double t) {
        if (t < 1e-8) return 0.0;
        return (t * df(t) - f(t)) / (t * f(t));
    };
}

double WarpingProfile::drift_correction(double t) const { return correction_(t); }

WarpingProfile WarpingProfile::with_fd_derivative(int n, Function f, double r_max, std::string name) {
    auto df = [f](double t) {
        constexpr double h = 1e-6;
        if (t < h) return (f(t + h) - f(t)) / h;
        return (f(t + h) - f(t - h)) / (2.0 * h);
    };
    return WarpingProfile(n, std::move(f), std::move(df), r_max, std::move(name));
}

WarpingProfile WarpingProfile::euclidean(int n) {
    WarpingProfile p(n, [](double t) { return t; }, [](double) { return 1.0; }, kInf, "euclidean");
    p.correction_ = [](double) { return 0.0; };
    p.curvature_ = Curvature{0.0};
    return p;
}

WarpingProfile WarpingProfile::model(int n, Curvature b) {
    if (b.b == 0.0) return euclidean(n);
    const std::string name = b.b < 0.0 ? fmt::format("hyperbolic:{}", -b.b) : fmt::format("sphere:{}", b.b);
    WarpingProfile p(n, [b](double t) { return model::s_b(b, t); },
                     [b](double t) { return model::c_b(b, t); }, model::radius_limit(b), name);
    p.correction_ = [b](double t) { return model_drift_correction(b, t); };
    p.curvature_ = b;
    return p;
}

double model_drift_correction(Curvature b, double t) {
    const double x = b.b * t * t;
    if (std::abs(x) < 1e-4) return -b.b * t / 3.0 * (1.0 + x / 15.0);
    const double k = std::sqrt(std::abs(b.b));
    if (b.b < 0.0) return k * (1.0 + 2.0 / std::expm1(2.0 * k * t)) - 1.0 / t;
    return k / std::tan(k * t) - 1.0 / t;
}

WarpingProfile WarpingProfile::cubic(int n) {
    return WarpingProfile(n, [](double t) { return t + t * t * t; },
                          [](double t) { return 1.0 + 3.0 * t * t; }, kInf, "cubic");
}

WarpingProfile WarpingProfile::from_samples(int n, std::vector<double> t, std::vector<double> f,
                                            std::vector<double> df) {
    if (t.size() < 3 || t.size() != f.size() || (!df.empty() && df.size() != t.size())) {
        throw DomainError("WarpingProfile::from_samples: need >= 3 samples with matching t, f (and df) lengths");
    }
    if (t.front() != 0.0) throw DomainError("WarpingProfile::from_samples: samples must start at t = 0");
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        if (!(t[k + 1] > t[k])) throw DomainError("WarpingProfile::from_samples: t must increase strictly");
    }
    if (df.empty()) df = fritsch_carlson(t, f);
    const double r_max = t.back();
    auto table = std::make_shared<const HermiteTable>(HermiteTable{std::move(t), std::move(f), std::move(df)});
    return WarpingProfile(
        n, [table](double x) { return table->value(x); }, [table](double x) { return table->slope(x); },
        r_max, "sampled");
}

WarpingProfile WarpingProfile::builtin(std::string_view descriptor, int n) {
    const auto colon = descriptor.find(':');
    const std::string kind = trim(descriptor.substr(0, colon));
    const double k = colon == std::string_view::npos ? 1.0 : parse_real(descriptor.substr(colon + 1), "profile curvature");
    if (kind == "euclidean") return euclidean(n);
    if (kind == "cubic") return cubic(n);
    if (kind == "hyperbolic" || kind == "sphere") {
        if (!(k > 0.0)) throw DomainError(fmt::format("profile '{}': curvature scale must be > 0", descriptor));
        return kind == "hyperbolic" ? hyperbolic(n, k) : sphere(n, k);
    }
    throw DomainError(fmt::format("unknown profile '{}' (expected euclidean, hyperbolic:k, sphere:k, cubic)", descriptor));
}

WarpingProfile WarpingProfile::load(const std::filesystem::path& path, std::optional<int> n_default) {
    std::ifstream in(path);
    if (!in) throw DomainError(fmt::format("cannot open profile file '{}'", path.string()));
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw DomainError(fmt::format("profile file '{}': expected key=value, got '{}'", path.string(), stripped));
        }
        kv[trim(std::string_view(stripped).substr(0, eq))] = trim(std::string_view(stripped).substr(eq + 1));
    }
    std::optional<int> n = n_default;
    if (auto it = kv.find("dimension"); it != kv.end()) n = static_cast<int>(parse_real(it->second, "dimension"));
    if (!n) throw DomainError(fmt::format("profile file '{}': no dimension given", path.string()));
    if (!kv.contains("t") || !kv.contains("f")) {
        throw DomainError(fmt::format("profile file '{}': keys t and f are required", path.string()));
    }
    std::vector<double> df;
    if (auto it = kv.find("df"); it != kv.end()) df = parse_list(it->second, "df");
    auto p = from_samples(*n, parse_list(kv["t"], "t"), parse_list(kv["f"], "f"), std::move(df));
    if (auto it = kv.find("name"); it != kv.end()) p.name_ = it->second;
    return p;
}

}  // namespace exitgeo
