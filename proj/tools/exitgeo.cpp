// exitgeo: command-line front end for the exit-time, eigenvalue and
// isoperimetric bound evaluators.
//
//   exitgeo model  -m 2 -b -1 --r 0.5,1,2
//   exitgeo exit   --profile hyperbolic:1 -n 2 --r 1 --rho 0:1:11
//   exitgeo bounds compare -m 3 -b -1 -R 4
//   exitgeo verify exit-comparison --paths 100000 --seed 42
//
// Exit status: 0 ok, 1 verification failure, 2 usage/domain error,
// 3 numerical failure.

#include "exitgeo/bounds.hpp"
#include "exitgeo/brownian.hpp"
#include "exitgeo/csv.hpp"
#include "exitgeo/errors.hpp"
#include "exitgeo/model_spaces.hpp"
#include "exitgeo/verify.hpp"
#include "exitgeo/warped_manifold.hpp"

#include "CLI11.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace exitgeo;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3 };

// Table sink: CSV (default) or aligned columns.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> fields) { rows_.push_back(std::move(fields)); }

    void write(std::ostream& os, const std::string& format) const {
        if (format == "pretty") {
            std::vector<std::size_t> width(header_.size());
            for (std::size_t j = 0; j < header_.size(); ++j) width[j] = header_[j].size();
            for (const auto& r : rows_) {
                for (std::size_t j = 0; j < r.size() && j < width.size(); ++j) width[j] = std::max(width[j], r[j].size());
            }
            const auto line = [&](const std::vector<std::string>& r) {
                for (std::size_t j = 0; j < r.size(); ++j) {
                    os << (j ? "  " : "") << fmt::format("{:<{}}", r[j], width[j]);
                }
                os << '\n';
            };
            line(header_);
            for (const auto& r : rows_) line(r);
            return;
        }
        os << csv::row(header_) << '\n';
        for (const auto& r : rows_) os << csv::row(r) << '\n';
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

struct Output {
    std::string format = "csv";
    std::string path;

    void emit(const Table& table) const {
        if (path.empty()) {
            table.write(std::cout, format);
            return;
        }
        std::ofstream out(path);
        if (!out) throw DomainError(fmt::format("cannot write '{}'", path));
        table.write(out, format);
    }
};

void add_output_options(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "csv or pretty")->check(CLI::IsMember({"csv", "pretty"}));
    cmd->add_option("-o,--out", out.path, "write the table to a file instead of stdout");
}

// Grid tokens are plain numbers or lo:hi:count ranges.
std::vector<double> expand_grid(const std::vector<std::string>& tokens) {
    std::vector<double> out;
    for (const auto& tok : tokens) {
        const auto parts = CLI::detail::split(tok, ':');
        if (parts.size() == 1) {
            out.push_back(std::stod(tok));
        } else if (parts.size() == 3) {
            const double lo = std::stod(parts[0]);
            const double hi = std::stod(parts[1]);
            const int n = std::stoi(parts[2]);
            if (n < 1) throw DomainError(fmt::format("grid '{}': count must be >= 1", tok));
            for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
        } else {
            throw DomainError(fmt::format("grid '{}': expected a number or lo:hi:count", tok));
        }
    }
    return out;
}

std::string side_name(BoundSide s) { return s == BoundSide::lower ? "lower" : "upper"; }

std::string inputs_field(const BoundReport& r) {
    std::string out;
    for (const auto& [key, value] : r.inputs) {
        if (!out.empty()) out += ';';
        out += key + "=" + csv::real(value);
    }
    return out;
}

Table report_table(const std::vector<BoundReport>& reports) {
    Table t({"kind", "side", "value", "inputs"});
    for (const auto& r : reports) t.add({r.kind, side_name(r.side), csv::real(r.value), inputs_field(r)});
    return t;
}

// --config FILE: flat key=value lines become "--key value" (or "-k value")
// arguments appended after the command line, skipping keys already given.
std::vector<std::string> splice_config(std::vector<std::string> args) {
    const auto it = std::find(args.begin(), args.end(), "--config");
    if (it == args.end()) return args;
    if (it + 1 == args.end()) throw CLI::ArgumentMismatch("--config requires a file");
    const std::string path = *(it + 1);
    args.erase(it, it + 2);

    std::ifstream in(path);
    if (!in) throw DomainError(fmt::format("cannot open config file '{}'", path));
    std::string line;
    std::vector<std::string> extra;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw DomainError(fmt::format("config '{}': expected key=value, got '{}'", path, line));
        std::string key = CLI::detail::trim_copy(line.substr(0, eq));
        std::string value = CLI::detail::trim_copy(line.substr(eq + 1));
        const std::string flag = (key.size() == 1 ? "-" : "--") + key;
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a == "--" + key || a == "-" + key || a.rfind("--" + key + "=", 0) == 0;
        });
        if (!given) {
            extra.push_back(flag);
            extra.push_back(value);
        }
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exit times, eigenvalue bounds and isoperimetric inequalities on model and warped spaces", "exitgeo"};
    app.require_subcommand(1);

    // model
    int model_m = 2;
    double model_b = 0.0;
    std::vector<std::string> model_r;
    Output model_out;
    auto* model_cmd = app.add_subcommand("model", "model-space quantities on a radius grid");
    model_cmd->add_option("-m,--dimension", model_m, "dimension m >= 1")->required();
    model_cmd->add_option("-b,--curvature", model_b, "sectional curvature b")->required();
    model_cmd->add_option("-r,--r", model_r, "radii (list or lo:hi:count)")->required()->delimiter(',');
    add_output_options(model_cmd, model_out);

    // exit
    std::string exit_profile = "euclidean";
    std::string exit_profile_file;
    int exit_n = 2;
    double exit_r = 1.0;
    std::vector<std::string> exit_rho;
    double exit_tol = 1e-12;
    Output exit_out;
    auto* exit_cmd = app.add_subcommand("exit", "mean exit time of a geodesic ball in a warped space");
    exit_cmd->add_option("-p,--profile", exit_profile, "euclidean | hyperbolic:k | sphere:k | cubic");
    exit_cmd->add_option("--profile-file", exit_profile_file, "key=value file with sampled t, f (and df)");
    exit_cmd->add_option("-n,--dimension", exit_n, "dimension n >= 2");
    exit_cmd->add_option("-r,--r", exit_r, "ball radius")->required();
    exit_cmd->add_option("--rho", exit_rho, "evaluation radii (list or lo:hi:count); default 0:r:11")->delimiter(',');
    exit_cmd->add_option("--tol", exit_tol, "relative tolerance of the exit-time quadrature");
    add_output_options(exit_cmd, exit_out);

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "isoperimetric bounds");
    bounds_cmd->require_subcommand(1);
    Output bounds_out;
    int bm = 2;
    double bb = 0.0;
    double bR = 1.0;
    int bi = 1;
    TamedParams tamed;
    double b1 = 0.0;
    double b2 = 0.0;

    auto* mp_cmd = bounds_cmd->add_subcommand("mp", "lower bound for minimal submanifolds of a Cartan-Hadamard or b > 0 ambient");
    mp_cmd->add_option("-m", bm)->required();
    mp_cmd->add_option("-b", bb)->required();
    mp_cmd->add_option("-R", bR)->required();
    auto* product_cmd = bounds_cmd->add_subcommand("product", "lower bound for minimal submanifolds of N x R");
    product_cmd->add_option("-m", bm)->required();
    product_cmd->add_option("-b", bb)->required();
    product_cmd->add_option("-R,--rK", bR)->required();
    auto* slab_cmd = bounds_cmd->add_subcommand("slab", "boundary/volume ratio of B x [-i, i]");
    slab_cmd->add_option("-m", bm)->required();
    slab_cmd->add_option("-b", bb)->required();
    slab_cmd->add_option("-R", bR)->required();
    slab_cmd->add_option("-i", bi)->required();
    auto* crossover_cmd = bounds_cmd->add_subcommand("crossover", "radius where the product bound overtakes m/R");
    crossover_cmd->add_option("-m", bm)->required();
    auto* tamed_cmd = bounds_cmd->add_subcommand("tamed", "upper bound for immersions with tamed second fundamental form");
    tamed_cmd->add_option("--b1", b1)->required();
    tamed_cmd->add_option("--b2", b2)->required();
    tamed_cmd->add_option("-c", tamed.c)->required();
    tamed_cmd->add_option("--psi0", tamed.psi0)->required();
    tamed_cmd->add_option("--r0", tamed.r0)->required();
    tamed_cmd->add_option("--supH", tamed.sup_h)->required();
    tamed_cmd->add_option("-R", tamed.R)->required();
    auto* compare_cmd = bounds_cmd->add_subcommand("compare", "m/R versus the product bound");
    compare_cmd->add_option("-m", bm)->required();
    compare_cmd->add_option("-b", bb)->required();
    compare_cmd->add_option("-R", bR)->required();
    for (auto* sub : bounds_cmd->get_subcommands({})) add_output_options(sub, bounds_out);

    // verify
    std::string suite = "all";
    SimConfig sim;
    Output verify_out;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite; exit status 1 on any non-PASS line");
    verify_cmd->add_option("suite", suite, "all | dynkin | exit-comparison | eigen | sharpness")
        ->check(CLI::IsMember(verify::suite_names()));
    verify_cmd->add_option("--paths", sim.paths, "Monte Carlo paths per configuration");
    verify_cmd->add_option("--dt", sim.dt, "time step");
    verify_cmd->add_option("--seed", sim.seed, "64-bit seed");
    verify_cmd->add_option("--t-max", sim.t_max, "censoring horizon (0 = 50x predicted mean)");
    verify_cmd->add_option("--threads", sim.threads, "worker threads (0 = all; EXITGEO_THREADS caps)");
    add_output_options(verify_cmd, verify_out);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = splice_config(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const DomainError& e) {
        std::cerr << "exitgeo: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (model_cmd->parsed()) {
            const ModelSpace space(model_m, Curvature{model_b});
            Table t({"r", "S_b", "C_b", "sphere_vol", "ball_vol", "iso_quotient", "mean_curvature_bound"});
            for (const double r : expand_grid(model_r)) {
                const Curvature b{model_b};
                t.add({csv::real(r), csv::real(model::s_b(b, r)), csv::real(model::c_b(b, r)),
                       csv::real(space.sphere_volume(r)), csv::real(space.ball_volume(r)),
                       csv::real(space.iso_quotient(r)), csv::real(space.mean_curvature_bound(r))});
            }
            model_out.emit(t);
            return kOk;
        }

        if (exit_cmd->parsed()) {
            const WarpingProfile profile = exit_profile_file.empty()
                                               ? WarpingProfile::builtin(exit_profile, exit_n)
                                               : WarpingProfile::load(exit_profile_file, exit_n);
            const ExitTimeProfile exit(profile, exit_r, exit_tol);
            const auto rhos = exit_rho.empty() ? expand_grid({fmt::format("0:{}:11", exit_r)}) : expand_grid(exit_rho);
            Table t({"rho", "E", "dE", "dynkin_residual"});
            for (const double rho : rhos) {
                const double e = exit(rho);
                const double de = rho > 0.0 ? warped::exit_time_derivative(profile, rho) : 0.0;
                const double residual = rho > 0.0 && rho < exit_r
                                            ? warped::verify_dynkin(profile, exit_r, std::span(&rho, 1))
                                            : std::numeric_limits<double>::quiet_NaN();
                t.add({csv::real(rho), csv::real(e), csv::real(de), csv::real(residual)});
            }
            exit_out.emit(t);
            return kOk;
        }

        if (bounds_cmd->parsed()) {
            const Curvature b{bb};
            if (mp_cmd->parsed()) {
                bounds_out.emit(report_table({bounds::mp_lower_bound(bm, b, bR)}));
            } else if (product_cmd->parsed()) {
                bounds_out.emit(report_table({bounds::product_lower_bound(bm, b, bR)}));
            } else if (slab_cmd->parsed()) {
                Table t({"kind", "m", "b", "R", "i", "value", "product", "excess"});
                const double ratio = bounds::slab_family_ratio(bm, b, bR, bi);
                const double product = bounds::product_lower_bound(bm, b, bR).value;
                t.add({"slab", std::to_string(bm), csv::real(bb), csv::real(bR), std::to_string(bi), csv::real(ratio),
                       csv::real(product), csv::real(ratio - product)});
                bounds_out.emit(t);
            } else if (crossover_cmd->parsed()) {
                Table t({"kind", "m", "R_m"});
                t.add({"crossover", std::to_string(bm), csv::real(bounds::crossover_radius(bm))});
                bounds_out.emit(t);
            } else if (tamed_cmd->parsed()) {
                tamed.b1 = Curvature{b1};
                tamed.b2 = Curvature{b2};
                bounds_out.emit(report_table({bounds::tamed_upper_bound(tamed)}));
            } else if (compare_cmd->parsed()) {
                const auto cmp = bounds::compare_bounds(bm, b, bR);
                Table t({"m", "b", "R", "mp", "product", "winner", "rough"});
                t.add({std::to_string(bm), csv::real(bb), csv::real(bR), csv::real(cmp.mp), csv::real(cmp.product),
                       cmp.winner == BoundComparison::Winner::mp ? "mp" : "product",
                       cmp.rough ? csv::real(*cmp.rough) : ""});
                bounds_out.emit(t);
            }
            return kOk;
        }

        if (verify_cmd->parsed()) {
            sim.validate();
            const auto checks = verify::run(suite, sim);
            Table t(verify::csv_header());
            for (const auto& c : checks) t.add(verify::csv_fields(c));
            verify_out.emit(t);
            return verify::all_passed(checks) ? kOk : kVerifyFailed;
        }
    } catch (const DomainError& e) {
        std::cerr << "exitgeo: domain error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "exitgeo: usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const NumericalError& e) {
        std::cerr << "exitgeo: numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
    return kUsage;
}
