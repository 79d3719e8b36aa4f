// Serial reference vs OpenMP driver for the radial exit-time kernel.
//
//   bench_kernels [paths] [dt]

#include "exitgeo/brownian_kernels.hpp"
#include "exitgeo/warping_profile.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

using namespace exitgeo;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const long paths = argc > 1 ? std::atol(argv[1]) : 20000;
    const double dt = argc > 2 ? std::atof(argv[2]) : 1e-4;

    const auto hyperbolic = WarpingProfile::hyperbolic(2);
    const kernels::RadialModel model{
        .dim = 2, .correction = [hyperbolic](double t) { return hyperbolic.drift_correction(t); }, .radius = 1.0};
    const kernels::StepConfig cfg{.dt = dt, .seed = 7, .t_max = 20.0};
    const kernels::PathKernel kernel = [&](std::uint64_t i) { return kernels::radial_path(model, 0.0, cfg, i); };

    std::vector<kernels::PathOutcome> serial(static_cast<std::size_t>(paths));
    std::vector<kernels::PathOutcome> parallel(static_cast<std::size_t>(paths));

    auto t0 = std::chrono::steady_clock::now();
    kernels::run_serial(kernel, serial);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    kernels::run_parallel(kernel, parallel, 0);
    const double t_parallel = seconds_since(t0);

    const bool identical =
        std::memcmp(serial.data(), parallel.data(), serial.size() * sizeof(kernels::PathOutcome)) == 0;
    double steps = 0.0;
    for (const auto& o : serial) steps += 2.0 * o.time / dt;

    std::printf("paths=%ld dt=%g threads=%d\n", paths, dt, omp_get_max_threads());
    std::printf("serial    %8.3f s  %6.1f ns/step\n", t_serial, 1e9 * t_serial / steps);
    std::printf("openmp    %8.3f s  %6.1f ns/step  speedup %.2fx\n", t_parallel, 1e9 * t_parallel / steps,
                t_serial / t_parallel);
    std::printf("outcomes identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
