#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

namespace exitgeo::rng {

/// Philox4x32-10 block function (Salmon et al., SC'11). Stateless: the output
/// depends only on (counter, key), so any draw can be regenerated in any
/// order by any thread.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter generate(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
};

/// Independent draw families within one path.
enum class Stream : std::uint32_t {
    radial_normal = 0,
    height_normal = 1,
    radial_bridge = 2,
    height_bridge = 3,
};

/// Random-access variates for one Monte Carlo path, keyed by (seed, path).
/// The counter is (step, stream | attempt | block, path); draws never depend
/// on how paths are scheduled. block < 256.
class PathRandom {
public:
    PathRandom(std::uint64_t seed, std::uint64_t path)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          path_lo_(static_cast<std::uint32_t>(path)),
          path_hi_(static_cast<std::uint32_t>(path >> 32)) {}

    /// Two 53-bit uniforms in [0, 1).
    [[nodiscard]] std::pair<double, double> uniforms(Stream s, std::uint32_t step,
                                                     std::uint32_t block = 0) const {
        const auto out = Philox4x32::generate(
            {step, (static_cast<std::uint32_t>(s) << 16) | block, path_lo_, path_hi_}, key_);
        const std::uint64_t a = (std::uint64_t{out[0]} << 32) | out[1];
        const std::uint64_t b = (std::uint64_t{out[2]} << 32) | out[3];
        constexpr double scale = 0x1.0p-53;
        return {static_cast<double>(a >> 11) * scale, static_cast<double>(b >> 11) * scale};
    }

    [[nodiscard]] double uniform(Stream s, std::uint32_t step) const { return uniforms(s, step).first; }

    /// A point uniform in the unit disk (minus the origin) with its squared
    /// radius, by rejection. Retries advance an attempt field of the counter,
    /// so the result stays a pure function of (seed, path, stream, step, block).
    [[nodiscard]] std::array<double, 3> disk_point(Stream s, std::uint32_t step, std::uint32_t block = 0) const {
        for (std::uint32_t attempt = 0;; ++attempt) {
            const auto [u1, u2] = uniforms(s, step, block | ((attempt & 0xFFu) << 8));
            const double v1 = 2.0 * u1 - 1.0;
            const double v2 = 2.0 * u2 - 1.0;
            const double sq = v1 * v1 + v2 * v2;
            if (sq < 1.0 && sq > 0.0) return {v1, v2, sq};
        }
    }

    /// Two independent standard normals (Marsaglia polar method).
    [[nodiscard]] std::pair<double, double> normals(Stream s, std::uint32_t step,
                                                    std::uint32_t block = 0) const {
        const auto [v1, v2, sq] = disk_point(s, step, block);
        const double scale = std::sqrt(-2.0 * std::log(sq) / sq);
        return {v1 * scale, v2 * scale};
    }

private:
    Philox4x32::Key key_;
    std::uint32_t path_lo_;
    std::uint32_t path_hi_;
};

}  // namespace exitgeo::rng
