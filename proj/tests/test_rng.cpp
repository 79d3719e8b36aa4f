#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exitgeo/rng.hpp"

#include <cmath>

using namespace exitgeo::rng;

TEST_CASE("Philox4x32-10 known-answer vectors") {
    using C = Philox4x32::Counter;
    CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("path streams are random access and distinct") {
    const PathRandom a(42, 7);
    const PathRandom b(42, 8);
    const PathRandom c(43, 7);
    CHECK(a.uniforms(Stream::radial_normal, 5) == a.uniforms(Stream::radial_normal, 5));
    CHECK(a.uniforms(Stream::radial_normal, 5) != a.uniforms(Stream::radial_normal, 6));
    CHECK(a.uniforms(Stream::radial_normal, 5) != a.uniforms(Stream::height_normal, 5));
    CHECK(a.uniforms(Stream::radial_normal, 5) != b.uniforms(Stream::radial_normal, 5));
    CHECK(a.uniforms(Stream::radial_normal, 5) != c.uniforms(Stream::radial_normal, 5));
}

TEST_CASE("normal moments") {
    const PathRandom r(1, 0);
    constexpr int n = 200000;
    double s1 = 0.0;
    double s2 = 0.0;
    double s4 = 0.0;
    double cross = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto [z0, z1] = r.normals(Stream::height_normal, i);
        s1 += z0 + z1;
        s2 += z0 * z0 + z1 * z1;
        s4 += z0 * z0 * z0 * z0 + z1 * z1 * z1 * z1;
        cross += z0 * z1;
    }
    CHECK(std::abs(s1 / (2 * n)) < 5 * std::sqrt(1.0 / (2 * n)));
    CHECK(std::abs(s2 / (2 * n) - 1.0) < 5 * std::sqrt(2.0 / (2 * n)));
    CHECK(std::abs(s4 / (2 * n) - 3.0) < 5 * std::sqrt(96.0 / (2 * n)));
    CHECK(std::abs(cross / n) < 5 * std::sqrt(1.0 / n));
}

TEST_CASE("uniforms lie in [0, 1)") {
    const PathRandom r(99, 3);
    double lo = 1.0;
    double hi = 0.0;
    for (std::uint32_t i = 0; i < 100000; ++i) {
        const auto [u, v] = r.uniforms(Stream::radial_bridge, i);
        lo = std::min({lo, u, v});
        hi = std::max({hi, u, v});
    }
    CHECK(lo >= 0.0);
    CHECK(hi < 1.0);
    CHECK(lo < 1e-3);
    CHECK(hi > 1.0 - 1e-3);
}
