#include "doctest.h"

#include <cmath>
#include <vector>

#include "buffon/sampling.hpp"
#include "scripted_source.hpp"

using namespace buffon;
using doctest::Approx;

TEST_CASE("Philox4x32-10 known-answer vectors") {
    using B = Philox4x32::Block;
    CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("sample_rotation: range, distinctness, determinism") {
    Stream a({1, 0});
    const double r0 = sample_rotation(a);
    const double r1 = sample_rotation(a);
    CHECK(r0 != r1);
    for (double r : {r0, r1}) {
        CHECK(r >= 0.0);
        CHECK(r < kTwoPi);
    }
    Stream b({1, 0});
    CHECK(sample_rotation(b) == r0);
    CHECK(sample_rotation(b) == r1);
    for (int i = 0; i < 1000; ++i) CHECK(sample_rotation(a) == sample_rotation(b));
}

TEST_CASE("sample_rotation: mean of 10^6 draws is near pi") {
    Stream s({1, 0});
    double sum = 0.0;
    constexpr int n = 1'000'000;
    for (int i = 0; i < n; ++i) {
        const double r = sample_rotation(s);
        REQUIRE(r < kTwoPi);
        sum += r;
    }
    CHECK(std::abs(sum / n - std::numbers::pi) < 0.01);
}

TEST_CASE("largest uniform stays below the upper bound") {
    ScriptedSource top{{1.0 - 0x1.0p-53}};
    CHECK(sample_rotation(top) < kTwoPi);
    CHECK(sample_offset(top, 1.0) < 1.0);
    CHECK(sample_offset(top, 17320.5) < 17320.5);
    CHECK(sample_offset(top, 3.0) < 3.0);
}

TEST_CASE("sample_offset: ranges and errors") {
    Stream s({2, 0});
    for (int i = 0; i < 10000; ++i) {
        const double a = sample_offset(s, 1.0);
        CHECK((a >= 0.0 && a < 1.0));
        const double b = sample_offset(s, 17320.5);
        CHECK((b >= 0.0 && b < 17320.5));
    }
    CHECK_THROWS_AS(sample_offset(s, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(sample_offset(s, -1.0), std::invalid_argument);
}

TEST_CASE("sample_offset: decile CDF and chi-square over 10^6 draws") {
    Stream s({3, 0});
    constexpr int n = 1'000'000;
    std::vector<int> bins(100, 0);
    for (int i = 0; i < n; ++i) bins[static_cast<int>(sample_offset(s, 1.0) * 100.0)]++;

    int cum = 0;
    for (int d = 1; d <= 9; ++d) {
        for (int b = (d - 1) * 10; b < d * 10; ++b) cum += bins[b];
        CHECK(std::abs(static_cast<double>(cum) / n - d / 10.0) < 0.005);
    }

    double chi2 = 0.0;
    const double expected = n / 100.0;
    for (int c : bins) chi2 += (c - expected) * (c - expected) / expected;
    // Upper 0.001 quantile of chi-square with 99 degrees of freedom.
    CHECK(chi2 < 148.23);
}

TEST_CASE("sample_cast: fixed draw order") {
    Stream a({1, 0});
    Stream b({1, 0});
    const CastSample c = sample_cast(a, 1.0);
    CHECK(c.rotation == sample_rotation(b));
    CHECK(c.offset_x == sample_offset(b, 1.0));
    CHECK(c.offset_y == sample_offset(b, 1.0));

    ScriptedSource script{{0.5, 0.25, 0.75}};
    const CastSample d = sample_cast(script, 2.0);
    CHECK(d.rotation == Approx(std::numbers::pi));
    CHECK(d.offset_x == 0.5);
    CHECK(d.offset_y == 1.5);
}

TEST_CASE("sample_cast: streams differ and ranges hold") {
    Stream s0({1, 0});
    Stream s1({1, 1});
    const CastSample a = sample_cast(s0, 1.0);
    const CastSample b = sample_cast(s1, 1.0);
    CHECK(a.rotation != b.rotation);
    CHECK(a.offset_x != b.offset_x);
    CHECK(a.offset_y != b.offset_y);

    Stream s({99, 7});
    int out_of_range = 0;
    for (int i = 0; i < 100000; ++i) {
        const CastSample c = sample_cast(s, 1.0);
        if (!(c.rotation >= 0.0 && c.rotation < kTwoPi)) ++out_of_range;
        if (!(c.offset_x >= 0.0 && c.offset_x < 1.0)) ++out_of_range;
        if (!(c.offset_y >= 0.0 && c.offset_y < 1.0)) ++out_of_range;
    }
    CHECK(out_of_range == 0);
}

TEST_CASE("streams 0 and 1 are uncorrelated") {
    Stream s0({42, 0});
    Stream s1({42, 1});
    constexpr int n = 100000;
    std::vector<double> a(n), b(n);
    double ma = 0.0, mb = 0.0;
    for (int i = 0; i < n; ++i) {
        a[i] = sample_rotation(s0);
        b[i] = sample_rotation(s1);
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (int i = 0; i < n; ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    CHECK(std::abs(sab / std::sqrt(saa * sbb)) < 0.01);
}

TEST_CASE("seed high bits and stream high bits matter") {
    Stream a({1, 0});
    Stream b({1 | (1ull << 40), 0});
    Stream c({1, 1ull << 40});
    const std::uint64_t x = a.next_u64();
    CHECK(x != b.next_u64());
    CHECK(x != c.next_u64());
}
