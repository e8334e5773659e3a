#include "swheg/stairs.hpp"

#include "swheg/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace swheg;

TEST_CASE("slope is atan of rise over run") {
    // The published test-case table rounds to two decimals; the A1 row is
    // checked against the arctangent itself (see README on the 0.02 deg
    // misprint in that row).
    CHECK(slope_deg(Stair{260.0, 165.0}) ==
          doctest::Approx(rad2deg(std::atan2(165.0, 260.0))).epsilon(1e-12));
    CHECK(slope_deg(Stair{260.0, 165.0}) == doctest::Approx(32.3998).epsilon(1e-4));
    CHECK(slope_deg(Stair{300.0, 150.0}) == doctest::Approx(26.57).epsilon(2e-4));
    CHECK(slope_deg(Stair{340.0, 165.0}) == doctest::Approx(25.89).epsilon(2e-4));
    CHECK(slope_deg(Stair{300.0, 120.0}) == doctest::Approx(21.80).epsilon(2e-4));
    CHECK(slope_deg(Stair{300.0, 80.0}) == doctest::Approx(14.93).epsilon(2e-4));
    CHECK(slope_deg(Stair{300.0, 300.0}) == doctest::Approx(45.0).epsilon(1e-12));
}

TEST_CASE("slope is monotone and bounded") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dim(1.0, 2000.0);
    for (int i = 0; i < 1000; ++i) {
        const double l = dim(rng);
        const double h = dim(rng);
        const double s = slope_deg(Stair{l, h});
        CHECK(s > 0.0);
        CHECK(s < 90.0);
        CHECK(slope_deg(Stair{l, h + 1.0}) > s);
        CHECK(slope_deg(Stair{l + 1.0, h}) < s);
    }
}

TEST_CASE("classification of the reference cases") {
    CHECK(classify(Stair{300.0, 160.0}) == StairClass::A);
    CHECK(classify(Stair{260.0, 165.0}) == StairClass::A);
    CHECK(classify(Stair{340.0, 165.0}) == StairClass::B);
    CHECK(classify(Stair{300.0, 120.0}) == StairClass::C);
    CHECK(classify(Stair{300.0, 80.0}) == StairClass::C);
}

TEST_CASE("classification boundaries are closed deterministically") {
    CHECK(classify(Stair{300.0, 135.0}) == StairClass::A);  // shared A/B/C corner -> A
    CHECK(classify(Stair{240.0, 135.0}) == StairClass::A);
    CHECK(classify(Stair{450.0, 165.0}) == StairClass::B);
    CHECK(classify(Stair{240.0, 80.0}) == StairClass::C);
    CHECK(classify(Stair{300.0, 134.999}) == StairClass::C);
    CHECK(classify(Stair{300.001, 134.0}) == StairClass::Other);
    CHECK(classify(Stair{451.0, 150.0}) == StairClass::Other);
    CHECK(classify(Stair{239.9, 150.0}) == StairClass::Other);
    CHECK(classify(Stair{300.0, 166.0}) == StairClass::Other);
}

TEST_CASE("classification is a partition") {
    // The three class regions must be pairwise disjoint as implemented.
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> l_dim(200.0, 500.0);
    std::uniform_real_distribution<double> h_dim(60.0, 200.0);
    for (int i = 0; i < 2000; ++i) {
        const double l = l_dim(rng);
        const double h = h_dim(rng);
        const bool in_a = l >= 240.0 && l <= 300.0 && h >= 135.0 && h <= 165.0;
        const bool in_b = l > 300.0 && l <= 450.0 && h >= 135.0 && h <= 165.0;
        const bool in_c = l >= 240.0 && l <= 300.0 && h >= 80.0 && h < 135.0;
        CHECK(static_cast<int>(in_a) + static_cast<int>(in_b) + static_cast<int>(in_c) <= 1);
        const StairClass got = classify(Stair{l, h});
        if (in_a) CHECK(got == StairClass::A);
        if (in_b) CHECK(got == StairClass::B);
        if (in_c) CHECK(got == StairClass::C);
        if (!in_a && !in_b && !in_c) CHECK(got == StairClass::Other);
    }
}

TEST_CASE("staircase profile shape") {
    SUBCASE("single step without leads is an L") {
        const Polyline p = staircase_profile(Staircase{Stair{300.0, 160.0}, 1, 0.0, 0.0});
        REQUIRE(p.size() == 4);
        CHECK(p.back() == Vec2{300.0, 160.0});
    }
    SUBCASE("vertex count and extent") {
        const Staircase sc{Stair{300.0, 160.0}, 7, 500.0, 250.0};
        const Polyline p = staircase_profile(sc);
        REQUIRE(p.size() == 2 * 7 + 2);
        CHECK(p.back().x() == doctest::Approx(500.0 + 7 * 300.0 + 250.0));
        CHECK(p.back().y() == doctest::Approx(7 * 160.0));
    }
    SUBCASE("monotone in both coordinates") {
        const Polyline p = staircase_profile(Staircase{Stair{260.0, 140.0}, 5, 100.0, 100.0});
        for (std::size_t i = 1; i < p.size(); ++i) {
            CHECK(p[i].x() >= p[i - 1].x());
            CHECK(p[i].y() >= p[i - 1].y());
        }
    }
}

TEST_CASE("presets and validation") {
    CHECK(stair_preset("A1")->length_mm == 260.0);
    CHECK(stair_preset("C2")->height_mm == 80.0);
    CHECK(!stair_preset("D9").has_value());
    CHECK_THROWS_AS((void)slope_deg(Stair{0.0, 100.0}), BadInput);
    CHECK_THROWS_AS((void)staircase_profile(Staircase{Stair{300.0, 160.0}, 0, 0.0, 0.0}),
                    BadInput);
}
