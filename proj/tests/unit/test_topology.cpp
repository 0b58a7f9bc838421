#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "generators.hpp"
#include "oracle.hpp"
#include "spectop/errors.hpp"
#include "spectop/topology.hpp"

using namespace spectop;

namespace {

FiniteSpace sierpinski() { return FiniteSpace({"a", "b"}, {Subset{0b00}, Subset{0b10}, Subset{0b11}}); }
FiniteSpace discrete(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    std::vector<Subset> closed;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) closed.emplace_back(m);
    return FiniteSpace(names, closed);
}
FiniteSpace indiscrete2() { return FiniteSpace({"a", "b"}, {Subset{0b00}, Subset{0b11}}); }

}  // namespace

TEST_CASE("closed families are validated") {
    CHECK_THROWS_AS(FiniteSpace({"a", "b"}, {Subset{0b11}}), InvalidSpace);
    CHECK_THROWS_AS(FiniteSpace({"a", "b"}, {Subset{0b00}, Subset{0b01}, Subset{0b10}, Subset{0b11}, Subset{0b100}}),
                    InvalidSpace);
    CHECK_THROWS_AS(FiniteSpace({"a", "b", "c"}, {Subset{0}, Subset{0b001}, Subset{0b010}, Subset{0b111}}), InvalidSpace);
    CHECK(sierpinski().closed_sets().size() == 3);
}

TEST_CASE("closure, interior and kernel in the Sierpinski space") {
    const auto s = sierpinski();
    CHECK(s.closure(Subset{0b01}) == Subset{0b11});
    CHECK(s.closure(Subset{0b10}) == Subset{0b10});
    CHECK(s.kernel(Subset{0b10}) == Subset{0b11});
    CHECK(s.kernel(Subset{0b01}) == Subset{0b01});
    CHECK(s.interior(Subset{0b10}) == Subset{});
    const auto pc = classify_points(s);
    CHECK(pc[0].isolated);
    CHECK_FALSE(pc[0].regular_open);
    CHECK(pc[1].closed);
}

TEST_CASE("Sierpinski space") {
    const auto r = separation_report(sierpinski());
    CHECK(r.level == TLevel::t_half);
    CHECK(r.krull_dim == 1);
    CHECK(r.normal.holds);
    CHECK(r.completely_normal.holds);
    CHECK_FALSE(r.perfectly_normal.holds);
    CHECK_FALSE(r.regular.holds);
    CHECK(r.ultraconnected.holds);
    CHECK(r.hyperconnected.holds);
    CHECK(shape_label(sierpinski()) == "C2");
}

TEST_CASE("discrete spaces are T6 and Stone") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto r = separation_report(discrete(n));
        CHECK(r.level == TLevel::t6);
        CHECK(r.stone.holds);
        CHECK(r.krull_dim == 0);
        CHECK(shape_label(discrete(n)) == "P" + std::to_string(n));
    }
}

TEST_CASE("the indiscrete pair is not T0") {
    const auto r = separation_report(indiscrete2());
    CHECK(r.level == TLevel::none);
    CHECK_FALSE(r.t0.holds);
    CHECK(r.anti_hausdorff.holds);
    CHECK(shape_label(indiscrete2()) == "other");
}

TEST_CASE("to_string of T-levels") {
    CHECK(to_string(TLevel::t_quarter) == "T1/4");
    CHECK(to_string(TLevel::t2_half) == "T2.5");
    CHECK(to_string(TLevel::t6) == "T6");
}

TEST_CASE("random spaces agree with the definitions") {
    std::mt19937_64 rng(20261018);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const auto s = testgen::random_space(rng, n);
        const auto raw = testgen::raw_space(s);
        const auto r = separation_report(s);
        INFO("trial " << trial << " n=" << n);
        REQUIRE(r.t0.holds == oracle::t0(raw));
        REQUIRE(r.t_quarter.holds == oracle::t_quarter(raw));
        REQUIRE(r.t_half.holds == oracle::t_half(raw));
        REQUIRE(r.t_three_quarter.holds == oracle::t_three_quarter(raw));
        REQUIRE(r.t1.holds == oracle::t1(raw));
        REQUIRE(r.t2.holds == oracle::t2(raw));
        REQUIRE(r.t2_half.holds == oracle::t2_half(raw));
        REQUIRE(r.regular.holds == oracle::regular(raw));
        REQUIRE(r.completely_regular.holds == oracle::completely_regular(raw));
        REQUIRE(r.normal.holds == oracle::normal(raw));
        REQUIRE(r.completely_normal.holds == oracle::completely_normal(raw));
        REQUIRE(r.perfectly_normal.holds == oracle::perfectly_normal(raw));
        REQUIRE(r.hyperconnected.holds == oracle::hyperconnected(raw));
        REQUIRE(r.ultraconnected.holds == oracle::ultraconnected(raw));
        REQUIRE(r.extremely_non_regular.holds == oracle::extremely_non_regular(raw));
        REQUIRE(r.extremely_non_normal.holds == oracle::extremely_non_normal(raw));
        REQUIRE(to_string(r.level) == oracle::t_level(raw));
        if (r.t0.holds) REQUIRE(r.krull_dim == oracle::krull_dim(raw));
        REQUIRE(r.anti_normal.has_value());
        REQUIRE(r.anti_normal->holds == oracle::anti_normal(raw));
        for (const auto& pc : classify_points(s)) {
            REQUIRE(pc.closed == oracle::is_point_closed(raw, pc.point));
            REQUIRE(pc.isolated == oracle::is_point_isolated(raw, pc.point));
            REQUIRE(pc.regular_open == oracle::is_point_regular_open(raw, pc.point));
        }
    }
}

TEST_CASE("homeomorphism search agrees with permutation search") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto a = testgen::random_space(rng, n);
        const auto b = testgen::random_space(rng, n);
        const auto ra = testgen::raw_space(a), rb = testgen::raw_space(b);
        const auto map = find_homeomorphism(a, b);
        REQUIRE(map.has_value() == oracle::homeomorphic(ra, rb));
        if (map) REQUIRE(oracle::is_homeomorphism(ra, rb, *map));
        REQUIRE(homeomorphic(a, b).holds == map.has_value());
    }
}

TEST_CASE("homeomorphism search has a size limit") {
    CHECK_THROWS_AS(find_homeomorphism(discrete(11), discrete(11)), SizeLimitExceeded);
    Limits small;
    small.max_subspace_points = 2;
    CHECK_THROWS_AS(anti_normal(discrete(3), small), SizeLimitExceeded);
    const auto r = separation_report(discrete(3), small);
    CHECK_FALSE(r.anti_normal.has_value());
    CHECK_FALSE(r.cn_subspace_route.has_value());
}

TEST_CASE("random subspaces keep the induced topology") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        const auto s = testgen::random_space(rng, n);
        const Subset y{(rng() % ((std::uint64_t{1} << n) - 1)) + 1};
        const auto sub = s.subspace(y);
        REQUIRE(testgen::raw_space(sub).closed == testgen::raw_space(s).subspace(y.bits()).closed);
    }
}
