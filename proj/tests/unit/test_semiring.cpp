#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "generators.hpp"
#include "oracle.hpp"
#include "spectop/errors.hpp"
#include "spectop/semiring.hpp"

using namespace spectop;

TEST_CASE("B(n,i) tables follow the overflow rule") {
    for (int n = 2; n <= 9; ++n)
        for (int i = 0; i < n; ++i) {
            const auto r = bni(n, i);
            const auto o = oracle::bni(n, i);
            for (std::size_t a = 0; a < r.size(); ++a)
                for (std::size_t b = 0; b < r.size(); ++b) {
                    REQUIRE(r.add(a, b) == o.add[a][b]);
                    REQUIRE(r.mul(a, b) == o.mul[a][b]);
                }
            CHECK(r.proper() == (i != 0));
        }
    CHECK(bni(3, 1).add(2, 2) == 2);
    CHECK(bni(6, 3).mul(2, 2) == 4);
    CHECK(bni(6, 3).mul(2, 3) == 3);
}

TEST_CASE("bad parameters") {
    CHECK_THROWS_AS(bni(1, 0), BadParameters);
    CHECK_THROWS_AS(bni(5, 5), BadParameters);
    CHECK_THROWS_AS(bni(5, -1), BadParameters);
    CHECK_THROWS_AS(enumerate_ideals(bni(17, 0)), SizeLimitExceeded);
}

TEST_CASE("axioms are enforced") {
    SemiringTables t;
    t.carrier = {"0", "1"};
    t.add = {{0, 1}, {1, 1}};
    t.mul = {{0, 0}, {0, 1}};
    t.zero = 0;
    t.one = 1;
    CHECK_NOTHROW(validate_semiring(t));

    auto bad = t;
    bad.mul = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(validate_semiring(bad), AxiomViolation);

    bad = t;
    bad.add = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(validate_semiring(bad), AxiomViolation);

    bad = t;
    bad.carrier = {"0"};
    bad.add = {{0}};
    bad.mul = {{0}};
    bad.one = 0;
    try {
        validate_semiring(bad);
        FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
        CHECK(std::string(e.what()).find("zero differs from one") != std::string::npos);
    }
}

TEST_CASE("ideals and primes agree with subset enumeration") {
    for (int n = 2; n <= 12; ++n)
        for (int i = 0; i < n; ++i) {
            INFO("B(" << n << "," << i << ")");
            const auto r = bni(n, i);
            const auto o = oracle::bni(n, i);
            auto ideals = enumerate_ideals(r);
            std::vector<oracle::Mask> got;
            for (const auto& id : ideals) got.push_back(id.members.bits());
            std::sort(got.begin(), got.end());
            REQUIRE(got == oracle::ideals(o));

            std::vector<oracle::Mask> primes;
            for (const auto& id : ideals) {
                REQUIRE(is_prime(r, id) == is_prime_by_ideals(r, id, ideals));
                if (is_prime(r, id)) primes.push_back(id.members.bits());
            }
            std::sort(primes.begin(), primes.end());
            REQUIRE(primes == oracle::primes(o));

            const auto reg = regularity_predicates(r);
            REQUIRE(reg.von_neumann_regular.holds == oracle::von_neumann_regular(o));
            REQUIRE(reg.reduced.holds == oracle::reduced(o));
        }
}

TEST_CASE("ideal closure") {
    const auto r = bni(6, 3);
    CHECK(ideal_name(r, Ideal{ideal_closure(r, Subset::single(3))}) == "{0,3}");
    CHECK(ideal_name(r, Ideal{ideal_closure(r, Subset::single(2))}) == "{0,2,3,4,5}");
    CHECK(ideal_closure(r, Subset{}) == Subset::single(0));
}

TEST_CASE("spectrum of B(6,3) is a three-point chain") {
    const auto s = spectrum(bni(6, 3));
    REQUIRE(s.primes.size() == 3);
    CHECK(s.krull_dim == 2);
    CHECK(shape_label(s.space) == "C3");
}

TEST_CASE("products") {
    const auto p = product(bni(3, 2), bni(3, 2));
    CHECK(p.size() == 9);
    CHECK(p.name(0) == "(0,0)");
    CHECK(p.proper());
    CHECK_FALSE(p.semidomain());
    const auto s = spectrum(p);
    CHECK(s.primes.size() == 4);
    CHECK(s.krull_dim == 1);
    CHECK_THROWS_AS(product(bni(5, 0), bni(4, 0)), SizeLimitExceeded);
    CHECK(product(bni(2, 1), bni(2, 0)).size() == 4);
}
