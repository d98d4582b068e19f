#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ampcalc/algebra.hpp"
#include "ampcalc/generators.hpp"
#include "test_support.hpp"

using namespace ampcalc;

TEST_CASE("random_setup respects the option bounds") {
    const SetupGenOptions opts{4, 6, 3};
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const Setup s = random_setup(opts, rng);
        CHECK(s.num_sites() == 4);
        CHECK(s.num_steps() >= 1);
        CHECK(s.num_steps() <= 6);
        CHECK(s.filters().size() <= 3);
        for (const Filter& f : s.filters()) {
            CHECK(f.time() > s.source().time);
            CHECK(f.time() < s.sink().time);
        }
    }
}

TEST_CASE("generators are deterministic per seed") {
    const SetupGenOptions opts{3, 5, 3};
    Rng a(77), b(77), c(78);
    CHECK(random_setup(opts, a) == random_setup(opts, b));
    Rng a2(77), c2(78);
    CHECK(random_setup(opts, a2) != random_setup(opts, c2));
}

TEST_CASE("joinable pairs join and their parts do not overlap") {
    const SetupGenOptions opts{3, 5, 3};
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        const auto [a, b] = random_joinable_pair(opts, rng);
        REQUIRE(is_or_allowed(a, b));
        const OrJoinResult joined = or_join(a, b);
        const Filter* fa = a.filter_at(joined.witness.filter_time);
        const Filter* fb = b.filter_at(joined.witness.filter_time);
        REQUIRE(fa != nullptr);
        REQUIRE(fb != nullptr);
        CHECK(fa->open_sites() != fb->open_sites());
    }
}

TEST_CASE("joinable triples join pairwise and in both association orders") {
    const SetupGenOptions opts{3, 5, 3};
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto [a, b, c] = random_joinable_triple(opts, rng);
        REQUIRE(is_or_allowed(a, b));
        REQUIRE(is_or_allowed(b, c));
        REQUIRE(is_or_allowed(a, c));
        const Setup left = or_join(or_join(a, b).setup, c).setup;
        const Setup right = or_join(a, or_join(b, c).setup).setup;
        CHECK(left == right);
    }
}

TEST_CASE("chainable pairs compose forward and never backward") {
    const SetupGenOptions opts{3, 5, 3};
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        const auto [later, earlier] = random_chainable_pair(opts, rng);
        REQUIRE(is_and_allowed(later, earlier));
        CHECK_FALSE(is_and_allowed(earlier, later));
        const Setup chained = and_compose(later, earlier);
        CHECK(chained.source() == earlier.source());
        CHECK(chained.sink() == later.sink());
    }
}

TEST_CASE("chainable triples associate") {
    const SetupGenOptions opts{3, 6, 2};
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto [a, b, c] = random_chainable_triple(opts, rng);
        REQUIRE(is_and_allowed(a, b));
        REQUIRE(is_and_allowed(b, c));
        CHECK(and_compose(and_compose(a, b), c) == and_compose(a, and_compose(b, c)));
    }
}

TEST_CASE("distributive families expand the same way on both routes") {
    const SetupGenOptions opts{3, 6, 3};
    Rng rng(6);
    for (int i = 0; i < 100; ++i) {
        const bool solo_is_later = i % 2 == 0;
        const DistributiveFamily fam = random_distributive_family(opts, rng, solo_is_later);
        REQUIRE(is_or_allowed(fam.left, fam.right));
        const Setup join = or_join(fam.left, fam.right).setup;
        if (solo_is_later) {
            REQUIRE(is_and_allowed(fam.solo, join));
            CHECK(and_compose(fam.solo, join) ==
                  or_join(and_compose(fam.solo, fam.left), and_compose(fam.solo, fam.right))
                      .setup);
        } else {
            REQUIRE(is_and_allowed(join, fam.solo));
            CHECK(and_compose(join, fam.solo) ==
                  or_join(and_compose(fam.left, fam.solo), and_compose(fam.right, fam.solo))
                      .setup);
        }
    }
}

TEST_CASE("family generators validate their grid requirements") {
    Rng rng(7);
    const SetupGenOptions narrow{1, 5, 3};
    CHECK(test_support::thrown_code([&] { random_joinable_pair(narrow, rng); }) ==
          ErrorCode::BadInput);
    const SetupGenOptions two{2, 5, 3};
    CHECK(test_support::thrown_code([&] { random_joinable_triple(two, rng); }) ==
          ErrorCode::BadInput);
}
