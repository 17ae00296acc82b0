#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "widthcalc/complexity.hpp"
#include "widthcalc/gen.hpp"
#include "widthcalc/validate.hpp"

using namespace widthcalc;

TEST_CASE("generator is deterministic in its seed") {
    GenConfig cfg;
    Rng a(99), b(99);
    for (int i = 0; i < 50; ++i) CHECK(gen_complex(cfg, a) == gen_complex(cfg, b));
}

TEST_CASE("generator respects its bounds and covers both thin cases") {
    GenConfig cfg;
    cfg.max_thick = 5;
    Rng rng(1234);
    int with_thin = 0, without_thin = 0, with_boundary = 0;
    for (int i = 0; i < 2000; ++i) {
        auto c = gen_complex(cfg, rng);
        REQUIRE(validate(c).ok());
        CHECK(c.thick.size() >= 1);
        CHECK(c.thick.size() <= 5);
        for (const auto& h : c.thick) CHECK(h.surface.genus <= cfg.max_genus);
        (c.thin.empty() ? without_thin : with_thin) += 1;
        with_boundary += c.boundary.empty() ? 0 : 1;
    }
    CHECK(with_thin > 100);
    CHECK(without_thin > 100);
    CHECK(with_boundary > 100);
}

TEST_CASE("no-boundary configuration") {
    GenConfig cfg;
    cfg.allow_boundary = false;
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
        auto c = gen_complex(cfg, rng);
        CHECK(validate(c).ok());
        CHECK(c.boundary.empty());
    }
}

TEST_CASE("generated moves apply") {
    Rng rng(77);
    int found = 0;
    for (int i = 0; i < 300; ++i) {
        auto c = gen_complex({}, rng);
        auto m = gen_move(c, rng);
        if (!m) continue;
        ++found;
        CHECK_NOTHROW(apply_move(c, *m));
    }
    CHECK(found > 50);
}

TEST_CASE("shrinking yields strictly smaller valid complexes") {
    SUBCASE("chain") {
        auto c = fixtures::chain(4);
        auto smaller = shrink(c);
        REQUIRE_FALSE(smaller.empty());
        bool three = false;
        for (const auto& s : smaller) {
            CHECK(validate(s).ok());
            CHECK(shrink_size(s) < shrink_size(c));
            three = three || s.thick.size() == 3;
        }
        CHECK(three);
    }
    SUBCASE("random") {
        Rng rng(55);
        for (int i = 0; i < 100; ++i) {
            auto c = gen_complex({}, rng);
            for (const auto& s : shrink(c)) {
                CHECK(validate(s).ok());
                CHECK(shrink_size(s) < shrink_size(c));
            }
        }
    }
    SUBCASE("components") {
        auto c = fixtures::disjoint_union(fixtures::heegaard(1, "a"), fixtures::bridge_sphere());
        auto parts = components(c);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].thick.size() == 1);
        CHECK(parts[1].thick.size() == 1);
    }
}
