#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "widthcalc/complexity.hpp"
#include "widthcalc/gen.hpp"
#include "widthcalc/index.hpp"
#include "widthcalc/oracles.hpp"
#include "widthcalc/validate.hpp"

using namespace widthcalc;

TEST_CASE("euler characteristic ignores punctures") {
    CHECK(euler_char({0, 0}) == 2);
    CHECK(euler_char({0, 4}) == 2);
    CHECK(euler_char({2, 1}) == -2);
}

TEST_CASE("mu on trivial profiles") {
    const std::vector<Surface> none;
    CHECK(mu_profile({0, 0}, none) == 0);
    CHECK(mu_profile({0, 2}, none) == 4);
    const std::vector<Surface> same{{1, 3}};
    CHECK(mu_profile({1, 3}, same) == 6);
    CHECK(is_empty_ball_profile({0, 0}, none));
    CHECK(is_arc_ball_profile({0, 2}, none));
    CHECK_FALSE(is_arc_ball_profile({0, 4}, none));
}

TEST_CASE("mu is even and matches the closed form on generated complexes") {
    Rng rng(11);
    GenConfig cfg;
    for (int i = 0; i < 300; ++i) {
        auto c = gen_complex(cfg, rng);
        for (const auto& cb : c.cbs) {
            const int m = mu(cb, c);
            CHECK(m % 2 == 0);
            CHECK(m == oracle::mu_closed_form(plus_surface(c, cb), minus_surfaces(c, cb), cb.tangle));
            if (!cb.minus.empty()) CHECK(m >= 6);
        }
    }
}

TEST_CASE("ghost arcs need punctured negative components") {
    TangleSummary one_ghost{0, 0, 1, 0};
    std::vector<Surface> two{{0, 3}, {0, 3}};
    CHECK(ghost_arcs_fit({0, 4}, two, one_ghost));
    CHECK_FALSE(ghost_arcs_fit({0, 4}, two, {0, 0, 2, 0}));
    std::vector<Surface> unpunctured{{0, 0}, {0, 0}};
    CHECK_FALSE(ghost_arcs_fit({0, 2}, unpunctured, one_ghost));
    CHECK(ghost_arcs_fit({0, 2}, unpunctured, {}));
}

TEST_CASE("fixtures validate") {
    CHECK(validate(fixtures::bridge_sphere()).ok());
    CHECK(validate(fixtures::bridge_sphere(3)).ok());
    CHECK(validate(fixtures::heegaard(2)).ok());
    CHECK(validate(fixtures::two_balls_glued()).ok());
    CHECK(validate(fixtures::chain(4, true)).ok());
}

TEST_CASE("validation names the broken invariant") {
    SUBCASE("closed flow line") {
        auto c = fixtures::chain(2);
        // second thin level back from H1's upper side into H0's lower side
        c.thin.push_back({"G", {0, 4}, "U1", "D0"});
        c.find_cb("U1")->minus = {"G"};
        c.find_cb("U1")->tangle = {4, 0, 0, 0};
        c.find_cb("D0")->minus = {"G"};
        c.find_cb("D0")->tangle = {4, 0, 0, 0};
        auto r = validate(c);
        CHECK(r.has("closed flow line"));
        CHECK(oracle::has_cycle(c));
        CHECK_FALSE(thick_digraph(c).is_acyclic());
    }
    SUBCASE("small boundary sphere") {
        auto c = fixtures::two_balls_glued();
        c.allow_small_boundary_spheres = false;
        CHECK(validate(c).has("small boundary sphere"));
    }
    SUBCASE("once-punctured thin sphere") {
        Complex c;
        c.thick.push_back({"A", {0, 1}, "UA", "DA"});
        c.thick.push_back({"B", {0, 1}, "UB", "DB"});
        c.thin.push_back({"F", {0, 1}, "UA", "DB"});
        c.cbs.push_back({"UA", "A", {"F"}, {1, 0, 0, 0}, false, false});
        c.cbs.push_back({"DA", "A", {}, {1, 0, 0, 0}, false, false});
        c.cbs.push_back({"UB", "B", {}, {1, 0, 0, 0}, false, false});
        c.cbs.push_back({"DB", "B", {"F"}, {1, 0, 0, 0}, false, false});
        CHECK(validate(c).has("once-punctured thin sphere"));
    }
    SUBCASE("puncture conservation") {
        auto c = fixtures::bridge_sphere();
        c.find_cb("U")->tangle.bridges = 2;
        CHECK_FALSE(validate(c).ok());
    }
    SUBCASE("genus feasibility") {
        auto c = fixtures::chain(2);
        c.find_thin("F0")->surface.genus = 1;
        CHECK(validate(c).has("genus feasibility"));
    }
    SUBCASE("product certificate") {
        auto c = fixtures::bridge_sphere(2, false);
        c.find_cb("U")->product = true;
        CHECK(validate(c).has("product certificate"));
    }
    SUBCASE("ball certificate") {
        auto c = fixtures::bridge_sphere(2, false);
        c.find_cb("D")->ball = true;
        CHECK(validate(c).has("ball certificate"));
    }
    SUBCASE("ghost arc bound") {
        Complex c;
        c.thick.push_back({"H", {0, 4}, "U", "D"});
        c.boundary.push_back({"B1", {0, 3}, "D", false});
        c.boundary.push_back({"B2", {0, 3}, "D", false});
        c.cbs.push_back({"U", "H", {}, {0, 2, 0, 0}, false, false});
        c.cbs.push_back({"D", "H", {"B1", "B2"}, {2, 1, 2, 0}, false, false});
        auto r = validate(c);
        CHECK(r.has("ghost arc bound"));
        c.find_cb("D")->tangle = {4, 0, 1, 0};
        CHECK(validate(c).ok());
    }
    SUBCASE("unresolved reference") {
        auto c = fixtures::bridge_sphere();
        c.find_cb("U")->minus = {"nowhere"};
        CHECK(validate(c).has("unresolved reference"));
    }
    SUBCASE("unique ids") {
        auto c = fixtures::bridge_sphere();
        c.cbs[1].id = "U";
        CHECK(validate(c).has("unique ids"));
    }
}

TEST_CASE("generated complexes are valid and acyclic") {
    Rng rng(5);
    GenConfig cfg;
    for (int i = 0; i < 500; ++i) {
        auto c = gen_complex(cfg, rng);
        auto r = validate(c);
        INFO(r.to_string());
        REQUIRE(r.ok());
        CHECK(thick_digraph(c).is_acyclic());
        CHECK_FALSE(oracle::has_cycle(c));
    }
}

TEST_CASE("reversal keeps validity") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        auto c = gen_complex({}, rng);
        CHECK(validate(reversed(c)).ok());
        CHECK(reversed(reversed(c)) == c);
    }
}
