#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "widthcalc/complexity.hpp"
#include "widthcalc/gen.hpp"
#include "widthcalc/index.hpp"
#include "widthcalc/moves.hpp"
#include "widthcalc/validate.hpp"

#include <algorithm>
#include <functional>

using namespace widthcalc;

namespace {

bool logged(const CheckLog& log, const std::string& name) {
    return std::find(log.passed.begin(), log.passed.end(), name) != log.passed.end();
}

std::string rejection(const std::function<void()>& f) {
    try {
        f();
    } catch (const MoveError& e) {
        return e.check();
    }
    return "";
}

bool decreased(const Complex& before, const Complex& after) {
    return compare(complexity(after), complexity(before)) == Order::LT;
}

// H meets T five times; each side holds one 3-punctured boundary sphere.
Complex boundary_pair() {
    Complex c;
    c.thick.push_back({"H", {0, 5}, "U", "D"});
    c.boundary.push_back({"B", {0, 3}, "U", false});
    c.boundary.push_back({"C", {0, 3}, "D", false});
    c.cbs.push_back({"U", "H", {"B"}, {3, 1, 0, 0}, false, false});
    c.cbs.push_back({"D", "H", {"C"}, {3, 1, 0, 0}, false, false});
    return c;
}

}  // namespace

TEST_CASE("compressing surfaces") {
    DiscData nonsep;
    CHECK(compress_surface({2, 3}, nonsep) == std::vector<Surface>{{1, 3}});
    DiscData through{1, false, ArcType::Vertical, std::nullopt};
    CHECK(compress_surface({1, 3}, through) == std::vector<Surface>{{0, 5}});
}

TEST_CASE("boundary reduction index identity") {
    SUBCASE("non-separating, disjoint from the graph") {
        auto c = fixtures::heegaard(2);
        CheckLog log;
        auto r = boundary_reduce(*c.find_cb("U"), c, DiscData{}, &log);
        CHECK(r.mu_before == 12);
        REQUIRE(r.pieces.size() == 1);
        CHECK(r.pieces[0].mu == 6);
        CHECK(logged(log, "boundary-reduction identity"));
    }
    SUBCASE("separating, disjoint from the graph") {
        auto c = fixtures::bridge_sphere(2, false);
        DiscData d{0, true, std::nullopt, DiscSplit{{0, 2}, {0, 2}, {}, {}, {0, 1, 0, 0}, {0, 1, 0, 0}}};
        auto r = boundary_reduce(*c.find_cb("U"), c, d);
        CHECK(r.mu_before == 8);
        REQUIRE(r.pieces.size() == 2);
        CHECK(r.pieces[0].mu + r.pieces[1].mu == 8 - 6 + 6);
    }
    SUBCASE("a sphere has no non-separating disc") {
        auto c = fixtures::bridge_sphere(2, false);
        CHECK_FALSE(rejection([&] { boundary_reduce(*c.find_cb("U"), c, DiscData{}); }).empty());
    }
}

TEST_CASE("consolidation removes a product region") {
    auto c = fixtures::chain(2, true);
    REQUIRE(validate(c).ok());
    CheckLog log;
    auto r = apply_consolidate(c, {"H1", "F0", std::nullopt, false}, &log);
    CHECK(validate(r).ok());
    CHECK(r.thick.size() == 1);
    CHECK(r.thin.empty());
    CHECK(complexity(r).size() == 1);
    CHECK(logged(log, "consolidation identity"));
    CHECK(logged(log, "consolidation removes one term"));
    CHECK(decreased(c, r));
    CHECK(pending_consolidations(c).size() == 1);
    CHECK(pending_consolidations(r).empty());
}

TEST_CASE("consolidation needs a product certificate") {
    auto c = fixtures::chain(2, false);
    CHECK(rejection([&] { apply_consolidate(c, {"H1", "F0", std::nullopt, false}); }) == "product certificate");
}

TEST_CASE("untelescoping two balls glued along a sphere") {
    auto c = fixtures::two_balls_glued();
    REQUIRE(validate(c).ok());
    const auto m = fixtures::two_balls_untelescope();

    auto h1 = apply_untelescope(c, m);
    CHECK(validate(h1).ok());
    CHECK(h1.thick.size() > c.thick.size());

    CheckLog log;
    auto r = elementary_thinning_sequence(c, m, &log);
    CHECK(validate(r).ok());
    CHECK(r.thick.size() == 2);
    CHECK(r.thin.size() == 1);
    CHECK(complexity(r) == ComplexityVector({18, 18}));
    for (const char* name : {"untelescope lower sum", "untelescope upper sum", "lower index of H- drops",
                             "upper index of H- preserved", "lower index of H+ preserved", "upper index of H+ drops"})
        CHECK_MESSAGE(logged(log, name), name);
    const auto lo = std::find_if(r.thick.begin(), r.thick.end(), [](auto& h) { return h.id == "H_lo"; });
    REQUIRE(lo != r.thick.end());
    CHECK(index_up(r, "H_lo") == 12);
    CHECK(index_down(r, "H_lo") == 6);
}

TEST_CASE("destabilization") {
    SUBCASE("stabilized Heegaard torus") {
        auto c = fixtures::heegaard(1);
        CheckLog log;
        auto r = apply_destabilize(c, {DestabKind::Stab, "H"}, &log);
        CHECK(r.thick[0].surface == Surface{0, 0});
        CHECK(complexity(c) == ComplexityVector({12}));
        CHECK(complexity(r) == ComplexityVector({0}));
        CHECK(logged(log, "result validates"));
    }
    SUBCASE("a sphere cannot be destabilized") {
        auto c = fixtures::bridge_sphere();
        CHECK_FALSE(rejection([&] { apply_destabilize(c, {DestabKind::Stab, "H"}); }).empty());
    }
    SUBCASE("meridional boundary destabilization moves the sphere across") {
        auto c = boundary_pair();
        REQUIRE(validate(c).ok());
        Destabilize m{DestabKind::MeridBdy, "H", Side::Upper, {"B"}, 0};
        auto r = apply_destabilize(c, m);
        CHECK(validate(r).ok());
        // 5 - |S cap T| + 2q
        CHECK(r.find_thick("H")->surface == Surface{0, 4});
        CHECK(r.find_boundary("B")->owner == "D");
        CHECK(decreased(c, r));
    }
}

TEST_CASE("unperturbing and undoing a removable path") {
    auto c = fixtures::bridge_sphere(2, false);
    REQUIRE(complexity(c) == ComplexityVector({16}));
    SUBCASE("bridge+bridge") {
        auto r = apply_unperturb(c, {"H", Side::Upper, MergeCase::BridgeBridge});
        CHECK(r.thick[0].surface == Surface{0, 2});
        CHECK(complexity(r) == ComplexityVector({8}));
    }
    SUBCASE("vertical+bridge needs a vertical arc") {
        CHECK_FALSE(rejection([&] { apply_unperturb(c, {"H", Side::Upper, MergeCase::VerticalBridge}); }).empty());
    }
    SUBCASE("removable path") {
        auto r = apply_undo_removable(c, {"H", Side::Lower});
        CHECK(validate(r).ok());
        CHECK(r.thick[0].surface == Surface{0, 2});
        CHECK(r.find_cb("D")->tangle.loops == 1);
        CHECK(decreased(c, r));
    }
}

TEST_CASE("every accepted move lowers complexity and keeps the flow acyclic") {
    Rng rng(41);
    GenConfig cfg;
    cfg.max_thick = 3;
    int applied = 0;
    for (int i = 0; i < 400; ++i) {
        auto c = gen_complex(cfg, rng);
        auto m = gen_move(c, rng);
        if (!m) continue;
        auto out = apply_move(c, *m);
        ++applied;
        INFO(describe(*m));
        CHECK(validate(out.result).ok());
        CHECK(thick_digraph(out.result).is_acyclic());
        CHECK(decreased(c, out.result));
    }
    CHECK(applied >= 100);
}
