#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "widthcalc/complexity.hpp"
#include "widthcalc/gen.hpp"
#include "widthcalc/index.hpp"
#include "widthcalc/oracles.hpp"
#include "widthcalc/validate.hpp"

using namespace widthcalc;

namespace {

// H -> J along a 4-punctured thin sphere; J's upper side holds a boundary
// sphere, so each of H-up, J-down, J-up is a product-shaped profile (mu 6).
Complex two_level_chain() {
    Complex c;
    c.thick.push_back({"H", {0, 4}, "UH", "DH"});
    c.thick.push_back({"J", {0, 4}, "UJ", "DJ"});
    c.thin.push_back({"F", {0, 4}, "UH", "DJ"});
    c.boundary.push_back({"B", {0, 4}, "UJ", false});
    c.cbs.push_back({"UH", "H", {"F"}, {4, 0, 0, 0}, false, false});
    c.cbs.push_back({"DH", "H", {}, {0, 2, 0, 0}, false, false});
    c.cbs.push_back({"UJ", "J", {"B"}, {4, 0, 0, 0}, false, false});
    c.cbs.push_back({"DJ", "J", {"F"}, {4, 0, 0, 0}, false, false});
    return c;
}

}  // namespace

TEST_CASE("single bridge sphere") {
    auto c = fixtures::bridge_sphere();
    CHECK(index_up(c, "H") == 4);
    CHECK(index_down(c, "H") == 4);
    CHECK(complexity(c) == ComplexityVector({8}));
}

TEST_CASE("upper index along a chain") {
    auto c = two_level_chain();
    REQUIRE(validate(c).ok());
    CHECK(reach_up(c, "H") == std::set<std::string>{"H", "J"});
    CHECK(reach_down(c, "J") == std::set<std::string>{"H", "J"});
    // 6 - 6*2 + mu(UH) + mu(UJ)
    CHECK(index_up(c, "H") == 6);
    CHECK(index_down(c, "H") == 8);
    CHECK(index_up(c, "J") == 6);
    CHECK(index_down(c, "J") == 6 - 12 + 6 + 8);
    auto rows = index_table(c);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].total() == 14);
    CHECK(complexity(c) == ComplexityVector({14, 14}));
}

TEST_CASE("two balls glued along a sphere") {
    auto c = fixtures::two_balls_glued();
    CHECK(complexity(c) == ComplexityVector({24}));
}

TEST_CASE("vectors sort and compare with padding") {
    ComplexityVector v({2, 8, 4});
    CHECK(v.terms() == std::vector<int>{8, 4, 2});
    CHECK(v.sum() == 14);
    CHECK(v.without(0).terms() == std::vector<int>{4, 2});
    CHECK(compare(ComplexityVector({4}), ComplexityVector({4, 0})) == Order::LT);
    CHECK(compare(ComplexityVector({6}), ComplexityVector({4, 4, 4})) == Order::GT);
    CHECK(compare(ComplexityVector({4, 2}), ComplexityVector({4, 2})) == Order::EQ);
    CHECK(compare(ComplexityVector(), ComplexityVector({0})) == Order::LT);
}

TEST_CASE("compare agrees with the padded oracle") {
    Rng rng(3);
    std::uniform_int_distribution<int> len(0, 5), term(0, 6);
    for (int i = 0; i < 2000; ++i) {
        std::vector<int> a(len(rng)), b(len(rng));
        for (auto& x : a) x = 2 * term(rng);
        for (auto& x : b) x = 2 * term(rng);
        ComplexityVector va(a), vb(b);
        CHECK(compare(va, vb) == oracle::compare_padded(va.terms(), vb.terms()));
    }
}

TEST_CASE("reachability and indices against path enumeration") {
    Rng rng(23);
    for (int i = 0; i < 400; ++i) {
        auto c = gen_complex({}, rng);
        for (const auto& h : c.thick) {
            CHECK(reach_up(c, h.id) == oracle::reach_up_paths(c, h.id));
            CHECK(reach_down(c, h.id) == oracle::reach_down_paths(c, h.id));
        }
        for (const auto& r : index_table(c)) {
            CHECK(r.index_up >= 0);
            CHECK(r.index_down >= 0);
            CHECK(r.index_up % 2 == 0);
        }
    }
}

TEST_CASE("reversal swaps upper and lower indices") {
    Rng rng(29);
    for (int i = 0; i < 300; ++i) {
        auto c = gen_complex({}, rng);
        auto r = reversed(c);
        for (const auto& h : c.thick) {
            CHECK(index_up(c, h.id) == index_down(r, h.id));
            CHECK(index_down(c, h.id) == index_up(r, h.id));
        }
        CHECK(complexity(c) == complexity(r));
    }
}

TEST_CASE("complexity is invariant under relabelling") {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        auto c = gen_complex({}, rng);
        CHECK(complexity(c) == complexity(oracle::relabel(c, rng)));
    }
}
