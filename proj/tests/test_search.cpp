#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "widthcalc/gen.hpp"
#include "widthcalc/oracles.hpp"
#include "widthcalc/proposer.hpp"
#include "widthcalc/search.hpp"
#include "widthcalc/validate.hpp"

using namespace widthcalc;

namespace {

Complex two_tori() { return fixtures::disjoint_union(fixtures::heegaard(1, "a"), fixtures::heegaard(1, "b")); }

std::vector<Move> destab_both() {
    return {Destabilize{DestabKind::Stab, "Ha"}, Destabilize{DestabKind::Stab, "Hb"}};
}

}  // namespace

TEST_CASE("canonical hash ignores labels and order") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        auto c = gen_complex({}, rng);
        CHECK(canonical_hash(c) == canonical_hash(oracle::relabel(c, rng)));
    }
    CHECK(canonical_hash(fixtures::bridge_sphere()) != canonical_hash(fixtures::two_balls_glued()));
    CHECK(canonical_hash(fixtures::heegaard(1, "x")) == canonical_hash(fixtures::heegaard(1, "y")));
}

TEST_CASE("thin without moves is the identity") {
    auto c = fixtures::bridge_sphere();
    auto res = thin(c, EmptyProposer{});
    CHECK(res.trace.empty());
    CHECK_FALSE(res.cap_reached);
    CHECK(res.result == c);
}

TEST_CASE("scripted thinning of two glued balls") {
    auto c = fixtures::two_balls_glued();
    auto res = thin(c, ScriptedProposer({fixtures::two_balls_untelescope()}));
    REQUIRE(res.trace.size() == 1);
    CHECK(res.result.thick.size() == 2);
    CHECK(res.result.thin.size() == 1);
    CHECK(res.trace[0].before == ComplexityVector({24}));
    CHECK(res.trace[0].after == ComplexityVector({18, 18}));
    CHECK(res.trace[0].hash_after == canonical_hash(res.result));
}

TEST_CASE("trace vectors strictly decrease") {
    Rng rng(13);
    GenConfig cfg;
    cfg.max_thick = 2;
    cfg.max_genus = 2;
    cfg.max_punctures = 4;
    ProposerLimits lim;
    lim.discs_per_side = 8;
    lim.max_untelescopes = 16;
    ExhaustiveProposer p(lim);
    for (int i = 0; i < 30; ++i) {
        auto c = gen_complex(cfg, rng);
        auto res = thin(c, p);
        CHECK_FALSE(res.cap_reached);
        for (const auto& s : res.trace) CHECK(compare(s.after, s.before) == Order::LT);
        CHECK(validate(res.result).ok());
        CHECK(is_reduced(res.result, p).reduced);
    }
}

TEST_CASE("step cap") {
    auto res = thin(two_tori(), ScriptedProposer(destab_both()), {Policy::First, 0});
    CHECK(res.cap_reached);
    CHECK(res.trace.empty());
    auto one = thin(two_tori(), ScriptedProposer(destab_both()), {Policy::First, 1});
    CHECK(one.cap_reached);
    CHECK(one.trace.size() == 1);
}

TEST_CASE("policies are deterministic") {
    Rng rng(19);
    GenConfig cfg;
    cfg.max_thick = 2;
    ExhaustiveProposer p({8, 2, 16});
    for (int i = 0; i < 10; ++i) {
        auto c = gen_complex(cfg, rng);
        for (auto pol : {Policy::First, Policy::Greedy}) {
            auto a = thin(c, p, {pol});
            auto b = thin(c, p, {pol});
            CHECK(a.result == b.result);
            CHECK(a.trace.size() == b.trace.size());
        }
    }
}

TEST_CASE("rewrite graph of two independent destabilizations is a diamond") {
    auto g = rewrite_graph(two_tori(), ScriptedProposer(destab_both()));
    CHECK_FALSE(g.incomplete);
    // both single destabilizations give isomorphic complexes
    CHECK(g.nodes.size() == 3);
    CHECK(g.edges.size() == 3);
    REQUIRE(g.sinks().size() == 1);
    const auto& sink = g.nodes[g.sinks()[0]];
    CHECK(sink.terminal);
    CHECK(sink.vector == ComplexityVector({0, 0}));
    for (const auto& e : g.edges) CHECK(compare(g.nodes[e.to].vector, g.nodes[e.from].vector) == Order::LT);
    CHECK(g.to_dot().find("digraph") != std::string::npos);
}

TEST_CASE("rewrite graph respects its budget") {
    auto g = rewrite_graph(two_tori(), ScriptedProposer(destab_both()), {6, 1});
    CHECK(g.incomplete);
    CHECK(g.nodes.size() <= 1);
}

TEST_CASE("complex as DOT carries indices") {
    auto dot = complex_to_dot(fixtures::bridge_sphere());
    CHECK(dot.find("I_up") != std::string::npos);
    CHECK(dot.find("mu") != std::string::npos);
}
