#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "widthcalc/gen.hpp"
#include "widthcalc/json_io.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace widthcalc;
using nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + WIDTHCALC_BIN + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string instance(const std::string& name) { return std::string(WIDTHCALC_INSTANCES) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("widthcalc_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("complex round trip") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        auto c = gen_complex({}, rng);
        CHECK(complex_from_json(parse_document(to_json(c).dump())) == c);
    }
    auto g = fixtures::two_balls_glued();
    CHECK(complex_from_json(to_json(g)) == g);
}

TEST_CASE("move round trip") {
    std::vector<Move> moves{
        Consolidate{"H1", "F0", TangleSummary{4, 0, 0, 0}, true},
        fixtures::two_balls_untelescope(),
        Destabilize{DestabKind::MeridGhostBdy, "H", Side::Lower, {"B", "C"}, 1, ArcType::Ghost, std::nullopt, std::nullopt},
        Unperturb{"H", Side::Lower, MergeCase::VerticalBridge},
        UndoRemovable{"H", Side::Upper, TangleSummary{0, 1, 0, 0}, TangleSummary{0, 1, 0, 1}},
    };
    for (const auto& m : moves) {
        auto back = move_from_json(parse_document(to_json(m).dump()));
        CHECK(to_json(back) == to_json(m));
        CHECK(describe(back) == describe(m));
    }
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(parse_document("{\"thick\": ["), SchemaError);
    CHECK_THROWS_AS(complex_from_json(json{{"thick", 3}}), SchemaError);
    CHECK_THROWS_AS(move_from_json(json{{"kind", "teleport"}}), SchemaError);
    CHECK_THROWS_AS(surface_from_json(json{{"genus", "one"}, {"punctures", 0}}), SchemaError);
}

TEST_CASE("cli validate") {
    auto ok = run("validate " + instance("bridge_sphere.json"));
    CHECK(ok.status == 0);
    CHECK(ok.out.find("\"valid\": true") != std::string::npos);

    auto c = fixtures::two_balls_glued();
    c.allow_small_boundary_spheres = false;
    auto bad = run("validate " + write_temp("small.json", to_json(c).dump()));
    CHECK(bad.status == 1);
    CHECK(bad.out.find("small boundary sphere") != std::string::npos);

    CHECK(run("validate " + write_temp("trunc.json", "{\"thick\": [")).status == 2);
    CHECK(run("validate /nonexistent/instance.json").status == 2);
    CHECK(run("frobnicate").status == 2);
}

TEST_CASE("cli complexity") {
    auto r = run("complexity " + instance("two_balls_glued.json"));
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["vector"] == json::array({24}));
    CHECK(run("complexity " + instance("bridge_sphere.json") + " --format dot").out.find("digraph") !=
          std::string::npos);
}

TEST_CASE("cli apply") {
    auto r = run("apply " + instance("two_balls_glued.json"));
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["report"][0]["after"] == json::array({18, 18}));

    auto chain = write_temp("chain.json", to_json(fixtures::chain(2)).dump());
    auto mv = write_temp("consolidate.json", to_json(Move{Consolidate{"H1", "F0", std::nullopt, false}}).dump());
    auto rej = run("apply " + chain + " --move " + mv);
    CHECK(rej.status == 1);
    CHECK(rej.out.find("product certificate") != std::string::npos);
}

TEST_CASE("cli thin") {
    auto r = run("thin " + instance("two_balls_glued.json") + " --policy greedy");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("\"terminal\":true") != std::string::npos);

    auto tori = fixtures::disjoint_union(fixtures::heegaard(1, "a"), fixtures::heegaard(1, "b"));
    auto capped = run("thin " + write_temp("tori.json", to_json(tori).dump()) + " --proposer exhaustive --cap 1");
    CHECK(capped.status == 0);
    CHECK(capped.out.find("cap reached") != std::string::npos);
}

TEST_CASE("cli explore and gen") {
    auto r = run("explore " + instance("two_balls_glued.json") + " --format dot");
    CHECK(r.status == 0);
    CHECK(r.out.find("digraph") != std::string::npos);

    auto a = run("gen --seed 5 --max-thick 3");
    auto b = run("--seed 5 gen --max-thick 3");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("seed: 5") != std::string::npos);
    auto env = run("gen --seed 5 --max-thick 3", "WIDTHCALC_SEED=6");
    CHECK(env.out.find("seed: 6") != std::string::npos);
}
