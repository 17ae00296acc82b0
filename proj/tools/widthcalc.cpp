#include "widthcalc/acceptance.hpp"
#include "widthcalc/complexity.hpp"
#include "widthcalc/gen.hpp"
#include "widthcalc/index.hpp"
#include "widthcalc/json_io.hpp"
#include "widthcalc/proposer.hpp"
#include "widthcalc/search.hpp"
#include "widthcalc/validate.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace widthcalc;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kRejected = 1, kIo = 2 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::uint64_t effective_seed(std::uint64_t flag) {
    if (const char* env = std::getenv("WIDTHCALC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw IoError(std::string("WIDTHCALC_SEED is not an integer: ") + env);
        }
    }
    return flag;
}

json complexity_report(const Complex& c) {
    json rows = json::array();
    for (const auto& r : index_table(c))
        rows.push_back({{"id", r.id},
                        {"mu_up", r.mu_up},
                        {"mu_down", r.mu_down},
                        {"I_up", r.index_up},
                        {"I_down", r.index_down},
                        {"I", r.total()}});
    return {{"rows", rows}, {"vector", to_json(complexity(c))}};
}

int load_valid(const std::string& path, Complex& c, json* doc = nullptr) {
    auto j = read_json(path);
    c = complex_from_json(j);
    if (doc) *doc = j;
    auto r = validate(c);
    if (!r.ok()) {
        std::cerr << "invalid complex:\n" << r.to_string();
        return kRejected;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"widthcalc: index, complexity and certified thinning moves for oriented multiple bridge surfaces"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    std::size_t cap = 1'000'000;
    std::string policy = "first";
    std::string format = "json";
    bool quiet = false;
    app.add_option("--seed", seed, "random seed (WIDTHCALC_SEED overrides)");
    app.add_option("--cap", cap, "step cap for thin");
    app.add_option("--policy", policy, "move choice for thin")->check(CLI::IsMember({"first", "greedy"}));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}));
    app.add_flag("--quiet", quiet, "suppress per-step output");

    std::string file;
    auto* validate_cmd = app.add_subcommand("validate", "check every structural invariant");
    validate_cmd->add_option("file", file, "instance JSON")->required();

    auto* complexity_cmd = app.add_subcommand("complexity", "per-level index table and complexity vector");
    complexity_cmd->add_option("file", file, "instance JSON")->required();

    std::vector<std::string> move_files;
    auto* apply_cmd = app.add_subcommand("apply", "apply moves and report the checks that passed");
    apply_cmd->add_option("file", file, "instance JSON")->required();
    apply_cmd->add_option("--move", move_files, "move JSON file, repeatable; defaults to the instance's \"moves\"");

    std::string proposer_kind = "auto";
    auto* thin_cmd = app.add_subcommand("thin", "rewrite until no move applies");
    thin_cmd->add_option("file", file, "instance JSON")->required();
    thin_cmd->add_option("--proposer", proposer_kind, "auto uses the instance's moves when present")
        ->check(CLI::IsMember({"auto", "exhaustive", "script"}));

    RewriteConfig rw;
    auto* explore_cmd = app.add_subcommand("explore", "rewrite graph reachable from the instance");
    explore_cmd->add_option("file", file, "instance JSON")->required();
    explore_cmd->add_option("--depth", rw.max_depth, "depth cap");
    explore_cmd->add_option("--budget", rw.node_budget, "node budget");
    explore_cmd->add_option("--proposer", proposer_kind)->check(CLI::IsMember({"auto", "exhaustive", "script"}));

    GenConfig gcfg;
    auto* gen_cmd = app.add_subcommand("gen", "random valid instance");
    gen_cmd->add_option("--max-thick", gcfg.max_thick);
    gen_cmd->add_option("--max-genus", gcfg.max_genus);
    gen_cmd->add_option("--max-punctures", gcfg.max_punctures);
    gen_cmd->add_option("--max-ports", gcfg.max_ports);
    bool no_boundary = false;
    gen_cmd->add_flag("--no-boundary", no_boundary);

    int scale_down = 1;
    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
    selftest_cmd->add_option("--scale-down", scale_down, "divide sample counts")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kIo;
    }

    auto pick_proposer = [&](const json& doc) -> std::unique_ptr<MoveProposer> {
        auto script = moves_from_json(doc);
        if (proposer_kind == "script" || (proposer_kind == "auto" && !script.empty()))
            return std::make_unique<ScriptedProposer>(script);
        return std::make_unique<ExhaustiveProposer>();
    };

    try {
        if (validate_cmd->parsed()) {
            auto c = complex_from_json(read_json(file));
            auto r = validate(c);
            json out{{"valid", r.ok()}, {"violations", json::array()}};
            for (const auto& v : r.violations)
                out["violations"].push_back({{"invariant", v.invariant}, {"id", v.id}, {"detail", v.detail}});
            std::cout << out.dump(2) << '\n';
            if (!r.ok()) std::cerr << r.to_string();
            return r.ok() ? kOk : kRejected;
        }
        if (complexity_cmd->parsed()) {
            Complex c;
            if (int rc = load_valid(file, c)) return rc;
            if (format == "dot") std::cout << complex_to_dot(c);
            else std::cout << complexity_report(c).dump(2) << '\n';
            return kOk;
        }
        if (apply_cmd->parsed()) {
            Complex c;
            json doc;
            if (int rc = load_valid(file, c, &doc)) return rc;
            std::vector<Move> moves;
            for (const auto& f : move_files) {
                auto j = read_json(f);
                if (j.is_array())
                    for (const auto& m : j) moves.push_back(move_from_json(m));
                else
                    moves.push_back(move_from_json(j));
            }
            if (move_files.empty()) moves = moves_from_json(doc);
            json report = json::array();
            for (const auto& m : moves) {
                auto before = complexity(c);
                try {
                    auto out = apply_move(c, m);
                    c = std::move(out.result);
                    report.push_back({{"move", to_json(m)},
                                      {"before", to_json(before)},
                                      {"after", to_json(complexity(c))},
                                      {"checks", out.log.passed}});
                } catch (const MoveError& e) {
                    std::cerr << "rejected: " << describe(m) << "\n  " << e.what() << '\n';
                    return kRejected;
                }
            }
            if (format == "dot") {
                std::cout << complex_to_dot(c);
            } else {
                std::cout << json{{"result", to_json(c)}, {"report", report}}.dump(2) << '\n';
            }
            return kOk;
        }
        if (thin_cmd->parsed()) {
            Complex c;
            json doc;
            if (int rc = load_valid(file, c, &doc)) return rc;
            auto proposer = pick_proposer(doc);
            ThinConfig cfg;
            cfg.cap = cap;
            cfg.policy = policy == "greedy" ? Policy::Greedy : Policy::First;
            auto res = thin(c, *proposer, cfg);
            if (!quiet)
                for (const auto& s : res.trace) std::cout << to_json(s).dump() << '\n';
            if (format == "dot") {
                std::cout << complex_to_dot(res.result);
            } else {
                json last{{"terminal", !res.cap_reached},
                          {"cap_reached", res.cap_reached},
                          {"steps", res.trace.size()},
                          {"skipped", res.skipped},
                          {"vector", to_json(complexity(res.result))},
                          {"hash", hash_hex(canonical_hash(res.result))},
                          {"result", to_json(res.result)}};
                std::cout << last.dump() << '\n';
            }
            if (res.cap_reached) std::cerr << "cap reached after " << res.trace.size() << " steps\n";
            return kOk;
        }
        if (explore_cmd->parsed()) {
            Complex c;
            json doc;
            if (int rc = load_valid(file, c, &doc)) return rc;
            auto proposer = pick_proposer(doc);
            auto g = rewrite_graph(c, *proposer, rw);
            if (format == "dot") {
                std::cout << g.to_dot();
            } else {
                json nodes = json::array(), edges = json::array();
                for (const auto& n : g.nodes)
                    nodes.push_back({{"index", n.index},
                                     {"hash", hash_hex(n.hash)},
                                     {"vector", to_json(n.vector)},
                                     {"depth", n.depth},
                                     {"terminal", n.terminal}});
                for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"move", e.label}});
                std::cout << json{{"nodes", nodes}, {"edges", edges}, {"incomplete", g.incomplete}}.dump(2) << '\n';
            }
            if (g.incomplete) std::cerr << "exploration incomplete: depth cap or node budget reached\n";
            return kOk;
        }
        if (gen_cmd->parsed()) {
            gcfg.allow_boundary = !no_boundary;
            const auto s = effective_seed(seed);
            Rng rng(s);
            std::cerr << "seed: " << s << '\n';
            auto c = gen_complex(gcfg, rng);
            if (format == "dot") std::cout << complex_to_dot(c);
            else std::cout << to_json(c).dump(2) << '\n';
            return kOk;
        }
        if (selftest_cmd->parsed()) {
            AcceptanceConfig cfg;
            cfg.seed = effective_seed(seed == 1 ? cfg.seed : seed);
            cfg.scale_down = scale_down;
            bool ok = true;
            for (const auto& r : run_acceptance(cfg)) {
                if (!quiet || !r.pass) std::cout << format_line(r) << '\n';
                ok = ok && r.pass;
            }
            return ok ? kOk : kRejected;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << '\n';
        return kIo;
    } catch (const MoveError& e) {
        std::cerr << "rejected: " << e.what() << '\n';
        return kRejected;
    }
    return kOk;
}
