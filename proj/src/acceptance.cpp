#include "widthcalc/acceptance.hpp"

#include "widthcalc/complexity.hpp"
#include "widthcalc/gen.hpp"
#include "widthcalc/index.hpp"
#include "widthcalc/oracles.hpp"
#include "widthcalc/proposer.hpp"
#include "widthcalc/search.hpp"
#include "widthcalc/validate.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

namespace widthcalc {

namespace {

using Clock = std::chrono::steady_clock;

struct Counter {
    long checked = 0;
    long failed = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failed++ == 0) first_failure = what;
    }
    std::string summary() const {
        std::ostringstream os;
        os << checked << " checks, " << failed << " failures";
        if (failed) os << "; first: " << first_failure;
        return os.str();
    }
};

std::vector<Surface> minus_of(const Complex& c, const Compressionbody& cb) { return minus_surfaces(c, cb); }

int mu_oracle(const Complex& c, const std::string& cb_id) {
    const auto* cb = c.find_cb(cb_id);
    return oracle::mu_closed_form(plus_surface(c, *cb), minus_of(c, *cb), cb->tangle);
}

int index_oracle(const Complex& c, const std::string& h, Side side) {
    auto reach = side == Side::Upper ? oracle::reach_up_paths(c, h) : oracle::reach_down_paths(c, h);
    int total = 6 - 6 * static_cast<int>(reach.size());
    for (const auto& j : reach) {
        const auto* t = c.find_thick(j);
        total += mu_oracle(c, side == Side::Upper ? t->upper_cb : t->lower_cb);
    }
    return total;
}

std::string fmt(const Complex& c) { return std::to_string(c.thick.size()) + " thick levels"; }

GenConfig wide_config() {
    GenConfig g;
    g.max_thick = 8;
    g.max_genus = 3;
    g.max_punctures = 6;
    return g;
}

// ---------------------------------------------------------------------------

CriterionResult trivial_index_table() {
    Counter k;
    k.check(mu_profile({0, 0}, {}) == 0, "mu(B3, empty) != 0");
    k.check(mu_profile({0, 2}, {}) == 4, "mu(B3, arc) != 4");
    for (int g = 0; g <= 3; ++g)
        for (int p = 0; p <= 6; ++p) {
            std::vector<Surface> m{{g, p}};
            k.check(mu_profile({g, p}, m) == 6, "product profile (" + std::to_string(g) + "," + std::to_string(p) + ")");
            k.check(oracle::mu_closed_form({g, p}, m, {p, 0, 0, 0}) == 6, "closed form product");
        }
    return {1, "trivial index table", k.failed == 0, k.summary(), 0, 1.0};
}

// A one-level complex whose lower compressionbody has the given negative
// boundary, conserving punctures with maximal verticals.
std::optional<Complex> single_level(Surface plus, const std::vector<Surface>& minus) {
    Complex c;
    c.allow_small_boundary_spheres = true;
    c.thick.push_back({"H", plus, "U", "D"});
    c.cbs.push_back({"U", "H", {}, {}, false, false});
    c.cbs.push_back({"D", "H", {}, {}, false, false});
    int m = 0;
    for (std::size_t i = 0; i < minus.size(); ++i) {
        std::string id = "S" + std::to_string(i);
        c.boundary.push_back({id, minus[i], "D", false});
        c.cbs[1].minus.push_back(id);
        m += minus[i].punctures;
    }
    if ((plus.punctures - m) % 2 || plus.punctures % 2) return std::nullopt;
    int v = std::min(plus.punctures, m);
    c.cbs[1].tangle = {v, (plus.punctures - v) / 2, (m - v) / 2, 0};
    c.cbs[0].tangle = {0, plus.punctures / 2, 0, 0};
    if (!validate(c).ok()) return std::nullopt;
    return c;
}

void check_reduction(const Complex& c, const Compressionbody& cb, const DiscData& d, Counter& k,
                     std::map<std::pair<int, int>, long>& cover) {
    BoundaryReduction r;
    try {
        r = boundary_reduce(cb, c, d);
    } catch (const MoveError& e) {
        if (e.check() == "boundary-reduction identity") k.check(false, e.what());
        return;
    }
    int lhs = 0;
    for (const auto& p : r.pieces) lhs += oracle::mu_closed_form(p.plus, p.minus, p.tangle);
    const int rhs = mu_oracle(c, cb.id) - 6 + 4 * d.q + 6 * (d.separating ? 1 : 0);
    k.check(lhs == rhs, "sum mu(pieces) = " + std::to_string(lhs) + " expected " + std::to_string(rhs));
    ++cover[{d.q, d.separating ? 1 : 0}];
}

CriterionResult reduction_identity(const AcceptanceConfig& cfg) {
    Counter k;
    std::map<std::pair<int, int>, long> cover;
    ExhaustiveProposer prop({.discs_per_side = 100000, .max_boundary_subset = 3, .max_untelescopes = 0});

    // Exhaustive sweep of small profiles.
    std::vector<Surface> menu{{0, 0}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {0, 4}};
    for (int g = 0; g <= 3; ++g)
        for (int p = 0; p <= 6; ++p)
            for (std::size_t a = 0; a <= menu.size(); ++a)
                for (std::size_t b = a; b <= menu.size(); ++b) {
                    std::vector<Surface> minus;
                    if (a < menu.size()) minus.push_back(menu[a]);
                    if (b < menu.size() && a < menu.size()) minus.push_back(menu[b]);
                    auto c = single_level({g, p}, minus);
                    if (!c) continue;
                    const auto* cb = c->find_cb("D");
                    for (const auto& d : prop.discs(*c, *cb)) check_reduction(*c, *cb, d, k, cover);
                    const auto* up = c->find_cb("U");
                    for (const auto& d : prop.discs(*c, *up)) check_reduction(*c, *up, d, k, cover);
                }

    // Random compressionbodies from generated complexes.
    Rng rng(cfg.seed + 2);
    long random_cbs = 0;
    const long want = 1000 / cfg.scale_down;
    for (int guard = 0; random_cbs < want && guard < 100000; ++guard) {
        auto c = gen_complex({}, rng);
        const auto& cb = c.cbs[rng() % c.cbs.size()];
        auto discs = prop.discs(c, cb);
        if (discs.empty()) continue;
        ++random_cbs;
        for (const auto& d : discs) check_reduction(c, cb, d, k, cover);
    }
    bool covered = true;
    std::ostringstream os;
    for (int q = 0; q <= 1; ++q)
        for (int s = 0; s <= 1; ++s) {
            covered = covered && cover[{q, s}] > 0;
            os << " (q=" << q << ",sep=" << s << "):" << cover[{q, s}];
        }
    k.check(covered, "some (q, separating) case never reached");
    k.check(random_cbs >= want, "too few random compressionbodies with a disc");
    return {2, "boundary-reduction index identity", k.failed == 0,
            k.summary() + "; " + std::to_string(random_cbs) + " random cbs;" + os.str(), 0, 10.0};
}

CriterionResult consolidation_identity(const AcceptanceConfig& cfg) {
    Counter k;
    Rng rng(cfg.seed + 3);
    GenConfig g;
    g.product_probability = 1.0;
    g.thin_probability = 0.9;
    const long want = 1000 / cfg.scale_down;
    long done = 0;
    for (int guard = 0; done < want && guard < 200000; ++guard) {
        auto c = gen_complex(g, rng);
        for (const auto& m : pending_consolidations(c)) {
            const auto* h = c.find_thick(m.thick);
            const auto* q = c.find_thin(m.thin);
            const auto* p = c.find_cb(h->lower_cb);
            Side p_side = std::count(p->minus.begin(), p->minus.end(), q->id) ? Side::Lower : Side::Upper;
            std::string a = p_side == Side::Lower ? q->from_cb : q->to_cb;
            std::string b = p_side == Side::Lower ? h->upper_cb : h->lower_cb;
            const int expected = mu_oracle(c, a) + mu_oracle(c, b) - 6;
            try {
                auto r = apply_consolidate(c, m);
                k.check(mu_oracle(r, a) == expected, "mu(merged) differs on " + fmt(c));
                ++done;
            } catch (const MoveError& e) {
                k.check(false, e.what());
            }
            if (done >= want) break;
        }
    }
    k.check(done >= want, "only " + std::to_string(done) + " consolidations generated");
    return {3, "consolidation index identity", k.failed == 0, k.summary(), 0, 0};
}

struct UntelescopeRun {
    Complex before;
    Untelescope move;
};

Untelescope with_known_ids(Untelescope u) {
    for (const char* role : {"h_minus", "h_plus", "f", "h_minus_split", "phi_minus", "h_plus_split", "phi_plus",
                             "minus_upper", "plus_lower", "lower_split", "upper_split", "product_minus", "product_plus"})
        u.outcome.ids[role] = std::string("~") + role;
    return u;
}

CriterionResult untelescope_relations(const AcceptanceConfig& cfg) {
    Counter k;
    Rng rng(cfg.seed + 4);
    ExhaustiveProposer prop({.discs_per_side = 40, .max_boundary_subset = 1, .max_untelescopes = 400});
    const long want = 1000 / cfg.scale_down;
    long done = 0;
    for (int guard = 0; done < want && guard < 20000; ++guard) {
        auto c = gen_complex({}, rng);
        auto moves = prop.propose(c);
        std::shuffle(moves.begin(), moves.end(), rng);
        int per_instance = 0;
        for (const auto& m : moves) {
            auto* u0 = std::get_if<Untelescope>(&m);
            if (!u0 || per_instance >= 3) continue;
            auto u = with_known_ids(*u0);
            Complex h1;
            try {
                h1 = apply_untelescope(c, u);
            } catch (const MoveError&) {
                continue;
            }
            ++per_instance;
            ++done;
            // Rebuild the post-consolidation complex and evaluate independently.
            Complex h2 = h1;
            try {
                if (h2.find_thin("~phi_minus")) h2 = apply_consolidate(h2, {"~h_minus_split", "~phi_minus", {}, false});
                if (h2.find_thin("~phi_plus")) h2 = apply_consolidate(h2, {"~h_plus_split", "~phi_plus", {}, false});
            } catch (const MoveError& e) {
                k.check(false, std::string("split consolidation: ") + e.what());
                continue;
            }
            const auto* H = c.find_thick(u.thick);
            const auto* Hm = h2.find_thick("~h_minus");
            const auto* Hp = h2.find_thick("~h_plus");
            const int dn = mu_oracle(c, H->lower_cb), up = mu_oracle(c, H->upper_cb);
            const int dn_m = mu_oracle(h2, Hm->lower_cb), up_m = mu_oracle(h2, Hm->upper_cb);
            const int dn_p = mu_oracle(h2, Hp->lower_cb), up_p = mu_oracle(h2, Hp->upper_cb);
            const std::string where = " on " + describe(m);
            k.check(dn_m < dn, "mu_down(H-) < mu_down(H)" + where);
            k.check(up_p < up, "mu_up(H+) < mu_up(H)" + where);
            k.check(dn_m + dn_p == dn + 6, "lower sum" + where);
            k.check(up_m + up_p == up + 6, "upper sum" + where);
            const int Idn = index_oracle(c, H->id, Side::Lower), Iup = index_oracle(c, H->id, Side::Upper);
            k.check(index_oracle(h2, Hm->id, Side::Lower) < Idn, "I_down(H-) < I_down(H)" + where);
            k.check(index_oracle(h2, Hm->id, Side::Upper) == Iup, "I_up(H-) = I_up(H)" + where);
            k.check(index_oracle(h2, Hp->id, Side::Lower) == Idn, "I_down(H+) = I_down(H)" + where);
            k.check(index_oracle(h2, Hp->id, Side::Upper) < Iup, "I_up(H+) < I_up(H)" + where);
        }
    }
    k.check(done >= want, "only " + std::to_string(done) + " accepted untelescopings");
    return {4, "untelescoping index relations", k.failed == 0,
            k.summary() + "; " + std::to_string(done) + " accepted certificates", 0, 0};
}

CriterionResult non_negativity(const AcceptanceConfig& cfg) {
    Counter k;
    Rng rng(cfg.seed + 5);
    const auto g = wide_config();
    const long n = 10000 / cfg.scale_down;
    for (long i = 0; i < n; ++i) {
        auto c = gen_complex(g, rng);
        k.check(validate(c).ok(), "generated complex invalid");
        for (const auto& h : c.thick) {
            int up = index_up(c, h.id), dn = index_down(c, h.id);
            k.check(up >= 0 && dn >= 0, "negative index on " + h.id + " of " + fmt(c) + " (I_up " +
                                            std::to_string(up) + ", I_down " + std::to_string(dn) + ")");
        }
    }
    return {5, "index non-negativity", k.failed == 0, k.summary() + " over " + std::to_string(n) + " complexes", 0, 60.0};
}

CriterionResult monotone_decrease(const AcceptanceConfig& cfg) {
    Counter k;
    Rng rng(cfg.seed + 6);
    const long want = 10000 / cfg.scale_down;
    long pairs = 0;
    std::map<std::string, long> kinds;
    GenConfig g;
    g.max_thick = 3;
    for (int guard = 0; pairs < want && guard < 10 * want; ++guard) {
        auto c = gen_complex(g, rng);
        auto m = gen_move(c, rng);
        if (!m) continue;
        ++pairs;
        ++kinds[kind_name(*m)];
        try {
            auto r = apply_move(c, *m).result;
            k.check(oracle::compare_padded(complexity(r).terms(), complexity(c).terms()) == Order::LT,
                    "no decrease for " + describe(*m));
        } catch (const MoveError& e) {
            k.check(false, std::string("generated move rejected: ") + e.what());
        }
    }
    std::ostringstream os;
    for (const auto& [kind, count] : kinds) os << ' ' << kind << ':' << count;
    k.check(pairs >= want, "only " + std::to_string(pairs) + " pairs");
    return {6, "strict decrease of every accepted move", k.failed == 0, k.summary() + ";" + os.str(), 0, 0};
}

bool graph_has_cycle(const RewriteGraph& g) {
    std::vector<std::vector<std::size_t>> out(g.nodes.size());
    for (const auto& e : g.edges) out[e.from].push_back(e.to);
    std::vector<int> state(g.nodes.size(), 0);
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
        state[v] = 1;
        for (auto w : out[v])
            if (state[w] == 1 || (state[w] == 0 && dfs(w))) return true;
        state[v] = 2;
        return false;
    };
    for (std::size_t v = 0; v < g.nodes.size(); ++v)
        if (state[v] == 0 && dfs(v)) return true;
    return false;
}

CriterionResult termination(const AcceptanceConfig& cfg) {
    Counter k;
    Rng rng(cfg.seed + 7);
    ExhaustiveProposer prop({.discs_per_side = 16, .max_boundary_subset = 2, .max_untelescopes = 64});
    GenConfig g;
    g.max_thick = 3;
    const long n = 1000 / cfg.scale_down;
    long steps = 0, graphs = 0;
    for (long i = 0; i < n; ++i) {
        auto c = gen_complex(g, rng);
        auto res = thin(c, prop, {});
        steps += static_cast<long>(res.trace.size());
        k.check(!res.cap_reached, "cap reached");
        k.check(is_reduced(res.result, prop).reduced, "terminal complex not reduced");
        for (std::size_t s = 1; s < res.trace.size(); ++s)
            k.check(compare(res.trace[s].after, res.trace[s - 1].after) == Order::LT, "trace not decreasing");
        if (i % 10 == 0) {
            auto rg = rewrite_graph(c, prop, {.max_depth = 1000, .node_budget = 200});
            if (rg.incomplete) continue;
            ++graphs;
            k.check(!graph_has_cycle(rg), "rewrite graph has a cycle");
            for (auto s : rg.sinks()) k.check(is_reduced(rg.nodes[s].complex, prop).reduced, "sink not reduced");
        }
    }
    return {7, "termination at reduced complexes", k.failed == 0,
            k.summary() + "; " + std::to_string(steps) + " steps, " + std::to_string(graphs) + " full rewrite graphs",
            0, 0};
}

Complex two_balls_glued() {
    Complex c;
    c.allow_small_boundary_spheres = true;
    c.thick.push_back({"H", {0, 0}, "U", "D"});
    for (const char* s : {"S1", "S2"}) c.boundary.push_back({s, {0, 0}, "U", false});
    for (const char* s : {"S3", "S4"}) c.boundary.push_back({s, {0, 0}, "D", false});
    c.cbs.push_back({"U", "H", {"S1", "S2"}, {}, false, false});
    c.cbs.push_back({"D", "H", {"S3", "S4"}, {}, false, false});
    return c;
}

CriterionResult sphere_example() {
    Counter k;
    const auto c = two_balls_glued();
    k.check(validate(c).ok(), "configuration invalid");
    k.check(complexity(c) == ComplexityVector({24}), "vector " + complexity(c).to_string() + " != (24)");
    auto disc = [](const char* a, const char* b) {
        return DiscData{0, true, std::nullopt, DiscSplit{{0, 0}, {0, 0}, {a}, {b}, {}, {}}};
    };
    Untelescope u{"H", disc("S3", "S4"), disc("S1", "S2"), {}};
    auto res = thin(c, ScriptedProposer({u}), {});
    k.check(!res.trace.empty(), "no step taken");
    const auto v = complexity(res.result);
    k.check(v == ComplexityVector({18, 18}), "final vector " + v.to_string() + " != (18,18)");
    k.check(compare(v, complexity(c)) == Order::LT, "not smaller");
    k.check(res.result.thick.size() == 2 && res.result.thin.size() == 1,
            "final shape " + std::to_string(res.result.thick.size()) + " thick / " +
                std::to_string(res.result.thin.size()) + " thin");
    return {8, "two-ball sphere configuration thins", k.failed == 0,
            complexity(c).to_string() + " -> " + v.to_string() + "; " + k.summary(), 0, 0};
}

CriterionResult oracle_equivalences(const AcceptanceConfig& cfg) {
    Counter k;
    Rng rng(cfg.seed + 9);
    const auto g = wide_config();
    for (long i = 0; i < 1000 / cfg.scale_down; ++i) {
        auto c = gen_complex(g, rng);
        for (const auto& h : c.thick) {
            k.check(reach_up(c, h.id) == oracle::reach_up_paths(c, h.id), "reach_up mismatch");
            k.check(reach_down(c, h.id) == oracle::reach_down_paths(c, h.id), "reach_down mismatch");
        }
    }
    for (long i = 0; i < 10000 / cfg.scale_down; ++i) {
        auto draw = [&] {
            std::vector<int> v(rng() % 6);
            for (auto& x : v) x = 2 * static_cast<int>(rng() % 8);
            return v;
        };
        auto a = draw(), b = rng() % 4 == 0 ? a : draw();
        if (!b.empty() && rng() % 3 == 0) b.pop_back();
        k.check(compare(ComplexityVector(a), ComplexityVector(b)) == oracle::compare_padded(a, b), "compare mismatch");
    }
    for (long i = 0; i < 10000 / cfg.scale_down; ++i) {
        auto c = gen_complex({}, rng);
        k.check(canonical_hash(oracle::relabel(c, rng)) == canonical_hash(c), "hash changed under relabelling");
    }
    return {9, "oracle equivalences", k.failed == 0, k.summary(), 0, 0};
}

CriterionResult reversal_duality(const AcceptanceConfig& cfg) {
    Counter k;
    Rng rng(cfg.seed + 10);
    for (long i = 0; i < 1000 / cfg.scale_down; ++i) {
        auto c = gen_complex(wide_config(), rng);
        auto r = reversed(c);
        k.check(validate(r).ok(), "reversed complex invalid");
        for (const auto& h : c.thick) {
            k.check(index_up(r, h.id) == index_down(c, h.id), "I_up(rev) != I_down");
            k.check(index_down(r, h.id) == index_up(c, h.id), "I_down(rev) != I_up");
        }
        k.check(complexity(r) == complexity(c), "vector changed");
    }
    return {10, "orientation-reversal duality", k.failed == 0, k.summary(), 0, 0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
    std::vector<std::function<CriterionResult()>> runs{
        [] { return trivial_index_table(); },
        [&] { return reduction_identity(cfg); },
        [&] { return consolidation_identity(cfg); },
        [&] { return untelescope_relations(cfg); },
        [&] { return non_negativity(cfg); },
        [&] { return monotone_decrease(cfg); },
        [&] { return termination(cfg); },
        [] { return sphere_example(); },
        [&] { return oracle_equivalences(cfg); },
        [&] { return reversal_duality(cfg); },
    };
    std::vector<CriterionResult> out;
    for (auto& run : runs) {
        auto t0 = Clock::now();
        CriterionResult r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r.number = static_cast<int>(out.size()) + 1;
            r.name = "criterion";
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (r.time_limit > 0 && r.seconds >= r.time_limit) {
            r.pass = false;
            r.detail += "; over time limit";
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.number << "  " << r.name << "  (" << r.detail << ", "
       << std::fixed << std::setprecision(2) << r.seconds << " s";
    if (r.time_limit > 0) os << " / limit " << r.time_limit << " s";
    os << ")";
    return os.str();
}

}  // namespace widthcalc
