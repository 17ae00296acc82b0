#include "widthcalc/search.hpp"

#include "widthcalc/index.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace widthcalc {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return splitmix(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2))); }

std::uint64_t mix_all(std::initializer_list<std::int64_t> xs) {
    std::uint64_t h = 0x51ed270b2d3a4c1fULL;
    for (auto x : xs) h = mix(h, static_cast<std::uint64_t>(x));
    return h;
}

enum Tag : std::int64_t { kThick = 1, kThin, kBoundary, kCb };
enum Label : std::int64_t { kUpperOf = 11, kLowerOf, kHasUpper, kHasLower, kPort, kPortOf, kFrom, kFromOf, kTo, kToOf };

}  // namespace

std::uint64_t canonical_hash(const Complex& c) {
    std::unordered_map<std::string, std::size_t> vid;
    std::vector<std::uint64_t> color;
    auto add = [&](const std::string& id, std::uint64_t col) {
        vid.emplace(id, color.size());
        color.push_back(col);
    };
    for (const auto& h : c.thick) add(h.id, mix_all({kThick, h.surface.genus, h.surface.punctures}));
    for (const auto& t : c.thin) add(t.id, mix_all({kThin, t.surface.genus, t.surface.punctures}));
    for (const auto& b : c.boundary)
        add(b.id, mix_all({kBoundary, b.surface.genus, b.surface.punctures, b.drilled_vertex}));
    for (const auto& cb : c.cbs) {
        auto side = c.side_of(cb);
        add(cb.id, mix_all({kCb, cb.tangle.verticals, cb.tangle.bridges, cb.tangle.ghosts, cb.tangle.loops, cb.product,
                            cb.ball, side ? static_cast<int>(*side) + 1 : 0}));
    }

    std::vector<std::vector<std::pair<std::int64_t, std::size_t>>> adj(color.size());
    auto link = [&](const std::string& a, const std::string& b, Label ab, Label ba) {
        auto i = vid.find(a), j = vid.find(b);
        if (i == vid.end() || j == vid.end()) return;
        adj[i->second].emplace_back(ab, j->second);
        adj[j->second].emplace_back(ba, i->second);
    };
    for (const auto& h : c.thick) {
        link(h.id, h.upper_cb, kHasUpper, kUpperOf);
        link(h.id, h.lower_cb, kHasLower, kLowerOf);
    }
    for (const auto& cb : c.cbs)
        for (const auto& p : cb.minus) link(cb.id, p, kPort, kPortOf);
    for (const auto& t : c.thin) {
        link(t.id, t.from_cb, kFrom, kFromOf);
        link(t.id, t.to_cb, kTo, kToOf);
    }

    auto classes = [](const std::vector<std::uint64_t>& col) { return std::set<std::uint64_t>(col.begin(), col.end()).size(); };
    std::size_t n_classes = classes(color);
    for (std::size_t round = 0; round <= color.size(); ++round) {
        std::vector<std::uint64_t> next(color.size());
        for (std::size_t v = 0; v < color.size(); ++v) {
            std::vector<std::uint64_t> nb;
            for (const auto& [label, w] : adj[v]) nb.push_back(mix(static_cast<std::uint64_t>(label), color[w]));
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = color[v];
            for (auto x : nb) h = mix(h, x);
            next[v] = h;
        }
        color = std::move(next);
        auto k = classes(color);
        if (k == n_classes && round > 0) break;
        n_classes = k;
    }
    std::sort(color.begin(), color.end());
    std::uint64_t h = mix_all({static_cast<std::int64_t>(color.size()), c.allow_small_boundary_spheres});
    for (auto x : color) h = mix(h, x);
    return h;
}

const char* to_string(Policy p) { return p == Policy::First ? "first" : "greedy"; }

namespace {

bool same_consolidation(const Move& a, const Consolidate& b) {
    auto* x = std::get_if<Consolidate>(&a);
    return x && x->thick == b.thick && x->thin == b.thin;
}

}  // namespace

std::vector<Successor> successors(const Complex& c, const MoveProposer& proposer, std::size_t* skipped,
                                  std::vector<std::string>* diagnostics, std::size_t max_diagnostics,
                                  bool stop_at_first) {
    std::vector<Move> phase_a, phase_b;
    for (auto& m : pending_consolidations(c)) phase_a.emplace_back(std::move(m));
    const std::size_t engine_moves = phase_a.size();
    for (auto& m : proposer.propose(c)) {
        if (!is_reducing(m)) {
            phase_b.push_back(std::move(m));
            continue;
        }
        if (auto* cm = std::get_if<Consolidate>(&m)) {
            bool dup = std::any_of(phase_a.begin(), phase_a.begin() + static_cast<std::ptrdiff_t>(engine_moves),
                                   [&](const Move& x) { return same_consolidation(x, *cm); });
            if (dup) continue;
        }
        phase_a.push_back(std::move(m));
    }

    std::vector<Successor> out;
    auto run = [&](const std::vector<Move>& moves) {
        for (const auto& m : moves) {
            try {
                auto r = apply_move(c, m);
                out.push_back({m, std::move(r.result), std::move(r.log)});
                if (stop_at_first) return;
            } catch (const MoveError& e) {
                if (skipped) ++*skipped;
                if (diagnostics && diagnostics->size() < max_diagnostics)
                    diagnostics->push_back(describe(m) + ": " + e.what());
            } catch (const std::invalid_argument& e) {
                if (skipped) ++*skipped;
                if (diagnostics && diagnostics->size() < max_diagnostics)
                    diagnostics->push_back(describe(m) + ": " + e.what());
            }
        }
    };
    run(phase_a);
    if (out.empty()) run(phase_b);
    return out;
}

ThinResult thin(const Complex& c, const MoveProposer& proposer, const ThinConfig& cfg) {
    ThinResult res;
    res.result = c;
    for (;;) {
        const bool first = cfg.policy == Policy::First;
        auto succ = successors(res.result, proposer, &res.skipped, &res.diagnostics, cfg.max_diagnostics, first);
        if (succ.empty()) break;
        if (res.trace.size() >= cfg.cap) {
            res.cap_reached = true;
            break;
        }
        std::size_t pick = 0;
        if (!first) {
            std::vector<ComplexityVector> vecs;
            std::vector<std::uint64_t> hashes;
            for (const auto& s : succ) {
                vecs.push_back(complexity(s.result));
                hashes.push_back(canonical_hash(s.result));
            }
            for (std::size_t i = 1; i < succ.size(); ++i) {
                auto o = compare(vecs[i], vecs[pick]);
                if (o == Order::LT || (o == Order::EQ && hashes[i] < hashes[pick])) pick = i;
            }
        }
        TraceStep step;
        step.step = res.trace.size() + 1;
        step.move = succ[pick].move;
        step.before = complexity(res.result);
        step.after = complexity(succ[pick].result);
        step.hash_after = canonical_hash(succ[pick].result);
        step.checks = std::move(succ[pick].log.passed);
        res.result = std::move(succ[pick].result);
        res.trace.push_back(std::move(step));
    }
    return res;
}

std::vector<std::size_t> RewriteGraph::sinks() const {
    std::vector<std::size_t> out;
    for (const auto& n : nodes)
        if (n.terminal) out.push_back(n.index);
    return out;
}

std::string RewriteGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph rewrite {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (const auto& n : nodes) {
        os << "  n" << n.index << " [label=\"" << n.vector.to_string() << "\\n" << std::hex << n.hash << std::dec
           << "\"";
        if (n.terminal) os << ", peripheries=2";
        os << "];\n";
    }
    for (const auto& e : edges) os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label << "\"];\n";
    if (incomplete) os << "  incomplete [shape=plaintext, label=\"incomplete\"];\n";
    os << "}\n";
    return os.str();
}

RewriteGraph rewrite_graph(const Complex& c, const MoveProposer& proposer, const RewriteConfig& cfg) {
    RewriteGraph g;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    auto add_node = [&](const Complex& x, std::size_t depth) {
        auto h = canonical_hash(x);
        g.nodes.push_back({g.nodes.size(), h, x, complexity(x), depth, false});
        seen.emplace(h, g.nodes.size() - 1);
        return g.nodes.size() - 1;
    };
    add_node(c, 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        auto i = queue.front();
        queue.pop_front();
        const auto depth = g.nodes[i].depth;
        if (depth >= cfg.max_depth) {
            bool stuck = successors(g.nodes[i].complex, proposer, nullptr, nullptr, 0, true).empty();
            g.nodes[i].terminal = stuck;
            if (!stuck) g.incomplete = true;
            continue;
        }
        auto succ = successors(g.nodes[i].complex, proposer);
        if (succ.empty()) {
            g.nodes[i].terminal = true;
            continue;
        }
        for (auto& s : succ) {
            auto h = canonical_hash(s.result);
            auto it = seen.find(h);
            std::size_t j;
            if (it != seen.end()) {
                j = it->second;
            } else if (g.nodes.size() >= cfg.node_budget) {
                g.incomplete = true;
                continue;
            } else {
                j = add_node(s.result, depth + 1);
                queue.push_back(j);
            }
            g.edges.push_back({i, j, describe(s.move)});
        }
    }
    return g;
}

std::string complex_to_dot(const Complex& c) {
    std::ostringstream os;
    auto q = [](const std::string& s) { return "\"" + s + "\""; };
    auto surf = [](const Surface& s) { return "(" + std::to_string(s.genus) + "," + std::to_string(s.punctures) + ")"; };
    os << "digraph complex {\n  rankdir=BT;\n  node [fontname=\"monospace\"];\n";
    std::map<std::string, ThickIndexRow> rows;
    for (const auto& r : index_table(c)) rows[r.id] = r;
    for (const auto& h : c.thick) {
        const auto& r = rows[h.id];
        os << "  " << q(h.id) << " [shape=box, style=bold, label=\"" << h.id << ' ' << surf(h.surface)
           << "\\nI_up=" << r.index_up << " I_down=" << r.index_down << "\"];\n";
    }
    for (const auto& t : c.thin)
        os << "  " << q(t.id) << " [shape=box, style=dashed, label=\"" << t.id << ' ' << surf(t.surface) << "\"];\n";
    for (const auto& b : c.boundary)
        os << "  " << q(b.id) << " [shape=plaintext, label=\"" << b.id << ' ' << surf(b.surface)
           << (b.drilled_vertex ? " *" : "") << "\"];\n";
    for (const auto& cb : c.cbs) {
        os << "  " << q(cb.id) << " [shape=ellipse, label=\"" << cb.id << "\\nmu=" << mu(cb, c);
        if (cb.product) os << " product";
        if (cb.ball) os << " ball";
        os << "\"];\n";
        auto side = c.side_of(cb);
        for (const auto& p : cb.minus) {
            if (side == Side::Upper) os << "  " << q(cb.id) << " -> " << q(p) << ";\n";
            else os << "  " << q(p) << " -> " << q(cb.id) << ";\n";
        }
        if (side == Side::Upper) os << "  " << q(cb.plus) << " -> " << q(cb.id) << ";\n";
        else os << "  " << q(cb.id) << " -> " << q(cb.plus) << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace widthcalc
