#include "widthcalc/gen.hpp"

#include "widthcalc/complexity.hpp"
#include "widthcalc/index.hpp"
#include "widthcalc/proposer.hpp"
#include "widthcalc/validate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace widthcalc {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Surface random_thin_surface(const GenConfig& cfg, Rng& rng) {
    Surface s{chance(rng, 0.2) ? uniform(rng, 1, std::max(1, cfg.max_genus)) : 0, 0};
    do s.punctures = uniform(rng, 0, cfg.max_punctures);
    while (s.genus == 0 && s.punctures == 1);
    return s;
}

Surface random_boundary_surface(const GenConfig& cfg, Rng& rng) {
    if (cfg.max_genus >= 1 && chance(rng, 0.3)) return {1, uniform(rng, 0, cfg.max_punctures)};
    return {0, uniform(rng, 3, std::max(3, cfg.max_punctures))};
}

std::optional<Complex> attempt(const GenConfig& cfg, Rng& rng) {
    const int n = uniform(rng, 1, std::max(1, cfg.max_thick));
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);

    Complex c;
    auto H = [&](int i) { return "H" + std::to_string(label[i]); };
    auto U = [&](int i) { return "U" + std::to_string(label[i]); };
    auto D = [&](int i) { return "D" + std::to_string(label[i]); };
    for (int i = 0; i < n; ++i) {
        c.thick.push_back({H(i), {}, U(i), D(i)});
        c.cbs.push_back({U(i), H(i), {}, {}, false, false});
        c.cbs.push_back({D(i), H(i), {}, {}, false, false});
    }

    // Thin levels only go forward in the order, so flow lines cannot close.
    int thin_count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!chance(rng, cfg.thin_probability / std::max(1, n - 1) * 1.5)) continue;
            auto* from = c.find_cb(U(i));
            auto* to = c.find_cb(D(j));
            if (static_cast<int>(from->minus.size()) >= cfg.max_ports || static_cast<int>(to->minus.size()) >= cfg.max_ports)
                continue;
            std::string id = "F" + std::to_string(thin_count++);
            c.thin.push_back({id, random_thin_surface(cfg, rng), from->id, to->id});
            from->minus.push_back(id);
            to->minus.push_back(id);
        }

    int boundary_count = 0;
    auto add_boundary = [&](Compressionbody& cb, Surface s) {
        std::string id = "B" + std::to_string(boundary_count++);
        bool drilled = s.genus == 0 && s.punctures >= 3 && chance(rng, 0.5);
        c.boundary.push_back({id, s, cb.id, drilled});
        cb.minus.push_back(id);
    };
    if (cfg.allow_boundary)
        for (auto& cb : c.cbs)
            if (static_cast<int>(cb.minus.size()) < cfg.max_ports && chance(rng, 0.3))
                add_boundary(cb, random_boundary_surface(cfg, rng));

    auto minus_genus = [&](const Compressionbody& cb) {
        int g = 0;
        for (const auto& s : minus_surfaces(c, cb)) g += s.genus;
        return g;
    };
    auto minus_punctures = [&](const Compressionbody& cb) {
        int p = 0;
        for (const auto& s : minus_surfaces(c, cb)) p += s.punctures;
        return p;
    };

    for (auto& h : c.thick) {
        const int need = std::max(minus_genus(*c.find_cb(h.upper_cb)), minus_genus(*c.find_cb(h.lower_cb)));
        if (need > cfg.max_genus) return std::nullopt;
        h.surface = {uniform(rng, need, cfg.max_genus), uniform(rng, 0, cfg.max_punctures)};
    }

    // Parity: p(d+) and sum p(d-) must agree mod 2 on every cb.
    for (auto& cb : c.cbs) {
        const int p_plus = c.find_thick(cb.plus)->surface.punctures;
        if ((p_plus - minus_punctures(cb)) % 2 == 0) continue;
        BoundaryLevel* fix = nullptr;
        for (const auto& port : cb.minus)
            if (auto* b = c.find_boundary(port); b && !b->drilled_vertex) fix = b;
        if (fix) {
            const bool up = fix->surface.punctures < cfg.max_punctures || (fix->surface.genus == 0 && fix->surface.punctures <= 3);
            fix->surface.punctures += up ? 1 : -1;
        } else if (cfg.allow_boundary && static_cast<int>(cb.minus.size()) < cfg.max_ports) {
            add_boundary(cb, {0, 3});
        } else {
            return std::nullopt;
        }
    }

    auto set_tangles = [&](ThickLevel& h) {
        for (const auto* id : {&h.upper_cb, &h.lower_cb}) {
            auto* cb = c.find_cb(*id);
            int loops = cb->tangle.loops;
            int p = h.surface.punctures, m = minus_punctures(*cb);
            int v = std::min(p, m);
            cb->tangle = {v, (p - v) / 2, (m - v) / 2, loops};
        }
    };
    for (auto& cb : c.cbs) cb.tangle.loops = chance(rng, 0.15) ? 1 : 0;
    for (auto& h : c.thick) {
        set_tangles(h);
        // Raise p(H) until both sides have room for their ghost arcs.
        auto bound_ok = [&](const std::string& id) {
            const auto* cb = c.find_cb(id);
            return ghost_arcs_fit(h.surface, minus_surfaces(c, *cb), cb->tangle);
        };
        for (int guard = 0; guard < 8 && !(bound_ok(h.upper_cb) && bound_ok(h.lower_cb)); ++guard) {
            h.surface.punctures += 2;
            set_tangles(h);
        }
    }

    for (auto& cb : c.cbs) {
        const auto plus = plus_surface(c, cb);
        const auto minus = minus_surfaces(c, cb);
        const auto& t = cb.tangle;
        if (minus.size() == 1 && minus[0] == plus && t.bridges == 0 && t.ghosts == 0 && t.loops == 0 &&
            c.find_thin(cb.minus[0]))
            cb.product = chance(rng, cfg.product_probability);
        if (minus.empty() && plus.genus == 0 && (t == TangleSummary{} || t == TangleSummary{0, 1, 0, 0}))
            cb.ball = chance(rng, cfg.ball_probability);
    }

    if (!validate(c).ok()) return std::nullopt;
    return c;
}

Complex fallback() {
    Complex c;
    c.thick.push_back({"H0", {0, 0}, "U0", "D0"});
    c.cbs.push_back({"U0", "H0", {}, {}, false, true});
    c.cbs.push_back({"D0", "H0", {}, {}, false, true});
    return c;
}

Complex restrict_to(const Complex& c, const std::set<std::string>& thick) {
    Complex r;
    r.allow_small_boundary_spheres = c.allow_small_boundary_spheres;
    std::set<std::string> cbs;
    for (const auto& h : c.thick)
        if (thick.contains(h.id)) r.thick.push_back(h);
    for (const auto& cb : c.cbs)
        if (thick.contains(cb.plus)) {
            r.cbs.push_back(cb);
            cbs.insert(cb.id);
        }
    for (const auto& t : c.thin)
        if (cbs.contains(t.from_cb) && cbs.contains(t.to_cb)) r.thin.push_back(t);
    for (const auto& b : c.boundary)
        if (cbs.contains(b.owner)) r.boundary.push_back(b);
    return r;
}

}  // namespace

Complex gen_complex(const GenConfig& cfg, Rng& rng) {
    for (int i = 0; i < 1000; ++i)
        if (auto c = attempt(cfg, rng)) return *c;
    return fallback();
}

std::optional<Move> gen_move(const Complex& c, Rng& rng) {
    auto moves = ExhaustiveProposer({.discs_per_side = 12, .max_boundary_subset = 2, .max_untelescopes = 64}).propose(c);
    std::shuffle(moves.begin(), moves.end(), rng);
    for (const auto& m : moves) {
        try {
            apply_move(c, m);
            return m;
        } catch (const MoveError&) {
        }
    }
    return std::nullopt;
}

std::tuple<std::size_t, int, int> shrink_size(const Complex& c) {
    int g = 0, p = 0;
    for (const auto& h : c.thick) {
        g += h.surface.genus;
        p += h.surface.punctures;
    }
    return {c.thick.size(), g, p};
}

std::vector<Complex> components(const Complex& c) {
    auto g = thick_digraph(c);
    std::map<std::string, std::string> parent;
    for (const auto& n : g.nodes) parent[n] = n;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& e : g.edges) parent[find(e.from)] = find(e.to);
    std::map<std::string, std::set<std::string>> groups;
    for (const auto& n : g.nodes) groups[find(n)].insert(n);
    std::vector<Complex> out;
    for (const auto& [root, members] : groups) out.push_back(restrict_to(c, members));
    return out;
}

std::vector<Complex> shrink(const Complex& c) {
    std::vector<Complex> candidates;
    auto comps = components(c);
    if (comps.size() > 1) candidates.insert(candidates.end(), comps.begin(), comps.end());

    for (const auto& t : c.thin) {
        Complex cut = c;
        cut.erase_thin(t.id);
        for (const auto* owner : {&t.from_cb, &t.to_cb}) {
            auto id = cut.fresh_id(t.id + "_" + *owner);
            cut.boundary.push_back({id, t.surface, *owner, false});
            auto* cb = cut.find_cb(*owner);
            std::replace(cb->minus.begin(), cb->minus.end(), t.id, id);
        }
        for (auto& piece : components(cut)) candidates.push_back(std::move(piece));
    }

    for (const auto& h : c.thick) {
        std::vector<Move> moves{Destabilize{DestabKind::Stab, h.id, Side::Upper, {}, 0, std::nullopt, {}, {}}};
        for (Side s : {Side::Upper, Side::Lower})
            for (auto mc : {MergeCase::BridgeBridge, MergeCase::VerticalBridge}) moves.emplace_back(Unperturb{h.id, s, mc});
        for (const auto& m : moves) {
            try {
                candidates.push_back(apply_move(c, m).result);
            } catch (const MoveError&) {
            }
        }
    }

    std::vector<Complex> out;
    const auto size = shrink_size(c);
    for (auto& k : candidates)
        if (shrink_size(k) < size && validate(k).ok()) out.push_back(std::move(k));
    return out;
}

}  // namespace widthcalc
