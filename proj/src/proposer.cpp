#include "widthcalc/proposer.hpp"

#include "widthcalc/index.hpp"

#include <algorithm>

namespace widthcalc {

namespace {

constexpr ArcType kArcs[] = {ArcType::Vertical, ArcType::Bridge, ArcType::Ghost, ArcType::Loop};

// Splits T between two pieces so both conserve punctures; loops stay on side 1.
std::optional<std::pair<TangleSummary, TangleSummary>> split_tangle(const TangleSummary& t, int p1, int m1, int p2,
                                                                     int m2) {
    for (int v1 = std::min(p1, m1); v1 >= 0; --v1) {
        int v2 = t.verticals - v1;
        if (v2 < 0 || (p1 - v1) % 2 || (m1 - v1) % 2 || (p2 - v2) % 2 || (m2 - v2) % 2) continue;
        TangleSummary a{v1, (p1 - v1) / 2, (m1 - v1) / 2, t.loops};
        TangleSummary b{v2, (p2 - v2) / 2, (m2 - v2) / 2, 0};
        if (b.bridges < 0 || b.ghosts < 0) continue;
        if (a + b == t) return std::pair{a, b};
    }
    return std::nullopt;
}

}  // namespace

std::vector<DiscData> ExhaustiveProposer::discs(const Complex& c, const Compressionbody& cb) const {
    std::vector<DiscData> out;
    const auto plus = plus_surface(c, cb);
    const auto& ports = cb.minus;
    const std::size_t k = std::min<std::size_t>(ports.size(), 10);

    for (int q = 0; q <= 1; ++q) {
        std::vector<std::optional<ArcType>> arcs;
        if (q == 0) arcs.push_back(std::nullopt);
        else
            for (auto a : kArcs)
                if (count_of(cb.tangle, a) > 0) arcs.push_back(a);

        for (const auto& arc : arcs) {
            const TangleSummary t = cb.tangle + (arc ? cut_delta(*arc) : TangleSummary{});
            if (plus.genus >= 1) out.push_back({q, false, arc, std::nullopt});

            for (int g1 = 0; g1 <= plus.genus; ++g1) {
                for (int p1 = 0; p1 <= plus.punctures; ++p1) {
                    const Surface s1{g1, p1}, s2{plus.genus - g1, plus.punctures - p1};
                    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
                        DiscSplit sp{s1, s2, {}, {}, {}, {}};
                        int m1 = 0, m2 = 0, gm1 = 0, gm2 = 0;
                        for (std::size_t i = 0; i < ports.size(); ++i) {
                            auto s = *c.port_surface(ports[i]);
                            bool first = i >= k || !(mask >> i & 1);
                            (first ? sp.ports1 : sp.ports2).push_back(ports[i]);
                            (first ? m1 : m2) += s.punctures;
                            (first ? gm1 : gm2) += s.genus;
                        }
                        if (gm1 > g1 || gm2 > s2.genus) continue;
                        const Surface plus1{g1, p1 + q}, plus2{s2.genus, s2.punctures + q};
                        auto empty_or_arc = [](const Surface& s, bool no_ports) {
                            return no_ports && s.genus == 0 && (s.punctures == 0 || s.punctures == 2);
                        };
                        if (empty_or_arc(plus1, sp.ports1.empty()) || empty_or_arc(plus2, sp.ports2.empty())) continue;
                        auto tangles = split_tangle(t, plus1.punctures, m1, plus2.punctures, m2);
                        if (!tangles) continue;
                        sp.tangle1 = tangles->first;
                        sp.tangle2 = tangles->second;
                        out.push_back({q, true, arc, sp});
                        if (out.size() >= limits_.discs_per_side) return out;
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Move> ExhaustiveProposer::propose(const Complex& c) const {
    std::vector<Move> out;
    for (auto& m : pending_consolidations(c)) out.emplace_back(std::move(m));

    for (const auto& h : c.thick) {
        const auto* up = c.cb_on(h, Side::Upper);
        const auto* dn = c.cb_on(h, Side::Lower);
        if (!up || !dn) continue;

        if (h.surface.genus >= 1) {
            out.emplace_back(Destabilize{DestabKind::Stab, h.id, Side::Upper, {}, 0, std::nullopt, {}, {}});
            for (Side s : {Side::Upper, Side::Lower})
                for (auto a : kArcs)
                    if (count_of(c.cb_on(h, s)->tangle, a) > 0)
                        out.emplace_back(Destabilize{DestabKind::MeridStab, h.id, s, {}, 0, a, {}, {}});
        }
        for (Side s : {Side::Upper, Side::Lower}) {
            const auto* cb = c.cb_on(h, s);
            std::vector<std::string> bdy;
            for (const auto& port : cb->minus)
                if (c.find_boundary(port)) bdy.push_back(port);
            for (const auto& b : bdy) {
                out.emplace_back(Destabilize{DestabKind::Bdy, h.id, s, {b}, 0, std::nullopt, {}, {}});
                out.emplace_back(Destabilize{DestabKind::MeridBdy, h.id, s, {b}, 0, std::nullopt, {}, {}});
            }
            const std::size_t n = std::min(bdy.size(), std::size_t{8});
            for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
                std::vector<std::string> subset;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask >> i & 1) subset.push_back(bdy[i]);
                if (subset.size() > limits_.max_boundary_subset) continue;
                const int lo = std::max<int>(1, static_cast<int>(subset.size()) - 1);
                for (int gh = lo; gh <= cb->tangle.ghosts; ++gh)
                    for (auto kind : {DestabKind::GhostBdy, DestabKind::MeridGhostBdy})
                        out.emplace_back(Destabilize{kind, h.id, s, subset, gh, std::nullopt, {}, {}});
            }
            for (auto mc : {MergeCase::BridgeBridge, MergeCase::VerticalBridge})
                out.emplace_back(Unperturb{h.id, s, mc});
            out.emplace_back(UndoRemovable{h.id, s, std::nullopt, std::nullopt});
        }
    }

    for (const auto& h : c.thick) {
        const auto* up = c.cb_on(h, Side::Upper);
        const auto* dn = c.cb_on(h, Side::Lower);
        if (!up || !dn) continue;
        auto dm = discs(c, *dn);
        auto dp = discs(c, *up);
        std::size_t n = 0;
        for (const auto& a : dm)
            for (const auto& b : dp) {
                if (n++ >= limits_.max_untelescopes) break;
                out.emplace_back(Untelescope{h.id, a, b, {}});
            }
    }
    return out;
}

std::vector<Move> ScriptedProposer::propose(const Complex& c) const {
    std::vector<Move> out;
    for (const auto& m : script_) {
        bool live = std::visit([&](const auto& mv) { return c.find_thick(mv.thick) != nullptr; }, m);
        if (live) out.push_back(m);
    }
    return out;
}

}  // namespace widthcalc
