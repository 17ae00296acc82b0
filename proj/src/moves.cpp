#include "moves_internal.hpp"

#include "widthcalc/complexity.hpp"
#include "widthcalc/index.hpp"
#include "widthcalc/validate.hpp"

#include <algorithm>
#include <sstream>

namespace widthcalc {

const char* to_string(ArcType a) {
    switch (a) {
        case ArcType::Vertical: return "vertical";
        case ArcType::Bridge: return "bridge";
        case ArcType::Ghost: return "ghost";
        case ArcType::Loop: return "loop";
    }
    return "?";
}

TangleSummary cut_delta(ArcType a) {
    switch (a) {
        case ArcType::Vertical: return {0, 1, 0, 0};
        case ArcType::Bridge: return {0, 1, 0, 0};
        case ArcType::Ghost: return {2, 0, -1, 0};
        case ArcType::Loop: return {0, 1, 0, -1};
    }
    return {};
}

int count_of(const TangleSummary& t, ArcType a) {
    switch (a) {
        case ArcType::Vertical: return t.verticals;
        case ArcType::Bridge: return t.bridges;
        case ArcType::Ghost: return t.ghosts;
        case ArcType::Loop: return t.loops;
    }
    return 0;
}

const char* to_string(DestabKind k) {
    switch (k) {
        case DestabKind::Stab: return "stab";
        case DestabKind::MeridStab: return "merid_stab";
        case DestabKind::Bdy: return "bdy";
        case DestabKind::MeridBdy: return "merid_bdy";
        case DestabKind::GhostBdy: return "ghost_bdy";
        case DestabKind::MeridGhostBdy: return "merid_ghost_bdy";
    }
    return "?";
}

bool is_meridional(DestabKind k) {
    return k == DestabKind::MeridStab || k == DestabKind::MeridBdy || k == DestabKind::MeridGhostBdy;
}

const char* to_string(MergeCase m) {
    return m == MergeCase::BridgeBridge ? "bridge+bridge" : "vertical+bridge";
}

std::string kind_name(const Move& m) {
    struct V {
        std::string operator()(const Consolidate&) const { return "consolidate"; }
        std::string operator()(const Untelescope&) const { return "untelescope"; }
        std::string operator()(const Destabilize&) const { return "destabilize"; }
        std::string operator()(const Unperturb&) const { return "unperturb"; }
        std::string operator()(const UndoRemovable&) const { return "undo_removable"; }
    };
    return std::visit(V{}, m);
}

std::string describe(const Move& m) {
    std::ostringstream os;
    std::visit(
        [&](const auto& mv) {
            using T = std::decay_t<decltype(mv)>;
            os << kind_name(m) << ' ' << mv.thick;
            if constexpr (std::is_same_v<T, Consolidate>) os << '/' << mv.thin;
            if constexpr (std::is_same_v<T, Destabilize>) {
                os << ' ' << to_string(mv.kind) << ' ' << to_string(mv.side);
                for (const auto& s : mv.boundary) os << ' ' << s;
                if (mv.ghosts) os << " ghosts=" << mv.ghosts;
                if (mv.arc) os << " arc=" << to_string(*mv.arc);
            }
            if constexpr (std::is_same_v<T, Unperturb>) os << ' ' << to_string(mv.side) << ' ' << to_string(mv.merge);
            if constexpr (std::is_same_v<T, UndoRemovable>) os << " loop=" << to_string(mv.loop_side);
            if constexpr (std::is_same_v<T, Untelescope>) {
                auto disc = [&](const DiscData& d) {
                    os << " q=" << d.q << (d.separating ? " sep" : " nonsep");
                    if (d.split) os << " (" << d.split->side1.genus << ',' << d.split->side1.punctures << '|'
                                    << d.split->side2.genus << ',' << d.split->side2.punctures << ')';
                };
                os << " [-";
                disc(mv.disc_minus);
                os << "] [+";
                disc(mv.disc_plus);
                os << ']';
            }
        },
        m);
    return os.str();
}

bool is_reducing(const Move& m) { return !std::holds_alternative<Untelescope>(m); }

namespace detail {

void retarget_port(Complex& c, const std::string& port, const std::string& old_cb, const std::string& new_cb) {
    if (auto* t = c.find_thin(port)) {
        if (t->from_cb == old_cb) t->from_cb = new_cb;
        if (t->to_cb == old_cb) t->to_cb = new_cb;
    } else if (auto* b = c.find_boundary(port)) {
        if (b->owner == old_cb) b->owner = new_cb;
    }
}

TangleSummary conserving_tangle(int p_plus, int p_minus, int loops) {
    int v = std::max(0, std::min(p_plus, p_minus));
    if ((p_plus - v) % 2 != 0 && v > 0) --v;
    return {v, (p_plus - v) / 2, (p_minus - v) / 2, loops};
}

void require_valid_input(const Complex& c) {
    auto r = validate(c);
    expect(r.ok(), "valid input", r.to_string(), nullptr);
}

void post_checks(const Complex& before, const Complex& after, CheckLog* log) {
    auto r = validate(after);
    expect(r.ok(), "result validates", r.to_string(), log);
    expect(thick_digraph(after).is_acyclic(), "acyclicity", "move created a closed flow line", log);
    auto b = complexity(before);
    auto a = complexity(after);
    expect(compare(a, b) == Order::LT, "complexity decrease",
           "c(after) = " + a.to_string() + " is not below c(before) = " + b.to_string(), log);
}

}  // namespace detail

using detail::expect;

std::vector<Surface> compress_surface(const Surface& s, const DiscData& d) {
    if (d.q < 0 || d.q > 1) throw MoveError("disc data", "q must be 0 or 1");
    if (!d.separating) {
        if (s.genus < 1) throw MoveError("non-separating disc needs genus", "surface has genus 0");
        return {{s.genus - 1, s.punctures + 2 * d.q}};
    }
    if (!d.split) throw MoveError("disc data", "separating disc without split");
    const auto& sp = *d.split;
    if (sp.side1.genus < 0 || sp.side2.genus < 0 || sp.side1.punctures < 0 || sp.side2.punctures < 0 ||
        sp.side1.genus + sp.side2.genus != s.genus || sp.side1.punctures + sp.side2.punctures != s.punctures)
        throw MoveError("split sums", "genus/puncture parts do not add up to the compressed surface");
    return {{sp.side1.genus, sp.side1.punctures + d.q}, {sp.side2.genus, sp.side2.punctures + d.q}};
}

namespace {

bool piece_index_ok(const ReducedPiece& p) { return ghost_arcs_fit(p.plus, p.minus, p.tangle); }

bool piece_conserves(const ReducedPiece& p) {
    int pm = 0, gm = 0;
    for (const auto& s : p.minus) {
        pm += s.punctures;
        gm += s.genus;
    }
    const auto& t = p.tangle;
    return t.verticals >= 0 && t.bridges >= 0 && t.ghosts >= 0 && t.loops >= 0 &&
           p.plus.punctures == t.verticals + 2 * t.bridges && pm == t.verticals + 2 * t.ghosts &&
           p.plus.genus >= gm;
}

}  // namespace

BoundaryReduction boundary_reduce(const Compressionbody& cb, const Complex& c, const DiscData& d, CheckLog* log) {
    expect(d.q == 0 || d.q == 1, "disc data", "q must be 0 or 1", log);
    if (d.q == 1) {
        expect(d.arc.has_value(), "disc data", "a disc meeting the graph must name the arc it crosses", log);
        expect(count_of(cb.tangle, *d.arc) >= 1, "disc crosses an existing arc",
               std::string("no ") + to_string(*d.arc) + " arc in " + cb.id, log);
    }
    const auto plus = plus_surface(c, cb);
    BoundaryReduction out;
    out.mu_before = mu(cb, c);
    const TangleSummary delta = d.q ? cut_delta(*d.arc) : TangleSummary{};
    const auto surfaces = compress_surface(plus, d);

    auto surfaces_of = [&](const std::vector<std::string>& ports) {
        std::vector<Surface> v;
        for (const auto& p : ports) {
            auto s = c.port_surface(p);
            if (!s) throw MoveError("split ports", "unknown port " + p);
            v.push_back(*s);
        }
        return v;
    };

    if (!d.separating) {
        expect(!d.split, "disc data", "non-separating disc with a split", log);
        ReducedPiece p{surfaces[0], cb.minus, surfaces_of(cb.minus), cb.tangle + delta, 0};
        p.mu = mu_profile(p.plus, p.minus);
        out.pieces.push_back(std::move(p));
    } else {
        const auto& sp = *d.split;
        auto all = sp.ports1;
        all.insert(all.end(), sp.ports2.begin(), sp.ports2.end());
        auto expected = cb.minus;
        std::sort(all.begin(), all.end());
        std::sort(expected.begin(), expected.end());
        expect(all == expected, "split ports", "port parts are not a partition of " + cb.id + "'s negative boundary", log);
        expect(sp.tangle1 + sp.tangle2 == cb.tangle + delta, "split tangle",
               "tangle parts do not add up (after the cut arc)", log);
        for (int i = 0; i < 2; ++i) {
            const auto& ports = i == 0 ? sp.ports1 : sp.ports2;
            ReducedPiece p{surfaces[i], ports, surfaces_of(ports), i == 0 ? sp.tangle1 : sp.tangle2, 0};
            p.mu = mu_profile(p.plus, p.minus);
            out.pieces.push_back(std::move(p));
        }
    }

    for (const auto& p : out.pieces) {
        expect(piece_conserves(p), "piece conservation", "a reduced piece breaks puncture conservation or genus feasibility", log);
        expect(piece_index_ok(p), "piece ghost arc bound", "a reduced piece has more ghost arcs than 1-handles", log);
        if (d.separating)
            expect(!is_empty_ball_profile(p.plus, p.minus), "sc-disc non-triviality",
                   "separating disc cuts off an empty ball", log);
        if (d.q == 1)
            expect(!is_arc_ball_profile(p.plus, p.minus), "sc-disc non-triviality",
                   "disc meeting the graph cuts off a ball containing one arc", log);
    }

    int lhs = 0;
    for (const auto& p : out.pieces) lhs += p.mu;
    int rhs = out.mu_before - 6 + 4 * d.q + 6 * (d.separating ? 1 : 0);
    expect(lhs == rhs, "boundary-reduction identity",
           "sum of piece indices " + std::to_string(lhs) + " != " + std::to_string(rhs), log);
    expect(out.pieces[0].mu < out.mu_before, "boundary-reduction decrease", "main piece index did not drop", log);
    return out;
}

Complex apply_consolidate(const Complex& c, const Consolidate& m, CheckLog* log) {
    detail::require_valid_input(c);
    const auto* h = c.find_thick(m.thick);
    const auto* q = c.find_thin(m.thin);
    expect(h && q, "consolidation adjacency", "unknown thick or thin level", log);

    const Compressionbody* p = nullptr;
    Side p_side{};
    for (Side s : {Side::Lower, Side::Upper}) {
        const auto* cb = c.cb_on(*h, s);
        if (std::count(cb->minus.begin(), cb->minus.end(), q->id)) {
            p = cb;
            p_side = s;
        }
    }
    expect(p != nullptr, "consolidation adjacency", m.thin + " does not bound a compressionbody of " + m.thick, log);
    expect(p->product, "product certificate", p->id + " is not certified as a trivial product", log);

    const auto* a = c.find_cb(p_side == Side::Lower ? q->from_cb : q->to_cb);
    const auto* b = c.cb_on(*h, opposite(p_side));
    const int mu_a = mu(*a, c);
    const int mu_b = mu(*b, c);

    const auto removed_term = index_up(c, h->id) + index_down(c, h->id);

    Complex r = c;
    auto* merged = r.find_cb(a->id);
    std::erase(merged->minus, q->id);
    for (const auto& port : b->minus) {
        merged->minus.push_back(port);
        detail::retarget_port(r, port, b->id, a->id);
    }
    int p_minus = 0;
    for (const auto& s : minus_surfaces(r, *merged)) p_minus += s.punctures;
    merged->tangle = m.merged ? *m.merged
                              : detail::conserving_tangle(plus_surface(r, *merged).punctures, p_minus,
                                                          a->tangle.loops + b->tangle.loops);
    merged->product = m.merged_product;
    merged->ball = false;
    const std::string b_id = b->id, p_id = p->id, h_id = h->id, q_id = q->id;
    r.erase_cb(b_id);
    r.erase_cb(p_id);
    r.erase_thick(h_id);
    r.erase_thin(q_id);

    const int mu_c = mu(*r.find_cb(a->id), r);
    expect(mu_c == mu_a + mu_b - 6, "consolidation identity",
           "mu(merged) = " + std::to_string(mu_c) + " but mu(A) + mu(B) - 6 = " + std::to_string(mu_a + mu_b - 6), log);
    detail::post_checks(c, r, log);

    auto before = complexity(c);
    auto pos = std::find(before.terms().begin(), before.terms().end(), removed_term) - before.terms().begin();
    expect(complexity(r) == before.without(static_cast<std::size_t>(pos)), "consolidation removes one term",
           "other thick levels' indices changed", log);
    return r;
}

std::vector<Consolidate> pending_consolidations(const Complex& c) {
    std::vector<Consolidate> out;
    for (const auto& cb : c.cbs) {
        if (!cb.product || cb.minus.size() != 1 || !c.find_thin(cb.minus[0])) continue;
        out.push_back({cb.plus, cb.minus[0], std::nullopt, false});
    }
    return out;
}

namespace {

void check_side_indices(const Complex& c, const Complex& r, const std::string& old_h, const std::string& new_h,
                        const char* what, CheckLog* log) {
    const auto* h0 = c.find_thick(old_h);
    const auto* h1 = r.find_thick(new_h);
    int up0 = mu(*c.cb_on(*h0, Side::Upper), c), up1 = mu(*r.cb_on(*h1, Side::Upper), r);
    int dn0 = mu(*c.cb_on(*h0, Side::Lower), c), dn1 = mu(*r.cb_on(*h1, Side::Lower), r);
    expect(up1 < up0, std::string(what) + " lowers upper index",
           "mu_up " + std::to_string(up0) + " -> " + std::to_string(up1), log);
    expect(dn1 < dn0, std::string(what) + " lowers lower index",
           "mu_down " + std::to_string(dn0) + " -> " + std::to_string(dn1), log);
}

ArcType default_cut_arc(const TangleSummary& t) {
    for (ArcType a : {ArcType::Vertical, ArcType::Bridge, ArcType::Ghost, ArcType::Loop})
        if (count_of(t, a) > 0) return a;
    throw MoveError("meridional stabilization needs an arc", "no tangle on the disc side");
}

}  // namespace

Complex apply_destabilize(const Complex& c, const Destabilize& m, CheckLog* log) {
    detail::require_valid_input(c);
    for (const auto& b : c.boundary)
        expect(!(b.surface.genus == 0 && b.surface.punctures <= 2), "boundary sphere hypothesis",
               "boundary sphere " + b.id + " meets the graph two or fewer times", log);
    const auto* h = c.find_thick(m.thick);
    expect(h != nullptr, "destabilization target", "unknown thick level " + m.thick, log);

    Complex r = c;
    auto* hr = r.find_thick(m.thick);
    auto* up = r.find_cb(hr->upper_cb);
    auto* dn = r.find_cb(hr->lower_cb);
    const auto g = h->surface.genus;
    const auto p = h->surface.punctures;

    switch (m.kind) {
        case DestabKind::Stab:
            expect(g >= 1, "genus >= 1 required", "cannot destabilize a sphere", log);
            hr->surface = {g - 1, p};
            break;
        case DestabKind::MeridStab: {
            expect(g >= 1, "genus >= 1 required", "cannot destabilize a sphere", log);
            auto* disc_cb = m.side == Side::Upper ? up : dn;
            auto* other = m.side == Side::Upper ? dn : up;
            ArcType arc = m.arc ? *m.arc : default_cut_arc(disc_cb->tangle);
            expect(count_of(disc_cb->tangle, arc) >= 1, "disc crosses an existing arc",
                   std::string("no ") + to_string(arc) + " arc on the disc side", log);
            hr->surface = {g - 1, p + 2};
            disc_cb->tangle = disc_cb->tangle + cut_delta(arc);
            other->tangle.bridges += 1;
            break;
        }
        case DestabKind::Bdy:
        case DestabKind::MeridBdy:
        case DestabKind::GhostBdy:
        case DestabKind::MeridGhostBdy: {
            const bool ghost = m.kind == DestabKind::GhostBdy || m.kind == DestabKind::MeridGhostBdy;
            const int q = is_meridional(m.kind) ? 1 : 0;
            const int n = static_cast<int>(m.boundary.size());
            if (ghost) {
                expect(m.ghosts >= 1 && n >= 1, "ghost boundary-stabilization data", "needs ghost arcs and boundary", log);
                expect(m.ghosts >= n - 1, "ghost boundary-stabilization data", "S and the ghost arcs must be connected", log);
            } else {
                expect(n == 1 && m.ghosts == 0, "boundary-stabilization data", "exactly one boundary component, no ghost arcs", log);
            }
            auto* from = m.side == Side::Upper ? up : dn;
            auto* to = m.side == Side::Upper ? dn : up;
            int chi_s = 0, p_s = 0;
            for (const auto& id : m.boundary) {
                const auto* b = c.find_boundary(id);
                expect(b && b->owner == from->id, "boundary-stabilization data",
                       id + " is not a boundary component on the " + to_string(m.side) + " side", log);
                chi_s += euler_char(b->surface);
                p_s += b->surface.punctures;
            }
            expect(from->tangle.ghosts >= m.ghosts, "boundary-stabilization data", "not enough ghost arcs", log);
            expect(from->tangle.verticals >= p_s - 2 * m.ghosts, "boundary-stabilization data",
                   "the arcs meeting S are not all vertical or in the ghost set", log);
            // -chi(H') = -chi(H) + chi(S) - 2|G| - 2
            const int neg_chi = -euler_char(h->surface) + chi_s - 2 * m.ghosts - 2;
            expect(neg_chi >= -2 && neg_chi % 2 == 0, "boundary-stabilization data", "compressed surface has negative genus", log);
            const int new_p = p - p_s + 2 * m.ghosts + 2 * q;
            expect(new_p >= 0, "boundary-stabilization data", "negative puncture count", log);
            hr->surface = {(neg_chi + 2) / 2, new_p};

            for (const auto& id : m.boundary) {
                std::erase(from->minus, id);
                to->minus.push_back(id);
                r.find_boundary(id)->owner = to->id;
            }
            from->tangle = {from->tangle.verticals - (p_s - 2 * m.ghosts), from->tangle.bridges + q,
                            from->tangle.ghosts - m.ghosts, from->tangle.loops};
            int p_minus = 0;
            for (const auto& s : minus_surfaces(r, *to)) p_minus += s.punctures;
            TangleSummary t{0, 0, to->tangle.ghosts + m.ghosts, to->tangle.loops};
            t.verticals = p_minus - 2 * t.ghosts;
            t.bridges = (new_p - t.verticals) / 2;
            if (t.verticals < 0 || t.bridges < 0 || (new_p - t.verticals) % 2)
                t = detail::conserving_tangle(new_p, p_minus, to->tangle.loops);
            to->tangle = t;
            break;
        }
    }
    up->product = dn->product = false;
    up->ball = dn->ball = false;
    if (m.upper) up->tangle = *m.upper;
    if (m.lower) dn->tangle = *m.lower;

    check_side_indices(c, r, m.thick, m.thick, "destabilization", log);
    detail::post_checks(c, r, log);
    return r;
}

Complex apply_unperturb(const Complex& c, const Unperturb& m, CheckLog* log) {
    detail::require_valid_input(c);
    const auto* h = c.find_thick(m.thick);
    expect(h != nullptr, "unperturbation target", "unknown thick level " + m.thick, log);
    Complex r = c;
    auto* hr = r.find_thick(m.thick);
    auto* near = r.find_cb(m.side == Side::Upper ? hr->upper_cb : hr->lower_cb);
    auto* far = r.find_cb(m.side == Side::Upper ? hr->lower_cb : hr->upper_cb);
    expect(near->tangle.bridges >= 1, "perturbation data", "no bridge arc on the " + std::string(to_string(m.side)) + " side", log);
    if (m.merge == MergeCase::BridgeBridge)
        expect(far->tangle.bridges >= 2, "perturbation data", "bridge+bridge merge needs two bridge arcs on the far side", log);
    else
        expect(far->tangle.verticals >= 1 && far->tangle.bridges >= 1, "perturbation data",
               "vertical+bridge merge needs a vertical and a bridge arc on the far side", log);
    expect(h->surface.punctures >= 2, "perturbation data", "thick level meets the graph fewer than twice", log);
    hr->surface.punctures -= 2;
    near->tangle.bridges -= 1;
    far->tangle.bridges -= 1;
    near->product = far->product = false;
    near->ball = far->ball = false;
    check_side_indices(c, r, m.thick, m.thick, "unperturbation", log);
    detail::post_checks(c, r, log);
    return r;
}

Complex apply_undo_removable(const Complex& c, const UndoRemovable& m, CheckLog* log) {
    detail::require_valid_input(c);
    const auto* h = c.find_thick(m.thick);
    expect(h != nullptr, "removable path target", "unknown thick level " + m.thick, log);
    Complex r = c;
    auto* hr = r.find_thick(m.thick);
    auto* up = r.find_cb(hr->upper_cb);
    auto* dn = r.find_cb(hr->lower_cb);
    expect(h->surface.punctures >= 2, "removable path data", "thick level meets the graph fewer than twice", log);
    hr->surface.punctures -= 2;
    if (m.upper || m.lower) {
        expect(m.upper && m.lower, "removable path data", "give both tangles or neither", log);
        up->tangle = *m.upper;
        dn->tangle = *m.lower;
    } else {
        expect(up->tangle.bridges >= 1 && dn->tangle.bridges >= 1, "removable path data",
               "default pattern needs a bridge arc on each side", log);
        up->tangle.bridges -= 1;
        dn->tangle.bridges -= 1;
        (m.loop_side == Side::Upper ? up : dn)->tangle.loops += 1;
    }
    up->product = dn->product = false;
    up->ball = dn->ball = false;
    check_side_indices(c, r, m.thick, m.thick, "removable path", log);
    detail::post_checks(c, r, log);
    return r;
}

MoveOutcome apply_move(const Complex& c, const Move& m) {
    MoveOutcome out;
    out.result = std::visit(
        [&](const auto& mv) -> Complex {
            using T = std::decay_t<decltype(mv)>;
            if constexpr (std::is_same_v<T, Consolidate>) return apply_consolidate(c, mv, &out.log);
            if constexpr (std::is_same_v<T, Untelescope>) return elementary_thinning_sequence(c, mv, &out.log);
            if constexpr (std::is_same_v<T, Destabilize>) return apply_destabilize(c, mv, &out.log);
            if constexpr (std::is_same_v<T, Unperturb>) return apply_unperturb(c, mv, &out.log);
            if constexpr (std::is_same_v<T, UndoRemovable>) return apply_undo_removable(c, mv, &out.log);
        },
        m);
    return out;
}

ReducedCheck is_reduced(const Complex& c, const MoveProposer& proposer) {
    auto pending = pending_consolidations(c);
    if (!pending.empty()) return {false, Move{pending.front()}};
    for (const auto& m : proposer.propose(c)) {
        if (!is_reducing(m) || std::holds_alternative<Consolidate>(m)) continue;
        try {
            apply_move(c, m);
            return {false, m};
        } catch (const MoveError&) {
        }
    }
    return {true, std::nullopt};
}

}  // namespace widthcalc
