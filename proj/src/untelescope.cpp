#include "moves_internal.hpp"

#include "widthcalc/complexity.hpp"
#include "widthcalc/index.hpp"
#include "widthcalc/validate.hpp"

#include <algorithm>

namespace widthcalc {

using detail::expect;

namespace {

struct Stage1 {
    Complex result;
    std::map<std::string, std::string> ids;
    bool split_minus = false;
    bool split_plus = false;
};

struct SideCut {
    int lost_genus = 0;
    int lost_punctures = 0;
    int added = 0;
};

SideCut side_cut(const DiscData& d) {
    if (!d.separating) return {1, 0, 2 * d.q};
    return {d.split->side2.genus, d.split->side2.punctures, d.q};
}

const std::map<std::string, std::string>& default_suffixes() {
    static const std::map<std::string, std::string> s{
        {"h_minus", "_lo"},         {"h_plus", "_hi"},           {"f", "_F"},
        {"h_minus_split", "_lo_s"}, {"phi_minus", "_phi_lo"},    {"h_plus_split", "_hi_s"},
        {"phi_plus", "_phi_hi"},    {"minus_upper", "_lo_up"},   {"plus_lower", "_hi_down"},
        {"lower_split", "_L_s"},    {"upper_split", "_U_s"},     {"product_minus", "_prod_lo"},
        {"product_plus", "_prod_hi"}};
    return s;
}

Stage1 untelescope_stage1(const Complex& c, const Untelescope& m, CheckLog* log) {
    detail::require_valid_input(c);
    const auto* h = c.find_thick(m.thick);
    expect(h != nullptr, "untelescope target", "unknown thick level " + m.thick, log);
    const auto& dm = m.disc_minus;
    const auto& dp = m.disc_plus;
    const auto* L = c.cb_on(*h, Side::Lower);
    const auto* U = c.cb_on(*h, Side::Upper);

    auto lower = boundary_reduce(*L, c, dm, log);
    auto upper = boundary_reduce(*U, c, dp, log);

    const auto g = h->surface.genus;
    const auto p = h->surface.punctures;
    const auto cm = side_cut(dm);
    const auto cp = side_cut(dp);
    if (dm.separating && dp.separating)
        expect(dm.split->side2.punctures + dp.split->side2.punctures <= p, "disjoint discs",
               "split-off regions of the two discs overlap", log);
    const Surface f_surf{g - cm.lost_genus - cp.lost_genus,
                         p - cm.lost_punctures - cp.lost_punctures + cm.added + cp.added};
    expect(f_surf.genus >= 0 && f_surf.punctures >= 0, "disjoint discs",
           "the two discs cannot be disjoint on this surface", log);
    expect(lower.pieces[0].plus == Surface{g - cm.lost_genus, p - cm.lost_punctures + cm.added}, "disc data",
           "inconsistent lower piece", log);

    Stage1 out;
    out.split_minus = dm.separating;
    out.split_plus = dp.separating;
    Complex r = c;

    // Role ids.
    std::vector<std::string> taken;
    auto id_for = [&](const std::string& role, const std::string& fallback) {
        auto it = m.outcome.ids.find(role);
        std::string id = it != m.outcome.ids.end() ? it->second : fallback;
        if (it == m.outcome.ids.end()) {
            std::string base = id;
            for (int n = 1; r.has_id(id) || std::count(taken.begin(), taken.end(), id); ++n)
                id = base + std::to_string(n);
        }
        taken.push_back(id);
        out.ids[role] = id;
        return id;
    };
    out.ids["lower_main"] = m.outcome.ids.contains("lower_main") ? m.outcome.ids.at("lower_main") : L->id;
    out.ids["upper_main"] = m.outcome.ids.contains("upper_main") ? m.outcome.ids.at("upper_main") : U->id;
    taken.push_back(out.ids["lower_main"]);
    taken.push_back(out.ids["upper_main"]);
    for (const auto& [role, suffix] : default_suffixes()) {
        if ((role == "h_minus_split" || role == "phi_minus" || role == "lower_split" || role == "product_minus") &&
            !out.split_minus)
            continue;
        if ((role == "h_plus_split" || role == "phi_plus" || role == "upper_split" || role == "product_plus") &&
            !out.split_plus)
            continue;
        id_for(role, m.thick + suffix);
    }
    const auto& id = out.ids;

    const std::string L_id = L->id, U_id = U->id;
    r.erase_cb(L_id);
    r.erase_cb(U_id);
    r.erase_thick(m.thick);
    expect(std::all_of(taken.begin(), taken.end(), [&](const std::string& s) { return !r.has_id(s); }) &&
               std::set<std::string>(taken.begin(), taken.end()).size() == taken.size(),
           "untelescope ids", "replacement ids collide", log);

    auto tangle_for = [&](const std::string& role, TangleSummary t) {
        auto it = m.outcome.tangles.find(role);
        return it != m.outcome.tangles.end() ? it->second : t;
    };
    auto add_cb = [&](const std::string& role, const std::string& plus, std::vector<std::string> minus,
                      TangleSummary t, bool product, const std::string& old_owner) {
        Compressionbody cb{id.at(role), plus, std::move(minus), tangle_for(role, t),
                           product || m.outcome.products.contains(role), false};
        for (const auto& port : cb.minus)
            if (!old_owner.empty()) detail::retarget_port(r, port, old_owner, cb.id);
        r.cbs.push_back(std::move(cb));
    };

    const Surface hm = lower.pieces[0].plus;
    const Surface hp = upper.pieces[0].plus;
    r.thick.push_back({id.at("h_minus"), hm, id.at("minus_upper"), id.at("lower_main")});
    r.thick.push_back({id.at("h_plus"), hp, id.at("upper_main"), id.at("plus_lower")});
    r.thin.push_back({id.at("f"), f_surf, id.at("minus_upper"), id.at("plus_lower")});

    add_cb("lower_main", id.at("h_minus"), lower.pieces[0].ports, lower.pieces[0].tangle, false, L_id);
    add_cb("upper_main", id.at("h_plus"), upper.pieces[0].ports, upper.pieces[0].tangle, false, U_id);

    std::vector<std::string> mu_minus{id.at("f")};
    std::vector<std::string> pl_minus{id.at("f")};
    if (out.split_plus) {
        const Surface s = upper.pieces[1].plus;
        expect(s != Surface{0, 1}, "thin level not a once-punctured sphere", "split-off level meets the graph once", log);
        mu_minus.push_back(id.at("phi_plus"));
        r.thick.push_back({id.at("h_plus_split"), s, id.at("upper_split"), id.at("product_plus")});
        r.thin.push_back({id.at("phi_plus"), s, id.at("minus_upper"), id.at("product_plus")});
        add_cb("upper_split", id.at("h_plus_split"), upper.pieces[1].ports, upper.pieces[1].tangle, false, U_id);
        add_cb("product_plus", id.at("h_plus_split"), {id.at("phi_plus")}, {s.punctures, 0, 0, 0}, true, "");
    }
    if (out.split_minus) {
        const Surface s = lower.pieces[1].plus;
        expect(s != Surface{0, 1}, "thin level not a once-punctured sphere", "split-off level meets the graph once", log);
        pl_minus.push_back(id.at("phi_minus"));
        r.thick.push_back({id.at("h_minus_split"), s, id.at("product_minus"), id.at("lower_split")});
        r.thin.push_back({id.at("phi_minus"), s, id.at("product_minus"), id.at("plus_lower")});
        add_cb("lower_split", id.at("h_minus_split"), lower.pieces[1].ports, lower.pieces[1].tangle, false, L_id);
        add_cb("product_minus", id.at("h_minus_split"), {id.at("phi_minus")}, {s.punctures, 0, 0, 0}, true, "");
    }
    expect(f_surf != Surface{0, 1}, "thin level not a once-punctured sphere", "F meets the graph once", log);
    add_cb("minus_upper", id.at("h_minus"), mu_minus, {hm.punctures, 0, dp.q, 0}, false, "");
    add_cb("plus_lower", id.at("h_plus"), pl_minus, {hp.punctures, 0, dm.q, 0}, false, "");

    auto report = validate(r);
    expect(report.ok(), "result validates", report.to_string(), log);
    expect(thick_digraph(r).is_acyclic(), "acyclicity", "untelescoping created a closed flow line", log);
    out.result = std::move(r);
    return out;
}

Complex consolidate_splits(const Stage1& s, CheckLog* log) {
    Complex r = s.result;
    if (s.split_minus) r = apply_consolidate(r, {s.ids.at("h_minus_split"), s.ids.at("phi_minus"), std::nullopt, false}, log);
    if (s.split_plus) r = apply_consolidate(r, {s.ids.at("h_plus_split"), s.ids.at("phi_plus"), std::nullopt, false}, log);
    return r;
}

void check_index_relations(const Complex& c, const std::string& h, const Complex& h2, const Stage1& s,
                           CheckLog* log) {
    const auto& H = *c.find_thick(h);
    const auto& Hm = *h2.find_thick(s.ids.at("h_minus"));
    const auto& Hp = *h2.find_thick(s.ids.at("h_plus"));
    auto mu_side = [](const Complex& x, const ThickLevel& t, Side side) { return mu(*x.cb_on(t, side), x); };
    const int dn = mu_side(c, H, Side::Lower), up = mu_side(c, H, Side::Upper);
    const int dn_m = mu_side(h2, Hm, Side::Lower), up_m = mu_side(h2, Hm, Side::Upper);
    const int dn_p = mu_side(h2, Hp, Side::Lower), up_p = mu_side(h2, Hp, Side::Upper);
    auto str = [](int a, int b) { return std::to_string(a) + " vs " + std::to_string(b); };

    expect(dn_m < dn, "untelescope lower decrease", str(dn_m, dn), log);
    expect(up_p < up, "untelescope upper decrease", str(up_p, up), log);
    expect(dn_m + dn_p == dn + 6, "untelescope lower sum", str(dn_m + dn_p, dn + 6), log);
    expect(up_m + up_p == up + 6, "untelescope upper sum", str(up_m + up_p, up + 6), log);

    const int I_dn = index_down(c, h), I_up = index_up(c, h);
    const int I_dn_m = index_down(h2, Hm.id), I_up_m = index_up(h2, Hm.id);
    const int I_dn_p = index_down(h2, Hp.id), I_up_p = index_up(h2, Hp.id);
    expect(I_dn_m < I_dn, "lower index of H- drops", str(I_dn_m, I_dn), log);
    expect(I_up_m == I_up, "upper index of H- preserved", str(I_up_m, I_up), log);
    expect(I_dn_p == I_dn, "lower index of H+ preserved", str(I_dn_p, I_dn), log);
    expect(I_up_p < I_up, "upper index of H+ drops", str(I_up_p, I_up), log);
}

}  // namespace

Complex apply_untelescope(const Complex& c, const Untelescope& m, CheckLog* log) {
    auto s1 = untelescope_stage1(c, m, log);
    auto h2 = consolidate_splits(s1, nullptr);
    check_index_relations(c, m.thick, h2, s1, log);
    return std::move(s1.result);
}

Complex elementary_thinning_sequence(const Complex& c, const Untelescope& m, CheckLog* log) {
    auto s1 = untelescope_stage1(c, m, log);
    auto r = consolidate_splits(s1, log);
    check_index_relations(c, m.thick, r, s1, log);

    // Products that only became adjacent to a thin level through the move.
    for (auto pending = pending_consolidations(r); !pending.empty(); pending = pending_consolidations(r))
        r = apply_consolidate(r, pending.front(), log);

    const auto& f = s1.ids.at("f");
    expect(r.find_thin(f) != nullptr, "doubly spotted persistence", "thin level " + f + " was consolidated away", log);
    expect(!r.thin.empty(), "lower complex non-empty", "no thin level left", log);
    expect(pending_consolidations(r).empty(), "no product against a thin level", "pending consolidation remains", log);
    detail::post_checks(c, r, log);
    return r;
}

}  // namespace widthcalc
