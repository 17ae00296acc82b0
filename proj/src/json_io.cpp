#include "widthcalc/json_io.hpp"

#include <sstream>

namespace widthcalc {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw SchemaError("expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_number_integer()) throw SchemaError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string str_field(const json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_string()) throw SchemaError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

bool opt_bool(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) return false;
    if (!it->is_boolean()) throw SchemaError(std::string("field \"") + key + "\" must be a boolean");
    return it->get<bool>();
}

std::vector<std::string> str_list(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) return {};
    if (!it->is_array()) throw SchemaError(std::string("field \"") + key + "\" must be an array");
    std::vector<std::string> out;
    for (const auto& v : *it) {
        if (!v.is_string()) throw SchemaError(std::string("field \"") + key + "\" must hold strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

const json& array_field(const json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_array()) throw SchemaError(std::string("field \"") + key + "\" must be an array");
    return v;
}

std::optional<TangleSummary> opt_tangle(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return tangle_from_json(*it);
}

Side side_from(const std::string& s) {
    if (s == "upper") return Side::Upper;
    if (s == "lower") return Side::Lower;
    throw SchemaError("side must be \"upper\" or \"lower\", got \"" + s + "\"");
}

ArcType arc_from(const std::string& s) {
    for (auto a : {ArcType::Vertical, ArcType::Bridge, ArcType::Ghost, ArcType::Loop})
        if (s == to_string(a)) return a;
    throw SchemaError("unknown arc type \"" + s + "\"");
}

DestabKind destab_from(const std::string& s) {
    for (auto k : {DestabKind::Stab, DestabKind::MeridStab, DestabKind::Bdy, DestabKind::MeridBdy, DestabKind::GhostBdy,
                   DestabKind::MeridGhostBdy})
        if (s == to_string(k)) return k;
    throw SchemaError("unknown destabilization type \"" + s + "\"");
}

MergeCase merge_from(const std::string& s) {
    for (auto m : {MergeCase::BridgeBridge, MergeCase::VerticalBridge})
        if (s == to_string(m)) return m;
    throw SchemaError("unknown merge case \"" + s + "\"");
}

void put_tangle(json& j, const char* key, const std::optional<TangleSummary>& t) {
    if (t) j[key] = to_json(*t);
}

}  // namespace

json to_json(const Surface& s) { return {{"genus", s.genus}, {"punctures", s.punctures}}; }

json to_json(const TangleSummary& t) {
    return {{"v", t.verticals}, {"b", t.bridges}, {"gh", t.ghosts}, {"loops", t.loops}};
}

json to_json(const Complex& c) {
    json j;
    j["thick"] = json::array();
    j["thin"] = json::array();
    j["boundary"] = json::array();
    j["cbs"] = json::array();
    for (const auto& h : c.thick)
        j["thick"].push_back({{"id", h.id}, {"surface", to_json(h.surface)}, {"upper_cb", h.upper_cb}, {"lower_cb", h.lower_cb}});
    for (const auto& t : c.thin)
        j["thin"].push_back({{"id", t.id}, {"surface", to_json(t.surface)}, {"from_cb", t.from_cb}, {"to_cb", t.to_cb}});
    for (const auto& b : c.boundary)
        j["boundary"].push_back(
            {{"id", b.id}, {"surface", to_json(b.surface)}, {"owner", b.owner}, {"is_drilled_vertex", b.drilled_vertex}});
    for (const auto& cb : c.cbs)
        j["cbs"].push_back({{"id", cb.id},
                            {"plus", cb.plus},
                            {"minus", cb.minus},
                            {"tangle", to_json(cb.tangle)},
                            {"product_certificate", cb.product},
                            {"ball_certificate", cb.ball}});
    if (c.allow_small_boundary_spheres) j["allow_small_boundary_spheres"] = true;
    return j;
}

json to_json(const DiscData& d) {
    json j{{"q", d.q}, {"separating", d.separating}};
    if (d.arc) j["arc"] = to_string(*d.arc);
    if (d.split) {
        const auto& s = *d.split;
        j["split"] = {{"side1", to_json(s.side1)},   {"side2", to_json(s.side2)},   {"ports1", s.ports1},
                      {"ports2", s.ports2},          {"tangle1", to_json(s.tangle1)}, {"tangle2", to_json(s.tangle2)}};
    }
    return j;
}

json to_json(const Move& m) {
    json j{{"kind", kind_name(m)}};
    std::visit(
        [&](const auto& mv) {
            using T = std::decay_t<decltype(mv)>;
            j["thick"] = mv.thick;
            if constexpr (std::is_same_v<T, Consolidate>) {
                j["thin"] = mv.thin;
                put_tangle(j, "merged", mv.merged);
                if (mv.merged_product) j["merged_product"] = true;
            } else if constexpr (std::is_same_v<T, Untelescope>) {
                j["disc_minus"] = to_json(mv.disc_minus);
                j["disc_plus"] = to_json(mv.disc_plus);
                const auto& o = mv.outcome;
                if (!o.ids.empty() || !o.tangles.empty() || !o.products.empty()) {
                    json out{{"ids", o.ids}, {"tangles", json::object()}, {"products", o.products}};
                    for (const auto& [role, t] : o.tangles) out["tangles"][role] = to_json(t);
                    j["outcome"] = out;
                }
            } else if constexpr (std::is_same_v<T, Destabilize>) {
                j["type"] = to_string(mv.kind);
                j["side"] = to_string(mv.side);
                if (!mv.boundary.empty()) j["boundary"] = mv.boundary;
                if (mv.ghosts) j["ghosts"] = mv.ghosts;
                if (mv.arc) j["arc"] = to_string(*mv.arc);
                put_tangle(j, "upper", mv.upper);
                put_tangle(j, "lower", mv.lower);
            } else if constexpr (std::is_same_v<T, Unperturb>) {
                j["side"] = to_string(mv.side);
                j["merge"] = to_string(mv.merge);
            } else if constexpr (std::is_same_v<T, UndoRemovable>) {
                j["loop_side"] = to_string(mv.loop_side);
                put_tangle(j, "upper", mv.upper);
                put_tangle(j, "lower", mv.lower);
            }
        },
        m);
    return j;
}

json to_json(const ComplexityVector& v) { return v.terms(); }

std::string hash_hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json to_json(const TraceStep& s) {
    return {{"step", s.step},
            {"move", to_json(s.move)},
            {"before", to_json(s.before)},
            {"after", to_json(s.after)},
            {"hash", hash_hex(s.hash_after)},
            {"checks", s.checks}};
}

Surface surface_from_json(const json& j) { return {int_field(j, "genus"), int_field(j, "punctures")}; }

TangleSummary tangle_from_json(const json& j) {
    return {int_field(j, "v"), int_field(j, "b"), int_field(j, "gh"), int_field(j, "loops")};
}

Complex complex_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("instance must be a JSON object");
    Complex c;
    for (const auto& h : array_field(j, "thick"))
        c.thick.push_back({str_field(h, "id"), surface_from_json(field(h, "surface")), str_field(h, "upper_cb"),
                           str_field(h, "lower_cb")});
    for (const auto& t : array_field(j, "thin"))
        c.thin.push_back({str_field(t, "id"), surface_from_json(field(t, "surface")), str_field(t, "from_cb"),
                          str_field(t, "to_cb")});
    for (const auto& b : array_field(j, "boundary"))
        c.boundary.push_back({str_field(b, "id"), surface_from_json(field(b, "surface")), str_field(b, "owner"),
                              opt_bool(b, "is_drilled_vertex")});
    for (const auto& cb : array_field(j, "cbs"))
        c.cbs.push_back({str_field(cb, "id"), str_field(cb, "plus"), str_list(cb, "minus"),
                         tangle_from_json(field(cb, "tangle")), opt_bool(cb, "product_certificate"),
                         opt_bool(cb, "ball_certificate")});
    c.allow_small_boundary_spheres = opt_bool(j, "allow_small_boundary_spheres");
    return c;
}

DiscData disc_from_json(const json& j) {
    DiscData d;
    d.q = int_field(j, "q");
    d.separating = opt_bool(j, "separating");
    if (j.contains("arc")) d.arc = arc_from(str_field(j, "arc"));
    if (j.contains("split")) {
        const auto& s = j.at("split");
        d.split = DiscSplit{surface_from_json(field(s, "side1")), surface_from_json(field(s, "side2")),
                            str_list(s, "ports1"),                str_list(s, "ports2"),
                            tangle_from_json(field(s, "tangle1")), tangle_from_json(field(s, "tangle2"))};
    }
    return d;
}

Move move_from_json(const json& j) {
    const auto kind = str_field(j, "kind");
    const auto thick = str_field(j, "thick");
    if (kind == "consolidate") return Consolidate{thick, str_field(j, "thin"), opt_tangle(j, "merged"), opt_bool(j, "merged_product")};
    if (kind == "untelescope") {
        Untelescope u{thick, disc_from_json(field(j, "disc_minus")), disc_from_json(field(j, "disc_plus")), {}};
        if (j.contains("outcome")) {
            const auto& o = j.at("outcome");
            if (o.contains("ids")) {
                if (!o.at("ids").is_object()) throw SchemaError("outcome ids must be an object");
                for (const auto& [role, id] : o.at("ids").items()) {
                    if (!id.is_string()) throw SchemaError("outcome ids must be strings");
                    u.outcome.ids[role] = id.get<std::string>();
                }
            }
            if (o.contains("tangles"))
                for (const auto& [role, t] : o.at("tangles").items()) u.outcome.tangles[role] = tangle_from_json(t);
            for (const auto& r : str_list(o, "products")) u.outcome.products.insert(r);
        }
        return u;
    }
    if (kind == "destabilize") {
        Destabilize d;
        d.kind = destab_from(str_field(j, "type"));
        d.thick = thick;
        if (j.contains("side")) d.side = side_from(str_field(j, "side"));
        d.boundary = str_list(j, "boundary");
        if (j.contains("ghosts")) d.ghosts = int_field(j, "ghosts");
        if (j.contains("arc")) d.arc = arc_from(str_field(j, "arc"));
        d.upper = opt_tangle(j, "upper");
        d.lower = opt_tangle(j, "lower");
        return d;
    }
    if (kind == "unperturb")
        return Unperturb{thick, side_from(str_field(j, "side")),
                         j.contains("merge") ? merge_from(str_field(j, "merge")) : MergeCase::BridgeBridge};
    if (kind == "undo_removable")
        return UndoRemovable{thick, j.contains("loop_side") ? side_from(str_field(j, "loop_side")) : Side::Lower,
                             opt_tangle(j, "upper"), opt_tangle(j, "lower")};
    throw SchemaError("unknown move kind \"" + kind + "\"");
}

std::vector<Move> moves_from_json(const json& doc) {
    std::vector<Move> out;
    if (!doc.is_object() || !doc.contains("moves")) return out;
    for (const auto& m : array_field(doc, "moves")) out.push_back(move_from_json(m));
    return out;
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("parse error: ") + e.what());
    }
}

}  // namespace widthcalc
