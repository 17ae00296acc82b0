#include "widthcalc/validate.hpp"
#include "widthcalc/complexity.hpp"
#include "widthcalc/index.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace widthcalc {

bool ValidationReport::has(const std::string& invariant) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.invariant == invariant; });
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.invariant;
        if (!v.id.empty()) os << " [" << v.id << "]";
        if (!v.detail.empty()) os << ": " << v.detail;
        os << '\n';
    }
    return os.str();
}

InvalidComplex::InvalidComplex(ValidationReport r)
    : std::runtime_error("invalid complex:\n" + r.to_string()), report_(std::move(r)) {}

void require_valid(const Complex& c) {
    auto r = validate(c);
    if (!r.ok()) throw InvalidComplex(std::move(r));
}

namespace {

class Checker {
public:
    explicit Checker(const Complex& c) : c_(c) {}

    ValidationReport run() {
        if (c_.thick.empty()) add("non-empty", "", "at least one thick level is required");
        check_ids();
        for (const auto& h : c_.thick) check_thick(h);
        for (const auto& t : c_.thin) check_thin(t);
        for (const auto& b : c_.boundary) check_boundary(b);
        for (const auto& cb : c_.cbs) check_cb(cb);
        check_flow();
        return std::move(report_);
    }

private:
    void add(std::string invariant, std::string id, std::string detail) {
        report_.violations.push_back({std::move(invariant), std::move(id), std::move(detail)});
    }

    void check_surface(const std::string& id, const Surface& s) {
        if (s.genus < 0 || s.punctures < 0)
            add("surface non-negative", id, "genus and punctures must be >= 0");
    }

    void check_ids() {
        std::map<std::string, int> seen;
        auto note = [&](const std::string& id) {
            if (id.empty()) add("non-empty id", "", "record with empty id");
            if (++seen[id] == 2) add("unique ids", id, "id used by more than one record");
        };
        for (const auto& r : c_.thick) note(r.id);
        for (const auto& r : c_.thin) note(r.id);
        for (const auto& r : c_.boundary) note(r.id);
        for (const auto& r : c_.cbs) note(r.id);
    }

    void check_thick(const ThickLevel& h) {
        check_surface(h.id, h.surface);
        if (h.upper_cb == h.lower_cb)
            add("distinct sides", h.id, "upper and lower compressionbody coincide");
        for (const auto* ref : {&h.upper_cb, &h.lower_cb}) {
            auto* cb = c_.find_cb(*ref);
            if (!cb)
                add("unresolved reference", h.id, "compressionbody " + *ref);
            else if (cb->plus != h.id)
                add("plus boundary", h.id, "compressionbody " + *ref + " does not have this level as its positive boundary");
        }
    }

    int occurrences(const std::string& port) const {
        int n = 0;
        for (const auto& cb : c_.cbs) n += static_cast<int>(std::count(cb.minus.begin(), cb.minus.end(), port));
        return n;
    }

    bool lists_port(const std::string& cb_id, const std::string& port) const {
        auto* cb = c_.find_cb(cb_id);
        return cb && std::count(cb->minus.begin(), cb->minus.end(), port) == 1;
    }

    void check_thin(const ThinLevel& t) {
        check_surface(t.id, t.surface);
        if (t.surface == Surface{0, 1})
            add("once-punctured thin sphere", t.id, "a thin sphere meets the graph exactly once");
        if (t.from_cb == t.to_cb) add("distinct sides", t.id, "from and to compressionbody coincide");
        auto* from = c_.find_cb(t.from_cb);
        auto* to = c_.find_cb(t.to_cb);
        if (!from) add("unresolved reference", t.id, "compressionbody " + t.from_cb);
        if (!to) add("unresolved reference", t.id, "compressionbody " + t.to_cb);
        if (!from || !to) return;
        if (!lists_port(t.from_cb, t.id) || !lists_port(t.to_cb, t.id) || occurrences(t.id) != 2)
            add("thin adjacency", t.id, "must appear in the negative boundary of exactly its two compressionbodies");
        if (c_.side_of(*from) != Side::Upper)
            add("orientation coherence", t.id, "flows out of " + t.from_cb + ", which is not an upper compressionbody");
        if (c_.side_of(*to) != Side::Lower)
            add("orientation coherence", t.id, "flows into " + t.to_cb + ", which is not a lower compressionbody");
    }

    void check_boundary(const BoundaryLevel& b) {
        check_surface(b.id, b.surface);
        if (!c_.allow_small_boundary_spheres && b.surface.genus == 0 && b.surface.punctures <= 2)
            add("small boundary sphere", b.id, "boundary sphere meets the graph two or fewer times");
        if (b.drilled_vertex && (b.surface.genus != 0 || b.surface.punctures < 3))
            add("drilled vertex valence", b.id, "a drilled vertex is a sphere with at least 3 punctures");
        if (!c_.find_cb(b.owner))
            add("unresolved reference", b.id, "compressionbody " + b.owner);
        else if (!lists_port(b.owner, b.id) || occurrences(b.id) != 1)
            add("boundary adjacency", b.id, "must appear exactly once, in its owner's negative boundary");
    }

    void check_cb(const Compressionbody& cb) {
        const auto& t = cb.tangle;
        if (t.verticals < 0 || t.bridges < 0 || t.ghosts < 0 || t.loops < 0)
            add("tangle non-negative", cb.id, "tangle counts must be >= 0");
        auto* h = c_.find_thick(cb.plus);
        if (!h) {
            add("unresolved reference", cb.id, "thick level " + cb.plus);
            return;
        }
        if (!c_.side_of(cb))
            add("plus boundary", cb.id, "thick level " + cb.plus + " does not list this compressionbody");

        bool resolved = true;
        std::vector<Surface> minus;
        std::map<std::string, int> seen;
        for (const auto& port : cb.minus) {
            if (++seen[port] == 2) add("duplicate port", cb.id, port);
            if (auto* thin = c_.find_thin(port)) {
                if (thin->from_cb != cb.id && thin->to_cb != cb.id)
                    add("thin adjacency", cb.id, "lists thin level " + port + " which does not name it");
                minus.push_back(thin->surface);
            } else if (auto* b = c_.find_boundary(port)) {
                if (b->owner != cb.id)
                    add("boundary adjacency", cb.id, "lists boundary level " + port + " owned by " + b->owner);
                minus.push_back(b->surface);
            } else {
                add("unresolved reference", cb.id, "port " + port);
                resolved = false;
            }
        }
        if (!resolved) return;

        const auto& plus = h->surface;
        int p_minus = 0, g_minus = 0;
        for (const auto& s : minus) {
            p_minus += s.punctures;
            g_minus += s.genus;
        }
        if (plus.punctures != t.verticals + 2 * t.bridges)
            add("puncture conservation up", cb.id,
                "p(d+) = " + std::to_string(plus.punctures) + " but v + 2b = " +
                    std::to_string(t.verticals + 2 * t.bridges));
        if (p_minus != t.verticals + 2 * t.ghosts)
            add("puncture conservation down", cb.id,
                "sum p(d-) = " + std::to_string(p_minus) + " but v + 2gh = " +
                    std::to_string(t.verticals + 2 * t.ghosts));
        if (plus.genus < g_minus)
            add("genus feasibility", cb.id, "genus(d+) < sum genus(d-)");

        if (!ghost_arcs_fit(plus, minus, t))
            add("ghost arc bound", cb.id, "more ghost arcs than 1-handles over the negative boundary");
        if (!minus.empty() && mu_profile(plus, minus) < 6)
            add("index lower bound", cb.id, "mu < 6 with non-empty negative boundary");

        if (cb.product && cb.ball) add("certificate exclusivity", cb.id, "both product and ball certified");
        if (cb.product) {
            if (minus.size() != 1 || minus[0] != plus || t.bridges || t.ghosts || t.loops)
                add("product certificate", cb.id, "numeric profile is not a trivial product");
        }
        if (cb.ball) {
            bool shape = minus.empty() && plus.genus == 0 && (plus.punctures == 0 || plus.punctures == 2);
            bool tangle = t == TangleSummary{} || t == TangleSummary{0, 1, 0, 0};
            if (!shape || !tangle) add("ball certificate", cb.id, "numeric profile is not a trivial ball");
        }
    }

    void check_flow() {
        auto g = thick_digraph(c_);
        for (const auto& id : g.on_cycle())
            add("closed flow line", id, "thick level lies on a directed cycle of thin levels");
    }

    const Complex& c_;
    ValidationReport report_;
};

}  // namespace

ValidationReport validate(const Complex& c) { return Checker(c).run(); }

}  // namespace widthcalc
