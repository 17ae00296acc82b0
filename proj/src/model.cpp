#include "widthcalc/model.hpp"
#include "widthcalc/index.hpp"

#include <algorithm>
#include <stdexcept>

namespace widthcalc {

int euler_char(const Surface& s) { return 2 - 2 * s.genus; }

const char* to_string(Side s) { return s == Side::Upper ? "upper" : "lower"; }

namespace {

template <class Vec>
auto find_by_id(Vec& v, const std::string& id) -> decltype(&v.front()) {
    auto it = std::find_if(v.begin(), v.end(), [&](const auto& r) { return r.id == id; });
    return it == v.end() ? nullptr : &*it;
}

template <class Vec>
void erase_by_id(Vec& v, const std::string& id) {
    std::erase_if(v, [&](const auto& r) { return r.id == id; });
}

}  // namespace

const ThickLevel* Complex::find_thick(const std::string& id) const { return find_by_id(thick, id); }
const ThinLevel* Complex::find_thin(const std::string& id) const { return find_by_id(thin, id); }
const BoundaryLevel* Complex::find_boundary(const std::string& id) const { return find_by_id(boundary, id); }
const Compressionbody* Complex::find_cb(const std::string& id) const { return find_by_id(cbs, id); }
ThickLevel* Complex::find_thick(const std::string& id) { return find_by_id(thick, id); }
ThinLevel* Complex::find_thin(const std::string& id) { return find_by_id(thin, id); }
BoundaryLevel* Complex::find_boundary(const std::string& id) { return find_by_id(boundary, id); }
Compressionbody* Complex::find_cb(const std::string& id) { return find_by_id(cbs, id); }

std::optional<Surface> Complex::port_surface(const std::string& id) const {
    if (auto* t = find_thin(id)) return t->surface;
    if (auto* b = find_boundary(id)) return b->surface;
    return std::nullopt;
}

bool Complex::has_id(const std::string& id) const {
    return find_thick(id) || find_thin(id) || find_boundary(id) || find_cb(id);
}

std::string Complex::fresh_id(const std::string& prefix) const {
    if (!has_id(prefix)) return prefix;
    for (int i = 1;; ++i) {
        auto candidate = prefix + std::to_string(i);
        if (!has_id(candidate)) return candidate;
    }
}

std::optional<Side> Complex::side_of(const Compressionbody& cb) const {
    auto* h = find_thick(cb.plus);
    if (!h) return std::nullopt;
    if (h->upper_cb == cb.id) return Side::Upper;
    if (h->lower_cb == cb.id) return Side::Lower;
    return std::nullopt;
}

const Compressionbody* Complex::cb_on(const ThickLevel& h, Side s) const {
    return find_cb(s == Side::Upper ? h.upper_cb : h.lower_cb);
}

void Complex::erase_thick(const std::string& id) { erase_by_id(thick, id); }
void Complex::erase_thin(const std::string& id) { erase_by_id(thin, id); }
void Complex::erase_boundary(const std::string& id) { erase_by_id(boundary, id); }
void Complex::erase_cb(const std::string& id) { erase_by_id(cbs, id); }

Surface plus_surface(const Complex& c, const Compressionbody& cb) {
    auto* h = c.find_thick(cb.plus);
    if (!h) throw std::invalid_argument("compressionbody " + cb.id + ": unknown thick level " + cb.plus);
    return h->surface;
}

std::vector<Surface> minus_surfaces(const Complex& c, const Compressionbody& cb) {
    std::vector<Surface> out;
    out.reserve(cb.minus.size());
    for (const auto& port : cb.minus)
        if (auto s = c.port_surface(port)) out.push_back(*s);
    return out;
}

}  // namespace widthcalc
