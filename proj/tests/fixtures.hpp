#ifndef WIDTHCALC_TEST_FIXTURES_HPP
#define WIDTHCALC_TEST_FIXTURES_HPP

#include "widthcalc/model.hpp"
#include "widthcalc/moves.hpp"

#include <string>

namespace fixtures {

using namespace widthcalc;

// Thick sphere meeting T in 2b points, b bridge arcs on each side.
inline Complex bridge_sphere(int bridges = 1, bool balls = true) {
    Complex c;
    c.thick.push_back({"H", {0, 2 * bridges}, "U", "D"});
    const bool ball = balls && bridges <= 1;
    c.cbs.push_back({"U", "H", {}, {0, bridges, 0, 0}, false, ball});
    c.cbs.push_back({"D", "H", {}, {0, bridges, 0, 0}, false, ball});
    return c;
}

// Genus-g Heegaard surface, two handlebodies, T empty.
inline Complex heegaard(int genus, const std::string& tag = "") {
    Complex c;
    c.thick.push_back({"H" + tag, {genus, 0}, "U" + tag, "D" + tag});
    c.cbs.push_back({"U" + tag, "H" + tag, {}, {}, false, false});
    c.cbs.push_back({"D" + tag, "H" + tag, {}, {}, false, false});
    return c;
}

inline Complex disjoint_union(Complex a, const Complex& b) {
    a.thick.insert(a.thick.end(), b.thick.begin(), b.thick.end());
    a.thin.insert(a.thin.end(), b.thin.begin(), b.thin.end());
    a.boundary.insert(a.boundary.end(), b.boundary.begin(), b.boundary.end());
    a.cbs.insert(a.cbs.end(), b.cbs.begin(), b.cbs.end());
    return a;
}

// Two balls glued along a sphere, drawn as one thick sphere whose sides each
// contain two unpunctured boundary spheres.
inline Complex two_balls_glued() {
    Complex c;
    c.allow_small_boundary_spheres = true;
    c.thick.push_back({"H", {0, 0}, "U", "D"});
    for (const char* s : {"S1", "S2"}) c.boundary.push_back({s, {0, 0}, "U", false});
    for (const char* s : {"S3", "S4"}) c.boundary.push_back({s, {0, 0}, "D", false});
    c.cbs.push_back({"U", "H", {"S1", "S2"}, {}, false, false});
    c.cbs.push_back({"D", "H", {"S3", "S4"}, {}, false, false});
    return c;
}

inline DiscData split_disc(const std::string& a, const std::string& b) {
    return {0, true, std::nullopt, DiscSplit{{0, 0}, {0, 0}, {a}, {b}, {}, {}}};
}

inline Untelescope two_balls_untelescope() {
    return {"H", split_disc("S3", "S4"), split_disc("S1", "S2"), {}};
}

// n thick 4-punctured spheres stacked along 4-punctured thin spheres
// H0 -> H1 -> ... ; the ends are capped by 2-bridge balls. With products,
// every lower cb above H0 is certified as a product.
inline Complex chain(int n, bool products = false) {
    Complex c;
    for (int i = 0; i < n; ++i) {
        auto s = std::to_string(i);
        c.thick.push_back({"H" + s, {0, 4}, "U" + s, "D" + s});
        c.cbs.push_back({"U" + s, "H" + s, {}, {0, 2, 0, 0}, false, false});
        c.cbs.push_back({"D" + s, "H" + s, {}, {0, 2, 0, 0}, false, false});
    }
    for (int i = 0; i + 1 < n; ++i) {
        auto f = "F" + std::to_string(i);
        auto up = c.find_cb("U" + std::to_string(i));
        auto dn = c.find_cb("D" + std::to_string(i + 1));
        c.thin.push_back({f, {0, 4}, up->id, dn->id});
        up->minus = {f};
        up->tangle = {4, 0, 0, 0};
        dn->minus = {f};
        dn->tangle = {4, 0, 0, 0};
        dn->product = products;
    }
    return c;
}

}  // namespace fixtures

#endif
