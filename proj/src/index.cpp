#include "widthcalc/index.hpp"

#include <stdexcept>

namespace widthcalc {

int mu_profile(const Surface& plus, std::span<const Surface> minus) {
    int chi_minus = 0;
    int p_minus = 0;
    for (const auto& s : minus) {
        chi_minus += euler_char(s);
        p_minus += s.punctures;
    }
    return 3 * (-euler_char(plus) + chi_minus) + 2 * (plus.punctures - p_minus) + 6;
}

int mu(const Compressionbody& cb, const Complex& c) {
    auto plus = plus_surface(c, cb);
    std::vector<Surface> minus;
    for (const auto& port : cb.minus) {
        auto s = c.port_surface(port);
        if (!s) throw std::invalid_argument("compressionbody " + cb.id + ": unknown port " + port);
        minus.push_back(*s);
    }
    return mu_profile(plus, minus);
}

bool ghost_arcs_fit(const Surface& plus, std::span<const Surface> minus, const TangleSummary& t) {
    int g = 0, punctured = 0;
    for (const auto& s : minus) {
        g += s.genus;
        punctured += s.punctures > 0;
    }
    if (punctured == 0) return t.ghosts == 0;
    return t.ghosts <= plus.genus - g + punctured - 1;
}

bool is_empty_ball_profile(const Surface& plus, std::span<const Surface> minus) {
    return minus.empty() && plus == Surface{0, 0};
}

bool is_arc_ball_profile(const Surface& plus, std::span<const Surface> minus) {
    return minus.empty() && plus == Surface{0, 2};
}

}  // namespace widthcalc
