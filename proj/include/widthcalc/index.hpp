#ifndef WIDTHCALC_INDEX_HPP
#define WIDTHCALC_INDEX_HPP

#include "widthcalc/model.hpp"

#include <span>

namespace widthcalc {

/// Index of a compressionbody given only its boundary data:
///   3(-chi(d+) + sum chi(d-)) + 2(p(d+) - sum p(d-)) + 6.
/// Always even. Computed on the drilled model, so interior vertices are
/// already among the negative boundary.
int mu_profile(const Surface& plus, std::span<const Surface> minus);

/// Index of a compressionbody inside a complex. Throws std::invalid_argument
/// when the compressionbody's references do not resolve.
int mu(const Compressionbody& cb, const Complex& c);

/// Index of the empty compressionbody.
constexpr int mu_empty() { return 0; }

/// Numeric trivial-ball profiles: no negative boundary, sphere with 0 or 2
/// punctures.
/// Ghost arcs are cores of 1-handles joining punctured components of d-, and
/// every unpunctured component needs a core of its own:
///   ghosts <= genus(d+) - sum genus(d-) + #punctured(d-) - 1.
/// Implies mu >= 6 when d- is non-empty.
bool ghost_arcs_fit(const Surface& plus, std::span<const Surface> minus, const TangleSummary& t);

bool is_empty_ball_profile(const Surface& plus, std::span<const Surface> minus);
bool is_arc_ball_profile(const Surface& plus, std::span<const Surface> minus);

}  // namespace widthcalc

#endif
