#ifndef WIDTHCALC_GEN_HPP
#define WIDTHCALC_GEN_HPP

#include "widthcalc/moves.hpp"

#include <optional>
#include <random>
#include <tuple>
#include <vector>

namespace widthcalc {

struct GenConfig {
    int max_thick = 4;
    int max_genus = 3;
    int max_punctures = 6;
    int max_ports = 3;
    bool allow_boundary = true;
    double thin_probability = 0.5;
    double product_probability = 0.5;
    double ball_probability = 0.5;
};

using Rng = std::mt19937_64;

/// A valid complex drawn from cfg. Deterministic in (cfg, rng state).
Complex gen_complex(const GenConfig& cfg, Rng& rng);

/// A random certificate that applies to c, or none.
std::optional<Move> gen_move(const Complex& c, Rng& rng);

/// (|thick|, sum of thick genera, sum of thick punctures).
std::tuple<std::size_t, int, int> shrink_size(const Complex& c);

/// Valid complexes strictly smaller than c by shrink_size: connected
/// components, pieces left after cutting along a thin level, and results
/// of destabilizing or unperturbing.
std::vector<Complex> shrink(const Complex& c);

/// Thick-level-connected pieces of c.
std::vector<Complex> components(const Complex& c);

}  // namespace widthcalc

#endif
