#ifndef WIDTHCALC_ORACLES_HPP
#define WIDTHCALC_ORACLES_HPP

#include "widthcalc/complexity.hpp"
#include "widthcalc/gen.hpp"

#include <set>
#include <string>
#include <vector>

// Slow, independent reimplementations used to cross-check the engine.
namespace widthcalc::oracle {

/// Thick levels reachable from `start` by enumerating every simple directed
/// path of thin levels, read straight off the record lists.
std::set<std::string> reach_up_paths(const Complex& c, const std::string& start);
std::set<std::string> reach_down_paths(const Complex& c, const std::string& start);

/// Elementwise comparison after padding both vectors to equal length with -1.
Order compare_padded(std::vector<int> a, std::vector<int> b);

/// Index from the closed form 6*dg + 6*k + 4*(b - gh), valid when the
/// compressionbody conserves punctures.
int mu_closed_form(const Surface& plus, const std::vector<Surface>& minus, const TangleSummary& t);

/// Same complex with every id replaced by a random fresh name and every
/// record list shuffled.
Complex relabel(const Complex& c, Rng& rng);

/// Any directed cycle in the thick digraph, by depth-first search.
bool has_cycle(const Complex& c);

}  // namespace widthcalc::oracle

#endif
