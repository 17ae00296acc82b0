#ifndef WIDTHCALC_MOVES_INTERNAL_HPP
#define WIDTHCALC_MOVES_INTERNAL_HPP

#include "widthcalc/moves.hpp"

#include <string>

namespace widthcalc::detail {

inline void expect(bool ok, const std::string& check, const std::string& detail, CheckLog* log) {
    if (!ok) throw MoveError(check, detail);
    if (log) log->passed.push_back(check);
}

/// Points a thin or boundary port that referenced old_cb at new_cb instead.
void retarget_port(Complex& c, const std::string& port, const std::string& old_cb, const std::string& new_cb);

/// Maximal-vertical tangle satisfying conservation for the given boundary
/// puncture totals.
TangleSummary conserving_tangle(int p_plus, int p_minus, int loops);

/// Validity, acyclicity and strict decrease of the oriented complexity.
void post_checks(const Complex& before, const Complex& after, CheckLog* log);

void require_valid_input(const Complex& c);

}  // namespace widthcalc::detail

#endif
