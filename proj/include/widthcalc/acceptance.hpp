#ifndef WIDTHCALC_ACCEPTANCE_HPP
#define WIDTHCALC_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace widthcalc {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double time_limit = 0;  ///< 0 when the criterion has no time bound
};

struct AcceptanceConfig {
    std::uint64_t seed = 20261016;
    /// Divides every sample count; 1 runs the full suite.
    int scale_down = 1;
};

/// Runs the ten acceptance criteria and returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {});

/// "PASS  3  name  (detail, 0.12 s)"
std::string format_line(const CriterionResult& r);

}  // namespace widthcalc

#endif
