#ifndef WIDTHCALC_VALIDATE_HPP
#define WIDTHCALC_VALIDATE_HPP

#include "widthcalc/model.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace widthcalc {

struct Violation {
    std::string invariant;  ///< short stable name, e.g. "closed flow line"
    std::string id;         ///< offending record id (may be empty)
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(const std::string& invariant) const;
    std::string to_string() const;
};

/// Checks every structural and numeric invariant of the drilled model.
/// Total: malformed references become violations, never exceptions.
ValidationReport validate(const Complex& c);

/// Thrown by operations whose precondition is a valid complex.
class InvalidComplex : public std::runtime_error {
public:
    explicit InvalidComplex(ValidationReport r);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

void require_valid(const Complex& c);

}  // namespace widthcalc

#endif
