#pragma once

#include <string>

namespace fenchel {

/// Uniform shape for verification results: {check, status, worst_violation,
/// witness}. The witness is a short human-readable location of the worst
/// offender (a probe point, a parameter seed, ...).
struct CheckReport {
    std::string check;
    std::string status;  // pass | fail | inconclusive | trivially-pass | vacuous
    double worst_violation = 0.0;
    std::string witness;

    bool passed() const { return status == "pass" || status == "trivially-pass" || status == "vacuous"; }
};

std::string check_report_to_json(const CheckReport& r);

}  // namespace fenchel
