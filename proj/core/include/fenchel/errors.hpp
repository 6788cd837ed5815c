#pragma once

#include <stdexcept>
#include <string>

namespace fenchel {

/// A conjugation engine could not produce a value (as opposed to the value
/// being +inf, which is a regular result).
class EngineError : public std::runtime_error {
public:
    enum class Reason {
        NoConvergence,      // iteration budget exhausted
        HessianNotSpd,      // Newton step undefined
        OutOfRange,         // target outside the gradient range / grid support
        MissingDerivative,  // engine needs a gradient the function lacks
        NoClosedForm,       // no conjugation rule for this family
    };

    EngineError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
    Reason reason() const { return reason_; }

    static const char* reason_name(Reason r) {
        switch (r) {
            case Reason::NoConvergence: return "no-convergence";
            case Reason::HessianNotSpd: return "hessian-not-spd";
            case Reason::OutOfRange: return "out-of-range";
            case Reason::MissingDerivative: return "missing-derivative";
            case Reason::NoClosedForm: return "no-closed-form";
        }
        return "unknown";
    }

private:
    Reason reason_;
};

}  // namespace fenchel
