#pragma once

#include <stdexcept>
#include <string>

namespace idxt {

// Base for every numeric failure the library can raise.  name() is the
// stable identifier surfaced by the CLI (exit code 3 diagnostics).
class NumericError : public std::runtime_error {
public:
    NumericError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define IDXT_DEFINE_ERROR(Name)                                   \
    class Name : public NumericError {                            \
    public:                                                       \
        explicit Name(const std::string& what)                    \
            : NumericError(#Name, what) {}                        \
    }

IDXT_DEFINE_ERROR(PoleError);        // argument sits on a Gamma pole
IDXT_DEFINE_ERROR(RangeError);       // outside the validated domain
IDXT_DEFINE_ERROR(ParameterPole);    // lower 2F1 parameter at a pole
IDXT_DEFINE_ERROR(LogarithmicCase);  // integer c-a-b, connection formula invalid
IDXT_DEFINE_ERROR(DivergenceError);  // series/integral has no finite value
IDXT_DEFINE_ERROR(BranchError);      // branch point of (-z)^t reached
IDXT_DEFINE_ERROR(DegenerateError);  // formula degenerates (zero denominator)
IDXT_DEFINE_ERROR(StepFailure);      // ODE step size underflow
IDXT_DEFINE_ERROR(QuadratureFailure);// quadrature tolerance unreachable
IDXT_DEFINE_ERROR(ResolutionError);  // grid too coarse for the oscillation

#undef IDXT_DEFINE_ERROR

// Invalid run configuration (CLI exit code 2), kept apart from numeric
// failures so the front end can distinguish the two.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace idxt
