#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shiftdec {

enum class Errc {
    NotPrime,
    OutOfRange,
    NotADivisor,
    ZeroElement,
    ModulusMismatch,
    ZeroDivisor,
    ZeroScale,
    ZeroParameter,
    ZeroInProductTarget,
    ZeroInTarget,
    MissingZero,
    InternalMismatch,
    DegreeOverflow,
    ZeroPolynomial,
    HypothesisViolated,
    BoundViolation,
    RootOfH,
    FactorialOverflow,
    NonInvertibleIndex,
    DegenerateInput,
    TheoremViolation,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string & what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace shiftdec
