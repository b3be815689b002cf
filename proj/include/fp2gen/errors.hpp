#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fp2gen {

enum class ErrorCode {
    InvalidModulus,   // not an odd prime, or outside the supported range
    DividesModulus,   // Legendre symbol requested for a multiple of p
    NotNonresidue,    // n is a square mod p, so F_p(sqrt n) is not a field
    ZeroInverse,
    ZeroElement,      // group operation applied to 0
    NotInGroup,       // x^order != identity
    ContextMismatch,  // elements from two different (p, n) fields
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace fp2gen
