#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchmult {

enum class ErrorCode {
    ZeroPolynomial,
    InvalidFactor,
    DivisionByZero,
    ModulusMismatch,
    ShapeError,
    ParseError,
    DuplicateEdge,
    SelfLoop,
    BadVertex,
    UnknownBuiltin,
    BadSize,
    TooLarge,
    NotATree,
    NotSpecial,
    NotARoot,
    InvalidCover,
    UnknownCampaign,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for every contract violation in the library; the
// code identifies which precondition failed.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace matchmult
