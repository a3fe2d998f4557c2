#include "matchmult/errors.hpp"

namespace matchmult {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::InvalidFactor: return "InvalidFactor";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::BadVertex: return "BadVertex";
        case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
        case ErrorCode::BadSize: return "BadSize";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::NotSpecial: return "NotSpecial";
        case ErrorCode::NotARoot: return "NotARoot";
        case ErrorCode::InvalidCover: return "InvalidCover";
        case ErrorCode::UnknownCampaign: return "UnknownCampaign";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace matchmult
