#pragma once

#include <stdexcept>
#include <string>

namespace ormod {

enum class Errc {
    VarSpaceMismatch,
    DimensionMismatch,
    SyntaxError,
    UnknownVariable,
    NotInvertible,
    OrderBoundExceeded,
    Degenerate,
    NotQuadratic,
    DegreeTooSmall,
    BadS,
    AlgebraMismatch,
    DegreeBoundViolated,
    NotRealizable,
    NotOrthogonal,
    WrongDegree,
    DivisibilityFailure,
    NotClosed,
    WrongShape,
    NotChainMap,
    ZeroPolynomial,
    NonHomogeneous,
    InvalidArgument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::VarSpaceMismatch: return "VarSpaceMismatch";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::UnknownVariable: return "UnknownVariable";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::OrderBoundExceeded: return "OrderBoundExceeded";
        case Errc::Degenerate: return "Degenerate";
        case Errc::NotQuadratic: return "NotQuadratic";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::BadS: return "BadS";
        case Errc::AlgebraMismatch: return "AlgebraMismatch";
        case Errc::DegreeBoundViolated: return "DegreeBoundViolated";
        case Errc::NotRealizable: return "NotRealizable";
        case Errc::NotOrthogonal: return "NotOrthogonal";
        case Errc::WrongDegree: return "WrongDegree";
        case Errc::DivisibilityFailure: return "DivisibilityFailure";
        case Errc::NotClosed: return "NotClosed";
        case Errc::WrongShape: return "WrongShape";
        case Errc::NotChainMap: return "NotChainMap";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::NonHomogeneous: return "NonHomogeneous";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ormod
