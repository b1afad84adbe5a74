#pragma once

#include <stdexcept>
#include <string>

namespace ul2 {

enum class ErrorCode {
    OutOfRange,
    SelfLoop,
    DuplicateEdge,
    NotPendant,
    NotAnEdge,
    NotUnicyclic,
    GirthTooSmall,
    OverBound,
    IsolatedVertex,
    NonConvergence,
    IndexOutOfRange,
    SizeMismatch,
    UnknownFamily,
    MalformedParams,
    ZeroDenominator,
    Precondition,
    Parse,
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::NotPendant: return "not-pendant";
    case ErrorCode::NotAnEdge: return "not-an-edge";
    case ErrorCode::NotUnicyclic: return "not-unicyclic";
    case ErrorCode::GirthTooSmall: return "girth-too-small";
    case ErrorCode::OverBound: return "over-bound";
    case ErrorCode::IsolatedVertex: return "isolated-vertex";
    case ErrorCode::NonConvergence: return "non-convergence";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::SizeMismatch: return "size-mismatch";
    case ErrorCode::UnknownFamily: return "unknown-family";
    case ErrorCode::MalformedParams: return "malformed-params";
    case ErrorCode::ZeroDenominator: return "zero-denominator";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Parse: return "parse";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& msg)
        : std::runtime_error(std::string(to_string(c)) + ": " + msg), code_(c) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ul2
