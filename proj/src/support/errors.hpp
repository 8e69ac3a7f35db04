#pragma once

#include <stdexcept>
#include <string>

namespace gzp {

enum class ErrorKind {
    InputError,
    PoleEvaluation,
    BadFactorization,
    BadSignature,
    DegenerateConfig,
    NotCanonical,
    ZeroCoordinate,
    PathThroughSingularity,
    ToleranceNotMet,
    ShapeMismatch,
    PrecisionTooLow,
    RankUnstable,
    ZeroQ,
    NonRationalCoefficient,
    NotSimplePole,
    NonRationalResidueRatios,
    NonRealPeriods,
    UnmarkedBranchValue,
    ConstantMap,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InputError: return "InputError";
        case ErrorKind::PoleEvaluation: return "PoleEvaluation";
        case ErrorKind::BadFactorization: return "BadFactorization";
        case ErrorKind::BadSignature: return "BadSignature";
        case ErrorKind::DegenerateConfig: return "DegenerateConfig";
        case ErrorKind::NotCanonical: return "NotCanonical";
        case ErrorKind::ZeroCoordinate: return "ZeroCoordinate";
        case ErrorKind::PathThroughSingularity: return "PathThroughSingularity";
        case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
        case ErrorKind::RankUnstable: return "RankUnstable";
        case ErrorKind::ZeroQ: return "ZeroQ";
        case ErrorKind::NonRationalCoefficient: return "NonRationalCoefficient";
        case ErrorKind::NotSimplePole: return "NotSimplePole";
        case ErrorKind::NonRationalResidueRatios: return "NonRationalResidueRatios";
        case ErrorKind::NonRealPeriods: return "NonRealPeriods";
        case ErrorKind::UnmarkedBranchValue: return "UnmarkedBranchValue";
        case ErrorKind::ConstantMap: return "ConstantMap";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Exit-status / C-status classification. "false" domain verdicts are not
// errors and never throw; these map "could not compute" conditions.
inline int error_exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::ToleranceNotMet:
        case ErrorKind::PrecisionTooLow:
        case ErrorKind::RankUnstable:
            return 3;
        default:
            return 2;
    }
}

}  // namespace gzp
