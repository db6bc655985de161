#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quasitoric {

enum class ErrorKind {
    InvalidArgument,
    // arithmetic
    NotSquarefree,
    NoRootInInterval,
    MultipleRootsInInterval,
    DivisionByZero,
    MixedFields,
    NotInvertible,
    // linear algebra and feasibility
    DimensionMismatch,
    VariableBudgetExceeded,
    // polytopes and fans
    UnboundedPolytope,
    DegenerateDimension,
    FacetBudgetExceeded,
    DimensionTooHigh,
    NotFullDimensional,
    RedundantFacet,
    ZeroRay,
    RepeatedRay,
    InvalidFan,
    // quasilattices and triples
    NotSpanning,
    NormalNotInQuasilattice,
    NormalWrongDirection,
    CountMismatch,
    SingularVertexFrame,
    NotSimple,
    // configurations
    FanNotComplete,
    FanNotSimplicial,
    NotBalanced,
    NotOdd,
    InvalidConfiguration,
    // documents
    ParseError,
    FieldMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NoRootInInterval: return "NoRootInInterval";
    case ErrorKind::MultipleRootsInInterval: return "MultipleRootsInInterval";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::VariableBudgetExceeded: return "VariableBudgetExceeded";
    case ErrorKind::UnboundedPolytope: return "UnboundedPolytope";
    case ErrorKind::DegenerateDimension: return "DegenerateDimension";
    case ErrorKind::FacetBudgetExceeded: return "FacetBudgetExceeded";
    case ErrorKind::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::RedundantFacet: return "RedundantFacet";
    case ErrorKind::ZeroRay: return "ZeroRay";
    case ErrorKind::RepeatedRay: return "RepeatedRay";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::NotSpanning: return "NotSpanning";
    case ErrorKind::NormalNotInQuasilattice: return "NormalNotInQuasilattice";
    case ErrorKind::NormalWrongDirection: return "NormalWrongDirection";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::SingularVertexFrame: return "SingularVertexFrame";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::FanNotComplete: return "FanNotComplete";
    case ErrorKind::FanNotSimplicial: return "FanNotSimplicial";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags so
/// that callers (and the command line front end) can dispatch on the class.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail)
        , kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& detail)
{
    throw Error(kind, detail);
}

} // namespace quasitoric
