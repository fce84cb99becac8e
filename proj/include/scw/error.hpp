#pragma once

#include <stdexcept>
#include <string>

namespace scw {

enum class Err {
    Malformed,
    NonSphere,
    InconsistentOrientation,
    DuplicateEdgePair,
    NotSimplePolytope,
    InvalidArgument,
    InvalidLocus,
    ConventionViolation,
    InvalidColoring,
    ColorMismatch,
    MergedFacetDoubleEdge,
    InvalidNewColor,
    NotExcisable,
    EndsAdjacent,
    SideTooSmall,
    NoColorMatchingExists,
    InvalidTarget,
    StrictModeViolation,
    PlanInvalid,
    WouldDegenerateBlock,
    NotThreeIndependent,
    SearchExhausted,
    NoCutFound,
    Stuck,
    IterationCapExceeded,
    InvalidAttachment,
    NotABlock,
    InvalidSection,
    ParseError,
};

inline const char* err_name(Err e)
{
    switch (e) {
    case Err::Malformed: return "Malformed";
    case Err::NonSphere: return "NonSphere";
    case Err::InconsistentOrientation: return "InconsistentOrientation";
    case Err::DuplicateEdgePair: return "DuplicateEdgePair";
    case Err::NotSimplePolytope: return "NotSimplePolytope";
    case Err::InvalidArgument: return "InvalidArgument";
    case Err::InvalidLocus: return "InvalidLocus";
    case Err::ConventionViolation: return "ConventionViolation";
    case Err::InvalidColoring: return "InvalidColoring";
    case Err::ColorMismatch: return "ColorMismatch";
    case Err::MergedFacetDoubleEdge: return "MergedFacetDoubleEdge";
    case Err::InvalidNewColor: return "InvalidNewColor";
    case Err::NotExcisable: return "NotExcisable";
    case Err::EndsAdjacent: return "EndsAdjacent";
    case Err::SideTooSmall: return "SideTooSmall";
    case Err::NoColorMatchingExists: return "NoColorMatchingExists";
    case Err::InvalidTarget: return "InvalidTarget";
    case Err::StrictModeViolation: return "StrictModeViolation";
    case Err::PlanInvalid: return "PlanInvalid";
    case Err::WouldDegenerateBlock: return "WouldDegenerateBlock";
    case Err::NotThreeIndependent: return "NotThreeIndependent";
    case Err::SearchExhausted: return "SearchExhausted";
    case Err::NoCutFound: return "NoCutFound";
    case Err::Stuck: return "Stuck";
    case Err::IterationCapExceeded: return "IterationCapExceeded";
    case Err::InvalidAttachment: return "InvalidAttachment";
    case Err::NotABlock: return "NotABlock";
    case Err::InvalidSection: return "InvalidSection";
    case Err::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code)
    {
    }
    Err code() const noexcept { return code_; }
    const char* name() const noexcept { return err_name(code_); }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what = {})
{
    throw Error(code, what);
}

} // namespace scw
