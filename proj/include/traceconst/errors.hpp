#pragma once

#include <stdexcept>
#include <string>

namespace traceconst {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A polygon or boundary chain fails the monotone-turning test.
struct NotConvex : Error {
    explicit NotConvex(const std::string& what) : Error(what) {}
};

/// Shape parameters violate their domain (e.g. nonpositive radius).
struct InvalidParams : Error {
    explicit InvalidParams(const std::string& what) : Error(what) {}
};

/// A boundary parameter sits on a non-smooth junction where no tangent exists.
struct AtVertex : Error {
    explicit AtVertex(const std::string& what) : Error(what) {}
};

/// An arc split or similar scalar argument lies outside its admissible range.
struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

/// Random hull generation collapsed to fewer than three vertices.
struct DegenerateHull : Error {
    explicit DegenerateHull(const std::string& what) : Error(what) {}
};

/// Dimension argument below the supported minimum.
struct InvalidDim : Error {
    explicit InvalidDim(const std::string& what) : Error(what) {}
};

/// Malformed polygon file or shape description.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Guard against combinatorial blowup in exhaustive cut enumeration.
struct ResolutionTooHigh : Error {
    explicit ResolutionTooHigh(const std::string& what) : Error(what) {}
};

/// Ear clipping detected a non-simple input chain.
struct TriangulationFailure : Error {
    explicit TriangulationFailure(const std::string& what) : Error(what) {}
};

/// Filesystem-level failure while writing reports.
struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace traceconst
