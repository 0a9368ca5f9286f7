#pragma once

#include <stdexcept>
#include <string>

namespace treecol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input / construction errors.
struct ParseError : Error {
    using Error::Error;
};
struct NotATree : Error {
    using Error::Error;
};
struct BadVertexId : Error {
    using Error::Error;
};
struct InvalidParameter : Error {
    using Error::Error;
};
struct NotALeaf : Error {
    using Error::Error;
};

// Resource limits.
struct LimitExceeded : Error {
    using Error::Error;
};
struct OracleTooLarge : Error {
    using Error::Error;
};

// Coloring / labeling contract violations.
struct ImproperColoring : Error {
    using Error::Error;
};
struct InvalidLabeling : Error {
    using Error::Error;
};
struct IncompatibleLabeling : Error {
    using Error::Error;
};
struct SizeMismatch : Error {
    using Error::Error;
};

// Extremal-construction hypotheses.
struct HypothesisFailed : Error {
    using Error::Error;
};
struct NoValidAssignment : Error {
    using Error::Error;
};

} // namespace treecol
