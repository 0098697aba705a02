#pragma once

#include <stdexcept>
#include <string>

namespace hyperpath {

/// Base class of every domain error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// construction
struct InvalidVertexId : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct UnknownArcId : Error { using Error::Error; };
struct EmptySide : Error { using Error::Error; };
struct DisjointnessViolation : Error { using Error::Error; };
struct EmptyEdge : Error { using Error::Error; };

// algorithm preconditions
struct EmptySourceSet : Error { using Error::Error; };
struct NotBHypergraph : Error { using Error::Error; };
struct HeadInSources : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

// reductions
struct MalformedCnf : Error { using Error::Error; };
struct SeedPath : Error { using Error::Error; };
struct NotInducedPath : Error { using Error::Error; };
struct SeedSeparator : Error { using Error::Error; };
struct NotSeparator : Error { using Error::Error; };
struct MissingFinalArc : Error { using Error::Error; };
struct ForeignArc : Error { using Error::Error; };

// text formats
struct SyntaxError : Error {
    SyntaxError(int line, int column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line(line),
          column(column) {}
    int line;
    int column;
};
struct NotThreeCnf : Error { using Error::Error; };
struct HeaderMismatch : Error { using Error::Error; };

}  // namespace hyperpath
