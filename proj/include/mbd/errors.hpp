#pragma once

#include <stdexcept>
#include <string>

namespace mbd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidVertexError : Error {
    using Error::Error;
};

struct InvalidEdgeError : Error {
    using Error::Error;
};

struct InvalidParameterError : Error {
    using Error::Error;
};

struct SizeLimitError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NotATreeError : Error {
    using Error::Error;
};

// Search aborted: the value is unknown, which is distinct from infinity.
struct NodeLimitError : Error {
    using Error::Error;
};

struct NoLegalMoveError : Error {
    using Error::Error;
};

}  // namespace mbd
