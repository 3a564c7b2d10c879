#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subcount {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input file is malformed. `line` is 1-based.
struct ParseError : Error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct SelfLoopError : ParseError {
    SelfLoopError(std::size_t line_, const std::string& msg) : ParseError(line_, msg) {}
};

struct DuplicateEdgeError : ParseError {
    DuplicateEdgeError(std::size_t line_, const std::string& msg) : ParseError(line_, msg) {}
};

struct InvalidOrderingError : Error {
    using Error::Error;
};

struct UnsupportedError : Error {
    using Error::Error;
};

// The counting engine cannot handle the pattern: some acyclic orientation
// leaves more than two vertices outside its largest directed rooted tree,
// or a completion plan needs index keys wider than the hash maps store.
struct EngineInapplicableError : Error {
    std::string pattern_name;
    std::string orientation;  // edge list of the blocking orientation
    std::size_t remainder_size = 0;
    bool has_in_in_wedge = false;

    EngineInapplicableError(std::string pattern, std::string orientation_edges,
                            std::size_t remainder, bool in_in_wedge, const std::string& msg)
        : Error(msg),
          pattern_name(std::move(pattern)),
          orientation(std::move(orientation_edges)),
          remainder_size(remainder),
          has_in_in_wedge(in_in_wedge) {}
};

struct TooLargeError : Error {
    using Error::Error;
};

// A supposedly-impossible internal state; signals a bug, not a bad input.
struct InternalInvariantError : Error {
    using Error::Error;
};

}  // namespace subcount
