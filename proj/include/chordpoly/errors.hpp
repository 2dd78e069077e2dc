#pragma once

#include <stdexcept>
#include <string>

namespace chordpoly {

/// Malformed textual input (graph files, diagram words).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive oracle was asked for an instance above its size cap.
struct OracleCapError : std::runtime_error {
    explicit OracleCapError(const std::string& what) : std::runtime_error(what) {}
};

/// Input graph (or one of its components) is not distance hereditary.
struct NotDistanceHereditaryError : std::runtime_error {
    explicit NotDistanceHereditaryError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chordpoly
