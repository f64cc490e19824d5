#pragma once

#include <stdexcept>
#include <string>

namespace propcon {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (graph6 lines, edge lists, coloring files).
// `position` is a byte offset or a 1-based line number, -1 when not meaningful.
struct ParseError : Error {
  explicit ParseError(const std::string& msg, long pos = -1) : Error(msg), position(pos) {}
  long position;
};

// The caller violated an operation's precondition (bad arguments, partial
// coloring, non-tree input to a tree colorer, ...).
struct ContractError : Error {
  using Error::Error;
};

// Operation is only defined for connected graphs.
struct ConnectivityError : ContractError {
  using ContractError::ContractError;
};

// Input is beyond the size regime an exact algorithm supports.
struct UnsupportedSizeError : Error {
  using Error::Error;
};

// Bound parameters lie outside the formula's feasible range.
struct InfeasibleError : Error {
  using Error::Error;
};

// Graph family parameters are ill-formed.
struct ConstructionError : Error {
  using Error::Error;
};

}  // namespace propcon
