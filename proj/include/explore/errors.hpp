#pragma once

#include <stdexcept>
#include <string>

namespace explore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph invariant violated at construction (disconnected, self-loop, ...).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// Operation requires a tree, unicyclic or cactus graph.
class UnsupportedGraphClass : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (graph files, traces, configs, numbers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A strategy asked the engine for something the online model forbids:
/// moving to an unvisited or unreachable vertex, traversing a non-boundary
/// edge, or querying unrevealed structure.
class IllegalMove : public Error {
 public:
  using Error::Error;
};

/// The exact oracle refuses instances above its vertex limit.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace explore
