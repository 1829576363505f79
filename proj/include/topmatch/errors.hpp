#pragma once

#include <stdexcept>
#include <string>

namespace topmatch {

/// Malformed or out-of-contract input (bad vertex ids, missing edges,
/// non-bipartite graphs where a bipartition is required, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size budget (vertices, faces, search nodes) was exceeded.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Some independent set contains a vertex without neighbours, so no set of
/// vertices dominates it through open neighbourhoods.
class UndominatableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An adversary callback answered outside the allowed protocol.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A transcript or cache record does not replay against its source.
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace topmatch
