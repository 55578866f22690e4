#pragma once

#include <stdexcept>
#include <string>

namespace gainchrom {

/// Base for every precondition failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonNeutralEdgeInSet : public Error {
 public:
  using Error::Error;
};

class UnbalancedSet : public Error {
 public:
  using Error::Error;
};

/// The subset expansion would exceed the configured edge bound.
class TooManyEdges : public Error {
 public:
  TooManyEdges(std::size_t edges, std::size_t bound)
      : Error("subset expansion over " + std::to_string(edges) + " edges exceeds the bound of " +
              std::to_string(bound)),
        edges_(edges),
        bound_(bound) {}
  std::size_t edges() const { return edges_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t edges_;
  std::size_t bound_;
};

class InvalidSequence : public Error {
 public:
  using Error::Error;
};

class NeutralEdgePresent : public Error {
 public:
  using Error::Error;
};

/// A rational computation that must clear to integers did not.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

}  // namespace gainchrom
