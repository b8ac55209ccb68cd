#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace p2fi {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input to a graph or configuration constructor.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 / LCF text. `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called on an input outside its domain (non-cubic, disconnected, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A structural property that must hold for the reconstruction does not.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A resource guard (group order, vertex count) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace p2fi
