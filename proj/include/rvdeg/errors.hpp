#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rvdeg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs that violate a structural precondition (degree mismatch, bad matching, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (group order, lattice size) was exceeded.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Malformed .grp text or manifest.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Unknown catalog name or unsupported constructor parameter.
class UnknownGroupError : public Error {
 public:
  using Error::Error;
};

/// A theoretical guarantee failed to hold. Always a bug (or corrupted input data).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rvdeg
