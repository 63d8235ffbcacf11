#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibext {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: dimension mismatch, out-of-range n, invariant violations.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Degenerate adapted transform (A0 * B1 * (A0 + A1 b) vanishes).
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// A structure tensor is not the table of an adapted CE(mu_n) element.
class ShapeError : public Error {
 public:
  ShapeError(const std::string& what, std::vector<std::array<int, 3>> entries)
      : Error(what), entries_(std::move(entries)) {}
  const std::vector<std::array<int, 3>>& entries() const { return entries_; }

 private:
  std::vector<std::array<int, 3>> entries_;
};

class CanonicalizationError : public Error {
 public:
  using Error::Error;
};

/// A formula was evaluated where it is not defined (vanishing denominator).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace leibext
