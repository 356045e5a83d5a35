#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace conegeom {

/// Base class for all engine errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Expression text could not be parsed. `offset` is the byte position in the
/// source string where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation hit a point outside a partial function's domain (log of a
/// non-positive value, division by zero, ...). The message names the
/// offending subexpression.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be inverted is singular or ill-conditioned.
class SingularError : public Error {
 public:
  SingularError(const std::string& msg, double smallest_eigenvalue)
      : Error(msg + " (smallest eigenvalue " +
              std::to_string(smallest_eigenvalue) + ")"),
        smallest_eigenvalue_(smallest_eigenvalue) {}

  double smallest_eigenvalue() const { return smallest_eigenvalue_; }

 private:
  double smallest_eigenvalue_;
};

/// A structural precondition failed at a concrete point (positivity of an
/// assembled metric, contact condition, stencil leaving the domain, ...).
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& msg, std::vector<double> point)
      : Error(msg), point_(std::move(point)) {}

  explicit PreconditionError(const std::string& msg) : Error(msg) {}

  const std::vector<double>& point() const { return point_; }

 private:
  std::vector<double> point_;
};

/// A manifold declaration failed schema or consistency validation.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Wraps an error raised while running a named check, so callers can
/// attribute the failure.
class CheckError : public Error {
 public:
  CheckError(const std::string& check, const std::string& cause)
      : Error("check '" + check + "': " + cause), check_(check) {}

  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

}  // namespace conegeom
