#pragma once

#include <stdexcept>
#include <string>

namespace hhk {

/// Malformed or unreadable field file. The message carries the byte offset
/// of the first offending byte when known.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// A field violates the decay hypothesis an operation requires
/// (|A(x)| <= c(1+|x|)^-gamma with a gamma threshold).
class decay_violation : public std::runtime_error {
 public:
  explicit decay_violation(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative solver exhausted its budget; carries the last relative residual.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double residual)
      : std::runtime_error(what), final_residual(residual) {}
  double final_residual;
};

}  // namespace hhk
