#ifndef LANDAU_ERRORS_HPP
#define LANDAU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace landau {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A series or iteration failed to reach its tolerance within the term cap.
class NonConvergence : public Error {
public:
  NonConvergence(const std::string& msg, double achieved)
      : Error(msg), achieved_residual(achieved) {}
  double achieved_residual;
};

/// An argument violates a documented precondition.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Boundary-coefficient denominator vanished (trial state undefined there).
class DegenerateDenominator : public Error {
public:
  using Error::Error;
};

/// A Gram matrix failed its Cholesky factorization.
class NotPositiveDefinite : public Error {
public:
  NotPositiveDefinite(const std::string& msg, int minor_index)
      : Error(msg), minor(minor_index) {}
  int minor;  ///< index (0-based) of the offending leading minor
};

/// A spectral-gap precondition for a lower-bound formula failed.
class PreconditionViolated : public Error {
public:
  using Error::Error;
};

/// An element integral came out non-finite during assembly.
class QuadratureBreakdown : public Error {
public:
  using Error::Error;
};

/// Eigenvalue iteration hit its cap, or a near-degenerate pair was detected.
class ConvergenceFailure : public Error {
public:
  ConvergenceFailure(const std::string& msg, double achieved)
      : Error(msg), achieved_residual(achieved) {}
  double achieved_residual;
};

/// A determinant scan window did not contain exactly one sign change.
class RootNotIsolated : public Error {
public:
  RootNotIsolated(const std::string& msg, std::string profile)
      : Error(msg), scan_profile(std::move(profile)) {}
  std::string scan_profile;  ///< human-readable scan diagnostics
};

}  // namespace landau

#endif
