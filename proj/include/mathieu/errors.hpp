#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace mathieu {

/// Argument outside the domain of an operation (|z| >= 1, r <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A theorem-hypothesis precondition was violated (e.g. mu below the
/// minimum a threshold formula is stated for).
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid configuration: empty grids, too few samples, bad N.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficient sequence is not normalized (a_1 != 1).
class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quadrature or other numerical procedure did not converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Series evaluation hit the term cap before reaching the requested
/// tolerance. Carries the partial result.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, std::complex<double> partial,
                  std::size_t terms, double last_estimate)
      : std::runtime_error(what),
        partial_(partial),
        terms_(terms),
        last_estimate_(last_estimate) {}

  std::complex<double> partial() const noexcept { return partial_; }
  std::size_t terms() const noexcept { return terms_; }
  double last_estimate() const noexcept { return last_estimate_; }

 private:
  std::complex<double> partial_;
  std::size_t terms_;
  double last_estimate_;
};

/// A function value vanished (|f(z)| < 1e-14) where a quotient by f is needed.
class DegeneratePointError : public std::runtime_error {
 public:
  DegeneratePointError(const std::string& what, std::complex<double> where)
      : std::runtime_error(what), where_(where) {}
  std::complex<double> where() const noexcept { return where_; }

 private:
  std::complex<double> where_;
};

/// A sufficient condition failed at its own threshold. Signals a bug or a
/// tolerance problem rather than a property of the function.
class CoherenceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mathieu
