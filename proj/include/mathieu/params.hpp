#pragma once

#include <cmath>
#include <sstream>

#include "mathieu/errors.hpp"

namespace mathieu {

/// The parameter pair (mu, r) shared by both series families. Both must be
/// strictly positive and finite; construction enforces it.
class ParamSet {
 public:
  ParamSet(double mu, double r) : mu_(mu), r_(r) {
    if (!(std::isfinite(mu) && mu > 0.0)) {
      std::ostringstream os;
      os << "parameter mu must be finite and > 0 (got " << mu << ")";
      throw DomainError(os.str());
    }
    if (!(std::isfinite(r) && r > 0.0)) {
      std::ostringstream os;
      os << "parameter r must be finite and > 0 (got " << r << ")";
      throw DomainError(os.str());
    }
  }

  double mu() const noexcept { return mu_; }
  double r() const noexcept { return r_; }

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

 private:
  double mu_;
  double r_;
};

}  // namespace mathieu
