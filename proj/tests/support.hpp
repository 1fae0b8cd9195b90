#pragma once

#include "zetasum/extended_real.hpp"

#include <string>

namespace testing {

inline zetasum::ExtendedReal dec(const std::string& s, int digits = zetasum::ExtendedReal::kDefaultDigits) {
  return zetasum::ExtendedReal::parse(s, digits);
}

inline bool near(const zetasum::ExtendedReal& a, const zetasum::ExtendedReal& b, double tol) {
  return zetasum::abs(a - b) <= zetasum::ExtendedReal(tol, a.digits());
}

inline bool near(const zetasum::ExtendedReal& a, const zetasum::ExtendedReal& b,
                 const zetasum::ExtendedReal& tol) {
  return zetasum::abs(a - b) <= tol;
}

}  // namespace testing
