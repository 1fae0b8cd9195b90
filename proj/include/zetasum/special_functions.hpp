#pragma once

#include "zetasum/exact_rational.hpp"
#include "zetasum/extended_real.hpp"

namespace zetasum {

/// Largest k for which bernoulli_even(k) = B_{2k} is tabulated.
inline constexpr int kMaxBernoulliIndex = 700;

/// B_{2k} for 0 <= k <= kMaxBernoulliIndex (B_0 = 1, B_2 = 1/6, B_4 = -1/30, ...).
const ExactRational& bernoulli_even(int k);

/// ln Gamma(x) for x > 0, accurate to the precision of x.
///
/// Shifts the argument up to y = x + k >= 10 + P/2 (P = working digits) and
/// sums the Stirling series at y until the next term falls below 10^-P, then
/// removes the shift with ln prod (x + j).
ExtendedReal ln_gamma(const ExtendedReal& x);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0; same shift-and-expand strategy.
ExtendedReal digamma(const ExtendedReal& x);

}  // namespace zetasum
