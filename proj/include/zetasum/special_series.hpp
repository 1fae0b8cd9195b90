#pragma once

#include "zetasum/extended_real.hpp"
#include "zetasum/series_result.hpp"

#include <cstdint>

namespace zetasum::special {

struct StieltjesRequest {
  int m = 0;
  std::int64_t n_terms = 10'000;
  /// Highest Bernoulli index used in the Euler-Maclaurin correction.
  int correction_order = 4;
};

inline constexpr int kMaxStieltjesIndex = 8;

/// sum_{n=1}^{N} ln^m(n)/n - ln^{m+1}(N+1)/(m+1): the truncated defining
/// series of gamma_m with the integrals telescoped, no correction.
ExtendedReal stieltjes_partial_sum(int m, std::int64_t N, int digits = ExtendedReal::kDefaultDigits);

/// Stieltjes constant gamma_m: the truncated series plus the Euler-Maclaurin
/// remainder at N + 1. The tail bound is twice the first omitted correction term.
/// Throws DomainError for m outside [0, 8], n_terms < 10 or an order outside
/// {2, 4, 6, 8}.
SeriesResult stieltjes(const StieltjesRequest& request, int digits = ExtendedReal::kDefaultDigits);

/// The positive integrand (1 - {q}^2) / (2 q^2 (q+1)^2) on q >= 1.
ExtendedReal p01_integrand(const ExtendedReal& q);

/// Integral of p01_integrand over [n, n+1] in closed form.
ExtendedReal p01_term(std::int64_t n, int digits = ExtendedReal::kDefaultDigits);

/// Integral over [1, N+1]; tail bound 1/(6 (N+1)^3).
SeriesResult p01_integral(std::int64_t N, int digits = ExtendedReal::kDefaultDigits);

/// psi(n) - int_{n-1/2}^{n+1/2} psi(q) dq, computed as
/// psi(n) - (ln_gamma(n + 1/2) - ln_gamma(n - 1/2)).
ExtendedReal p12_term(std::int64_t n, int digits = ExtendedReal::kDefaultDigits);

/// Sum of p12_term for n = 1..N. Without acceleration the tail bound is the
/// certified (1/(N-1/2) + 1/(N-1/2)^2)/24. With acceleration the tail is
/// estimated from the asymptotic expansion of the term and the bound is the
/// first omitted asymptotic contribution.
SeriesResult p12_series(std::int64_t N, bool accelerate = true,
                        int digits = ExtendedReal::kDefaultDigits);

/// sum_{n>N} n^-p for p >= 2, by Euler-Maclaurin at N.
ExtendedReal power_sum_tail(int p, std::int64_t N, int digits);

}  // namespace zetasum::special
