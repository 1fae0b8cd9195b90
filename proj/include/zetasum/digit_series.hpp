#pragma once

#include "zetasum/exact_rational.hpp"
#include "zetasum/extended_real.hpp"
#include "zetasum/series_result.hpp"

#include <array>
#include <cstdint>
#include <string_view>

namespace zetasum::digits {

/// Zero and one bits in the binary expansion of a positive integer.
struct DigitCounts {
  std::uint32_t n0 = 0;
  std::uint32_t n1 = 0;

  friend bool operator==(const DigitCounts&, const DigitCounts&) = default;
};

/// Throws DomainError for m <= 0.
DigitCounts digit_counts(std::int64_t m);

/// The binary-digit series. Each one is a sum of rational terms, optionally
/// shifted by a rational constant.
enum class Series {
  gamma_vacca_alternating,  ///< sum_{n>=2} (-1)^n (N1+N0)(floor(n/2)) / n        -> gamma
  log4pi_alternating,       ///< sum_{n>=2} (-1)^n (N1-N0)(floor(n/2)) / n        -> ln(4/pi)
  gamma_paired,             ///< sum_{n>=1} (N1+N0)(n) / (2n(2n+1))                -> gamma
  log4pi_paired,            ///< sum_{n>=1} (N1-N0)(n) / (2n(2n+1))                -> ln(4/pi)
  gamma_addison,            ///< 1/2 + sum (N1+N0)(n) / (2n(2n+1)(2n+2))           -> gamma
  log2pi_dual,              ///< -1/2 + sum (N1-N0)(n) / (2n(2n+1)(2n+2))          -> ln(2/pi)
  combined_pochti,          ///< sum 2 N1(n) / (2n(2n+1)(2n+2))                    -> gamma - ln pi + ln 2
  log2_series,              ///< sum 1 / (2n(2n+1)(2n+2))                          -> 3/4 - ln 2
  main_series,              ///< sum_{n>=3} (2 N1(n) + 3) / (2n(2n+1)(2n+2))       -> gamma - ln(4 pi) + 2
  pochtipochti_series,      ///< sum_{n>=1} (2 N1(n) + 3) / (2n(2n+1)(2n+2))       -> gamma - ln pi - 2 ln 2 + 9/4
};

inline constexpr std::array<Series, 10> kAllSeries = {
    Series::gamma_vacca_alternating, Series::log4pi_alternating, Series::gamma_paired,
    Series::log4pi_paired,           Series::gamma_addison,      Series::log2pi_dual,
    Series::combined_pochti,         Series::log2_series,        Series::main_series,
    Series::pochtipochti_series};

std::string_view series_name(Series s);

/// A single summand numerator / (f[0] f[1] f[2]); numerator may be negative.
struct Term {
  std::int64_t numerator;
  std::array<std::uint64_t, 3> factors;

  mpz_class denominator() const;
  ExactRational exact() const { return ExactRational(mpz_class(numerator), denominator()); }
};

/// Index of the first summand (2 for the alternating pair, 3 for
/// main_series, 1 otherwise).
std::int64_t first_index(Series s);
/// Rational constant added to the sum (1/2 for gamma_addison, -1/2 for
/// log2pi_dual, 0 otherwise).
ExactRational offset(Series s);
/// The n-th summand. Requires n >= first_index(s) and n <= kMaxIndex.
Term term(Series s, std::int64_t n);
/// True when every summand is strictly positive.
bool has_positive_terms(Series s);

/// Largest supported term index.
inline constexpr std::int64_t kMaxIndex = 1'000'000'000;

struct SummationOptions {
  int digits = ExtendedReal::kDefaultDigits;
  /// Terms up to this index are accumulated as an ExactRational; the rest in
  /// ExtendedReal. Bounded by kMaxExactTerms.
  std::int64_t exact_terms = 100'000;
  /// Worker threads for the floating part; 0 means hardware concurrency.
  /// The result does not depend on this value.
  unsigned workers = 0;
};

inline constexpr std::int64_t kMaxExactTerms = 1'000'000;

/// Certified bound on |sum_{n>N} term(s, n)| (documented per series in the
/// implementation).
ExtendedReal tail_bound(Series s, std::int64_t N, int digits);

/// Partial sum up to and including index N, plus offset and tail bound.
SeriesResult evaluate(Series s, std::int64_t N, const SummationOptions& options = {});

SeriesResult gamma_vacca_alternating(std::int64_t N, const SummationOptions& options = {});
SeriesResult log4pi_alternating(std::int64_t N, const SummationOptions& options = {});
SeriesResult gamma_paired(std::int64_t N, const SummationOptions& options = {});
SeriesResult log4pi_paired(std::int64_t N, const SummationOptions& options = {});
SeriesResult gamma_addison(std::int64_t N, const SummationOptions& options = {});
SeriesResult log2pi_dual(std::int64_t N, const SummationOptions& options = {});
SeriesResult combined_pochti(std::int64_t N, const SummationOptions& options = {});
SeriesResult log2_series(std::int64_t N, const SummationOptions& options = {});
SeriesResult main_series(std::int64_t N, const SummationOptions& options = {});
SeriesResult pochtipochti_series(std::int64_t N, const SummationOptions& options = {});

}  // namespace zetasum::digits
