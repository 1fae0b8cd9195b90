#pragma once

#include "zetasum/complex.hpp"
#include "zetasum/extended_real.hpp"
#include "zetasum/series_result.hpp"
#include "zetasum/zeta_zeros.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zetasum::criteria {

// Every sum over zeros below treats an ordinate g as the zero 1/2 + ig and
// folds in its conjugate. Reports say so in their labels.

/// Completion of a zero sum beyond height T using the smoothed zero density
/// ln(t/2pi)/2pi.
struct TailCorrection {
  ExtendedReal T;
  ExtendedReal correction;
  /// Heuristic: covers fluctuations of the zero count around its smooth part.
  ExtendedReal bound_on_remainder;
};

/// Tail of 2 sum 1/(1/4 + g^2) beyond T: (ln(T/2pi) + 1)/(pi T), remainder 4 ln T / T^2.
TailCorrection zero_sum_tail(const ExtendedReal& T);

/// 2 sum_j 1/(1/4 + g_j^2). Without the correction the value is a lower
/// bound and tail_bound covers correction plus remainder. Throws DomainError
/// on an empty table.
SeriesResult zero_sum_p0(const zeros::ZeroTable& zeros, bool with_tail_correction = true);

inline constexpr int kMaxLiIndex = 1000;

/// 1 - (1 - 1/rho)^n, by repeated squaring up to n = 50 and exp(n log) above.
Complex li_term(int n, const Complex& rho);

/// Li coefficient lambda_n = sum over zeros of 2 Re(1 - (1 - 1/rho)^n).
/// The tail correction n^2 (ln(T/2pi)+1)/(2 pi T) follows from the term
/// behaving like n^2/g^2. Throws DomainError for n < 1 or an empty table,
/// PrecisionError for n > kMaxLiIndex.
SeriesResult li_lambda(int n, const zeros::ZeroTable& zeros, bool with_tail_correction = true);

/// 1/(z(1 - z)). Throws DomainError at z = 0 and z = 1.
Complex g_value(const Complex& z);

/// prod_j g(z_j) * prod_{j<k} (g(z_j) - g(z_k))^2
Complex g_product(std::span<const Complex> z);

inline constexpr int kMaxMultisumOrder = 3;

/// n-fold sum of g_product over ordered tuples of the first K zeros. Uses the
/// symmetry of the summand: diagonal tuples vanish, the rest are counted once
/// per unordered set with weight n!. tail_bound is only finite for n = 1.
SeriesResult gn_multisum(int n, const zeros::ZeroTable& zeros, std::size_t K);

/// Same sum by brute force over all K^n ordered tuples. For tests.
SeriesResult gn_multisum_naive(int n, const zeros::ZeroTable& zeros, std::size_t K);

struct Route {
  std::string label;
  SeriesResult result;
};

struct IdentityReport {
  std::string identity_id;
  Route route_a;
  Route route_b;
  ExtendedReal discrepancy;
  ExtendedReal tolerance;
  bool pass = false;
};

struct VerifyParams {
  int digits = ExtendedReal::kDefaultDigits;
  /// Term count (zeros used, for p0_zeros); the identity's default if unset.
  std::optional<std::int64_t> terms;
  /// Zero table for p0_zeros; computed up to the default height if absent.
  const zeros::ZeroTable* zeros = nullptr;
  bool tail_correction = true;
  unsigned workers = 0;
};

/// Identifiers accepted by verify_identity.
const std::vector<std::string>& identity_catalog();
std::int64_t default_terms(std::string_view identity_id);

/// Computes both routes of the identity and compares them. The tolerance is
/// the sum of the two tail bounds plus rounding slack; for p0_zeros it is at
/// least 1e-4 (5e-4 without the tail correction). Throws
/// std::invalid_argument for an unknown identifier.
IdentityReport verify_identity(std::string_view identity_id, const VerifyParams& params = {});

}  // namespace zetasum::criteria
