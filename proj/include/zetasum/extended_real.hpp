#pragma once

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zetasum {

class ExactRational;

/// Arbitrary-precision real backed by an MPFR value.
///
/// The precision is carried as a count of decimal digits. Binary operations
/// produce a result at the smaller of the two operand precisions, so a value
/// computed once at low precision cannot silently masquerade as an accurate
/// one further down a pipeline. Every operation is correctly rounded at the
/// result precision.
class ExtendedReal {
 public:
  static constexpr int kMinDigits = 15;
  static constexpr int kMaxDigits = 2000;
  static constexpr int kDefaultDigits = 50;

  /// Zero at the given precision.
  explicit ExtendedReal(int digits = kDefaultDigits);
  ExtendedReal(long value, int digits);
  ExtendedReal(int value, int digits) : ExtendedReal(static_cast<long>(value), digits) {}
  ExtendedReal(unsigned long value, int digits);
  /// Exact conversion of a binary double, then rounded to `digits`.
  ExtendedReal(double value, int digits);
  ExtendedReal(const ExactRational& value, int digits);

  /// Parses a decimal literal ("14.134725", "-1e-5"). Throws
  /// std::invalid_argument when the whole string is not a number.
  static ExtendedReal parse(std::string_view text, int digits);

  ExtendedReal(const ExtendedReal& other);
  ExtendedReal(ExtendedReal&& other) noexcept;
  ExtendedReal& operator=(const ExtendedReal& other);
  ExtendedReal& operator=(ExtendedReal&& other) noexcept;
  ~ExtendedReal();

  int digits() const noexcept { return digits_; }
  /// Same value rounded (or widened) to another precision.
  ExtendedReal with_digits(int digits) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  double to_double() const;
  /// Decimal rendering with `significant` digits (defaults to the carried
  /// precision). Fixed notation for moderate magnitudes, scientific otherwise.
  std::string to_string(int significant = 0) const;
  /// Fixed notation with exactly `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }

  ExtendedReal operator-() const;
  ExtendedReal& operator+=(const ExtendedReal& rhs);
  ExtendedReal& operator-=(const ExtendedReal& rhs);
  ExtendedReal& operator*=(const ExtendedReal& rhs);
  ExtendedReal& operator/=(const ExtendedReal& rhs);
  ExtendedReal& operator+=(long rhs);
  ExtendedReal& operator-=(long rhs);
  ExtendedReal& operator*=(long rhs);
  ExtendedReal& operator/=(long rhs);

  friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b);
  friend ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b);
  friend ExtendedReal operator*(const ExtendedReal& a, const ExtendedReal& b);
  friend ExtendedReal operator/(const ExtendedReal& a, const ExtendedReal& b);
  friend ExtendedReal operator+(ExtendedReal a, long b) { return a += b; }
  friend ExtendedReal operator-(ExtendedReal a, long b) { return a -= b; }
  friend ExtendedReal operator*(ExtendedReal a, long b) { return a *= b; }
  friend ExtendedReal operator/(ExtendedReal a, long b) { return a /= b; }
  friend ExtendedReal operator+(long a, ExtendedReal b) { return b += a; }
  friend ExtendedReal operator-(long a, const ExtendedReal& b);
  friend ExtendedReal operator*(long a, ExtendedReal b) { return b *= a; }
  friend ExtendedReal operator/(long a, const ExtendedReal& b);

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b);
  friend bool operator==(const ExtendedReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const ExtendedReal& a, long b);

 private:
  void init(int digits);

  mpfr_t value_;
  int digits_;
};

/// Number of MPFR bits used for a decimal precision.
mpfr_prec_t digits_to_bits(int digits);

ExtendedReal abs(const ExtendedReal& x);
ExtendedReal sqrt(const ExtendedReal& x);
ExtendedReal log(const ExtendedReal& x);
ExtendedReal log2(const ExtendedReal& x);
ExtendedReal exp(const ExtendedReal& x);
ExtendedReal sin(const ExtendedReal& x);
ExtendedReal cos(const ExtendedReal& x);
ExtendedReal atan2(const ExtendedReal& y, const ExtendedReal& x);
ExtendedReal pow(const ExtendedReal& x, unsigned long n);
ExtendedReal floor(const ExtendedReal& x);
/// x * 2^e, exact.
ExtendedReal ldexp(const ExtendedReal& x, long e);
ExtendedReal min(const ExtendedReal& a, const ExtendedReal& b);
ExtendedReal max(const ExtendedReal& a, const ExtendedReal& b);

/// 10^e at the given precision.
ExtendedReal power_of_ten(long e, int digits);

ExtendedReal pi(int digits);
ExtendedReal euler_gamma(int digits);
ExtendedReal ln2(int digits);

std::ostream& operator<<(std::ostream& os, const ExtendedReal& x);

}  // namespace zetasum
