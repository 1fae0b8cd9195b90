#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace zetasum {

/// Exact ratio of arbitrary-size integers, always kept in lowest terms with a
/// positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// numerator / denominator, canonicalized. Throws std::domain_error on a
  /// zero denominator.
  ExactRational(long numerator, unsigned long denominator);
  ExactRational(const mpz_class& numerator, const mpz_class& denominator);
  explicit ExactRational(mpq_class value);

  const mpq_class& get() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  ExactRational operator-() const { return ExactRational(mpq_class(-value_)); }
  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

}  // namespace zetasum
