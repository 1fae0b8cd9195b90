#pragma once

#include "zetasum/extended_real.hpp"

#include <algorithm>
#include <utility>

namespace zetasum {

/// Complex number over ExtendedReal. Only the handful of operations the zero
/// sums and the theta function need.
struct Complex {
  ExtendedReal re;
  ExtendedReal im;

  explicit Complex(int digits = ExtendedReal::kDefaultDigits) : re(digits), im(digits) {}
  Complex(ExtendedReal real, ExtendedReal imag) : re(std::move(real)), im(std::move(imag)) {}

  int digits() const { return std::min(re.digits(), im.digits()); }

  Complex conj() const { return {re, -im}; }
  /// |z|^2
  ExtendedReal norm() const { return re * re + im * im; }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const ExtendedReal& b) {
    a.re *= b;
    a.im *= b;
    return a;
  }
  Complex operator-() const { return {-re, -im}; }
};

ExtendedReal abs(const Complex& z);
/// Principal argument in (-pi, pi].
ExtendedReal arg(const Complex& z);
/// Principal logarithm.
Complex log(const Complex& z);
Complex exp(const Complex& z);
/// z^n by binary powering.
Complex pow(const Complex& z, unsigned long n);

}  // namespace zetasum
