#include "zetasum/complex.hpp"

#include "zetasum/errors.hpp"

namespace zetasum {

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  ExtendedReal r = re * rhs.re - im * rhs.im;
  im = re * rhs.im + im * rhs.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  ExtendedReal d = rhs.norm();
  if (d.is_zero()) throw DomainError("complex division by zero");
  ExtendedReal r = (re * rhs.re + im * rhs.im) / d;
  im = (im * rhs.re - re * rhs.im) / d;
  re = std::move(r);
  return *this;
}

ExtendedReal abs(const Complex& z) { return sqrt(z.norm()); }

ExtendedReal arg(const Complex& z) { return atan2(z.im, z.re); }

Complex log(const Complex& z) {
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("log of zero");
  return {log(z.norm()) / 2, arg(z)};
}

Complex exp(const Complex& z) {
  ExtendedReal m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex pow(const Complex& z, unsigned long n) {
  Complex result(ExtendedReal(1L, z.digits()), ExtendedReal(z.digits()));
  Complex base = z;
  while (n != 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return result;
}

}  // namespace zetasum
