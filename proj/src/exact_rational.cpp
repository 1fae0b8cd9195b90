#include "zetasum/exact_rational.hpp"

#include <stdexcept>
#include <utility>

namespace zetasum {

ExactRational::ExactRational(long numerator, unsigned long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational::ExactRational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

std::string ExactRational::to_string() const { return value_.get_str(); }

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

}  // namespace zetasum
