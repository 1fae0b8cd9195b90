#include "zetasum/extended_real.hpp"

#include "zetasum/exact_rational.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace zetasum {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

int check_digits(int digits) {
  if (digits < ExtendedReal::kMinDigits || digits > ExtendedReal::kMaxDigits) {
    throw std::invalid_argument("precision must be between " +
                                std::to_string(ExtendedReal::kMinDigits) + " and " +
                                std::to_string(ExtendedReal::kMaxDigits) + " digits, got " +
                                std::to_string(digits));
  }
  return digits;
}

int common_digits(const ExtendedReal& a, const ExtendedReal& b) {
  return std::min(a.digits(), b.digits());
}

template <typename Fn>
ExtendedReal unary(const ExtendedReal& x, Fn fn) {
  ExtendedReal r(x.digits());
  fn(r.get(), x.get(), kRound);
  return r;
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 1;
}

void ExtendedReal::init(int digits) {
  digits_ = check_digits(digits);
  mpfr_init2(value_, digits_to_bits(digits_));
}

ExtendedReal::ExtendedReal(int digits) {
  init(digits);
  mpfr_set_zero(value_, 1);
}

ExtendedReal::ExtendedReal(long value, int digits) {
  init(digits);
  mpfr_set_si(value_, value, kRound);
}

ExtendedReal::ExtendedReal(unsigned long value, int digits) {
  init(digits);
  mpfr_set_ui(value_, value, kRound);
}

ExtendedReal::ExtendedReal(double value, int digits) {
  init(digits);
  mpfr_set_d(value_, value, kRound);
}

ExtendedReal::ExtendedReal(const ExactRational& value, int digits) {
  init(digits);
  mpfr_set_q(value_, value.get().get_mpq_t(), kRound);
}

ExtendedReal ExtendedReal::parse(std::string_view text, int digits) {
  std::string s(text);
  auto begin = s.find_first_not_of(" \t\r\n");
  auto end = s.find_last_not_of(" \t\r\n");
  if (begin == std::string::npos) throw std::invalid_argument("empty number");
  s = s.substr(begin, end - begin + 1);
  ExtendedReal r(digits);
  char* stop = nullptr;
  if (mpfr_strtofr(r.value_, s.c_str(), &stop, 10, kRound), stop == s.c_str() || *stop != '\0') {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  if (!r.is_finite()) throw std::invalid_argument("not a finite number: '" + s + "'");
  return r;
}

ExtendedReal::ExtendedReal(const ExtendedReal& other) {
  init(other.digits_);
  mpfr_set(value_, other.value_, kRound);
}

ExtendedReal::ExtendedReal(ExtendedReal&& other) noexcept : digits_(other.digits_) {
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
}

ExtendedReal& ExtendedReal::operator=(const ExtendedReal& other) {
  if (this == &other) return *this;
  if (value_[0]._mpfr_d == nullptr) {
    init(other.digits_);
  } else if (digits_ != other.digits_) {
    digits_ = other.digits_;
    mpfr_set_prec(value_, digits_to_bits(digits_));
  }
  mpfr_set(value_, other.value_, kRound);
  return *this;
}

ExtendedReal& ExtendedReal::operator=(ExtendedReal&& other) noexcept {
  if (this == &other) return *this;
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
  value_[0] = other.value_[0];
  digits_ = other.digits_;
  other.value_[0]._mpfr_d = nullptr;
  return *this;
}

ExtendedReal::~ExtendedReal() {
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
}

ExtendedReal ExtendedReal::with_digits(int digits) const {
  ExtendedReal r(digits);
  mpfr_set(r.value_, value_, kRound);
  return r;
}

double ExtendedReal::to_double() const { return mpfr_get_d(value_, kRound); }

std::string ExtendedReal::to_string(int significant) const {
  if (significant <= 0) significant = digits_;
  if (is_zero()) return "0";
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  char* buffer = nullptr;
  mpfr_exp_t e = mpfr_get_exp(value_);  // |x| in [2^(e-1), 2^e)
  const bool fixed = e > -16 && e < 50;
  if (fixed) {
    // Digits after the point so that `significant` digits are shown.
    ExtendedReal a = zetasum::abs(*this);
    long int_digits = 1 + static_cast<long>(std::floor(std::log10(std::max(a.to_double(), 1e-300))));
    long decimals = std::max<long>(0, significant - int_digits);
    mpfr_asprintf(&buffer, "%.*Rf", static_cast<int>(decimals), value_);
  } else {
    mpfr_asprintf(&buffer, "%.*Re", significant - 1, value_);
  }
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

std::string ExtendedReal::to_fixed(int decimals) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rf", decimals, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

ExtendedReal ExtendedReal::operator-() const { return unary(*this, mpfr_neg); }

ExtendedReal& ExtendedReal::operator+=(const ExtendedReal& rhs) {
  if (rhs.digits_ < digits_) {
    *this = *this + rhs;
  } else {
    mpfr_add(value_, value_, rhs.value_, kRound);
  }
  return *this;
}

ExtendedReal& ExtendedReal::operator-=(const ExtendedReal& rhs) {
  if (rhs.digits_ < digits_) {
    *this = *this - rhs;
  } else {
    mpfr_sub(value_, value_, rhs.value_, kRound);
  }
  return *this;
}

ExtendedReal& ExtendedReal::operator*=(const ExtendedReal& rhs) {
  if (rhs.digits_ < digits_) {
    *this = *this * rhs;
  } else {
    mpfr_mul(value_, value_, rhs.value_, kRound);
  }
  return *this;
}

ExtendedReal& ExtendedReal::operator/=(const ExtendedReal& rhs) {
  if (rhs.digits_ < digits_) {
    *this = *this / rhs;
  } else {
    mpfr_div(value_, value_, rhs.value_, kRound);
  }
  return *this;
}

ExtendedReal& ExtendedReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, kRound);
  return *this;
}

ExtendedReal& ExtendedReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, kRound);
  return *this;
}

ExtendedReal& ExtendedReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRound);
  return *this;
}

ExtendedReal& ExtendedReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRound);
  return *this;
}

ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
  ExtendedReal r(common_digits(a, b));
  mpfr_add(r.value_, a.value_, b.value_, kRound);
  return r;
}

ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) {
  ExtendedReal r(common_digits(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, kRound);
  return r;
}

ExtendedReal operator*(const ExtendedReal& a, const ExtendedReal& b) {
  ExtendedReal r(common_digits(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, kRound);
  return r;
}

ExtendedReal operator/(const ExtendedReal& a, const ExtendedReal& b) {
  ExtendedReal r(common_digits(a, b));
  mpfr_div(r.value_, a.value_, b.value_, kRound);
  return r;
}

ExtendedReal operator-(long a, const ExtendedReal& b) {
  ExtendedReal r(b.digits_);
  mpfr_si_sub(r.value_, a, b.value_, kRound);
  return r;
}

ExtendedReal operator/(long a, const ExtendedReal& b) {
  ExtendedReal r(b.digits_);
  mpfr_si_div(r.value_, a, b.value_, kRound);
  return r;
}

std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const ExtendedReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

ExtendedReal abs(const ExtendedReal& x) { return unary(x, mpfr_abs); }
ExtendedReal sqrt(const ExtendedReal& x) { return unary(x, mpfr_sqrt); }
ExtendedReal log(const ExtendedReal& x) { return unary(x, mpfr_log); }
ExtendedReal log2(const ExtendedReal& x) { return unary(x, mpfr_log2); }
ExtendedReal exp(const ExtendedReal& x) { return unary(x, mpfr_exp); }
ExtendedReal sin(const ExtendedReal& x) { return unary(x, mpfr_sin); }
ExtendedReal cos(const ExtendedReal& x) { return unary(x, mpfr_cos); }

ExtendedReal atan2(const ExtendedReal& y, const ExtendedReal& x) {
  ExtendedReal r(common_digits(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), kRound);
  return r;
}

ExtendedReal pow(const ExtendedReal& x, unsigned long n) {
  ExtendedReal r(x.digits());
  mpfr_pow_ui(r.get(), x.get(), n, kRound);
  return r;
}

ExtendedReal floor(const ExtendedReal& x) {
  ExtendedReal r(x.digits());
  mpfr_floor(r.get(), x.get());
  return r;
}

ExtendedReal ldexp(const ExtendedReal& x, long e) {
  ExtendedReal r(x.digits());
  mpfr_mul_2si(r.get(), x.get(), e, kRound);
  return r;
}

ExtendedReal min(const ExtendedReal& a, const ExtendedReal& b) { return b < a ? b : a; }
ExtendedReal max(const ExtendedReal& a, const ExtendedReal& b) { return a < b ? b : a; }

ExtendedReal power_of_ten(long e, int digits) {
  ExtendedReal r(digits);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), kRound);
  if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), kRound);
  return r;
}

ExtendedReal pi(int digits) {
  ExtendedReal r(digits);
  mpfr_const_pi(r.get(), kRound);
  return r;
}

ExtendedReal euler_gamma(int digits) {
  ExtendedReal r(digits);
  mpfr_const_euler(r.get(), kRound);
  return r;
}

ExtendedReal ln2(int digits) {
  ExtendedReal r(digits);
  mpfr_const_log2(r.get(), kRound);
  return r;
}

std::ostream& operator<<(std::ostream& os, const ExtendedReal& x) { return os << x.to_string(); }

}  // namespace zetasum
