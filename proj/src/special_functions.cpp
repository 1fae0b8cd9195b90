#include "zetasum/special_functions.hpp"

#include "zetasum/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace zetasum {

namespace {

// Tangent numbers T_1..T_n (1, 2, 16, 272, ...) by the Brent-Harvey
// recurrence; integer-only, so the whole table is exact.
std::vector<ExactRational> build_bernoulli_table(int n) {
  std::vector<mpz_class> t(n + 1);
  t[1] = 1;
  for (int k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
  for (int k = 2; k <= n; ++k) {
    for (int j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  }
  std::vector<ExactRational> b(n + 1);
  b[0] = ExactRational(1L);
  for (int k = 1; k <= n; ++k) {
    // B_2k = (-1)^(k-1) 2k T_k / (2^2k (2^2k - 1))
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    mpz_class num = 2 * k * t[k];
    if (k % 2 == 0) num = -num;
    b[k] = ExactRational(num, four_k * (four_k - 1));
  }
  return b;
}

struct Shifted {
  ExtendedReal y;        // x + k
  ExtendedReal product;  // prod_{j<k} (x + j), or 1
  ExtendedReal reciprocal_sum;  // sum_{j<k} 1/(x + j)
  int work_digits;
};

Shifted shift_up(const ExtendedReal& x, bool want_product) {
  const int w = x.digits() + 10;
  ExtendedReal xw = x.with_digits(w);
  const double threshold = 10.0 + w / 2.0;
  const double xd = x.to_double();
  long k = xd >= threshold ? 0 : static_cast<long>(std::ceil(threshold - xd));
  Shifted s{xw, ExtendedReal(1L, w), ExtendedReal(w), w};
  for (long j = 0; j < k; ++j) {
    if (want_product) {
      s.product *= s.y;
    } else {
      s.reciprocal_sum += 1L / s.y;
    }
    s.y += 1L;
  }
  return s;
}

}  // namespace

const ExactRational& bernoulli_even(int k) {
  static const std::vector<ExactRational> table = build_bernoulli_table(kMaxBernoulliIndex);
  if (k < 0 || k > kMaxBernoulliIndex) {
    throw PrecisionError("Bernoulli index " + std::to_string(k) + " exceeds the table");
  }
  return table[static_cast<std::size_t>(k)];
}

ExtendedReal ln_gamma(const ExtendedReal& x) {
  if (x.sign() <= 0) throw DomainError("ln_gamma requires x > 0");
  Shifted s = shift_up(x, true);
  const int w = s.work_digits;
  const ExtendedReal& y = s.y;
  ExtendedReal half(0.5, w);
  ExtendedReal sum = (y - half) * log(y) - y + log(ldexp(pi(w), 1)) / 2;
  const ExtendedReal eps = power_of_ten(-w, w);
  const ExtendedReal inv_y2 = 1L / (y * y);
  ExtendedReal power = 1L / y;  // y^-(2j-1)
  for (int j = 1;; ++j) {
    ExtendedReal term = ExtendedReal(bernoulli_even(j), w) * power / static_cast<long>(2 * j * (2 * j - 1));
    if (abs(term) < eps) break;
    sum += term;
    power *= inv_y2;
  }
  sum -= log(s.product);
  return sum.with_digits(x.digits());
}

ExtendedReal digamma(const ExtendedReal& x) {
  if (x.sign() <= 0) throw DomainError("digamma requires x > 0");
  Shifted s = shift_up(x, false);
  const int w = s.work_digits;
  const ExtendedReal& y = s.y;
  ExtendedReal sum = log(y) - 1L / ldexp(y, 1);
  const ExtendedReal eps = power_of_ten(-w, w);
  const ExtendedReal inv_y2 = 1L / (y * y);
  ExtendedReal power = inv_y2;  // y^-2j
  for (int j = 1;; ++j) {
    ExtendedReal term = ExtendedReal(bernoulli_even(j), w) * power / static_cast<long>(2 * j);
    if (abs(term) < eps) break;
    sum -= term;
    power *= inv_y2;
  }
  sum -= s.reciprocal_sum;
  return sum.with_digits(x.digits());
}

}  // namespace zetasum
