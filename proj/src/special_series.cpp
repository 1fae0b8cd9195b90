#include "zetasum/special_series.hpp"

#include "zetasum/errors.hpp"
#include "zetasum/special_functions.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace zetasum::special {

namespace {

int guard_digits(std::int64_t n, int per_decade) {
  return 10 + per_decade * static_cast<int>(std::ceil(std::log10(static_cast<double>(n) + 1.0)));
}

ExtendedReal factorial(int n, int digits) {
  ExtendedReal r(1L, digits);
  for (int k = 2; k <= n; ++k) r *= static_cast<long>(k);
  return r;
}

// d^j/dt^j [ln^m(t)/t] = t^(-1-j) * sum_i c[i] ln^i(t). Advances c from j to j+1.
void differentiate(std::vector<long>& c, int j) {
  const long p = 1 + j;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = -p * c[i] + (i + 1 < c.size() ? static_cast<long>(i + 1) * c[i + 1] : 0L);
  }
}

ExtendedReal eval_derivative(const std::vector<long>& c, int j, const ExtendedReal& a,
                             const ExtendedReal& ln_a) {
  ExtendedReal poly(a.digits());
  for (std::size_t i = c.size(); i-- > 0;) poly = poly * ln_a + c[i];
  return poly / pow(a, static_cast<unsigned long>(1 + j));
}

}  // namespace

ExtendedReal stieltjes_partial_sum(int m, std::int64_t N, int digits) {
  if (m < 0 || m > kMaxStieltjesIndex) {
    throw DomainError("Stieltjes index m must be in [0, " + std::to_string(kMaxStieltjesIndex) + "]");
  }
  if (N < 1) throw DomainError("Stieltjes partial sum needs N >= 1");
  const int w = digits + guard_digits(N, 1) + 2 * m;
  ExtendedReal sum(w);
  for (std::int64_t n = 2; n <= N; ++n) {
    ExtendedReal nn(static_cast<long>(n), w);
    sum += pow(log(nn), static_cast<unsigned long>(m)) / nn;
  }
  if (m == 0) sum += 1L;  // n = 1 contributes ln^0(1)/1 = 1
  ExtendedReal top = pow(log(ExtendedReal(static_cast<long>(N + 1), w)), static_cast<unsigned long>(m + 1));
  sum -= top / static_cast<long>(m + 1);
  return sum.with_digits(digits);
}

SeriesResult stieltjes(const StieltjesRequest& req, int digits) {
  if (req.m < 0 || req.m > kMaxStieltjesIndex) {
    throw DomainError("Stieltjes index m must be in [0, " + std::to_string(kMaxStieltjesIndex) +
                      "]; larger m loses too much to cancellation");
  }
  if (req.n_terms < 10) throw DomainError("Stieltjes n_terms must be >= 10");
  if (req.correction_order < 2 || req.correction_order > 8 || req.correction_order % 2 != 0) {
    throw DomainError("Stieltjes correction_order must be one of 2, 4, 6, 8");
  }
  const int w = digits + guard_digits(req.n_terms, 1) + 2 * req.m;
  const ExtendedReal raw = stieltjes_partial_sum(req.m, req.n_terms, w);

  // gamma_m - S_N = lim_M [sum_{n=a}^{M} f(n) - int_a^M f], a = N + 1, which
  // Euler-Maclaurin turns into f(a)/2 - sum_k B_2k/(2k)! f^(2k-1)(a).
  const ExtendedReal a(static_cast<long>(req.n_terms + 1), w);
  const ExtendedReal ln_a = log(a);
  std::vector<long> c(static_cast<std::size_t>(req.m + 1), 0L);
  c[static_cast<std::size_t>(req.m)] = 1;
  ExtendedReal correction = eval_derivative(c, 0, a, ln_a) / 2;
  const int K = req.correction_order / 2;
  ExtendedReal omitted(w);
  for (int k = 1, j = 0; k <= K + 1; ++k) {
    while (j < 2 * k - 1) differentiate(c, j++);
    ExtendedReal t = ExtendedReal(bernoulli_even(k), w) * eval_derivative(c, j, a, ln_a) / factorial(2 * k, w);
    if (k <= K) {
      correction -= t;
    } else {
      // The first omitted term only bounds the remainder once the derivatives
      // of ln^m(x)/x settle into a fixed sign pattern, which for small a and
      // large m they have not. Doubling covers every m <= 8 from N = 10.
      omitted = ldexp(abs(t), 1);
    }
  }

  SeriesResult r;
  r.series_id = "stieltjes_" + std::to_string(req.m);
  ExtendedReal value = raw + correction;
  r.value = value.with_digits(digits);
  r.terms_used = req.n_terms;
  ExtendedReal slack = (abs(value) + 1L) * power_of_ten(-digits + 1, w);
  r.tail_bound = (omitted + slack).with_digits(digits);
  return r;
}

ExtendedReal p01_integrand(const ExtendedReal& q) {
  if (q < 1L) throw DomainError("p01 integrand is defined for q >= 1");
  ExtendedReal x = q - floor(q);
  ExtendedReal qq = q * (q + 1L);
  return (1L - x * x) / (2L * qq * qq);
}

// With {q} = q - n on [n, n+1], the numerator is g(q) = -q^2 + 2nq + 1 - n^2
// and g(q) / (q^2 (q+1)^2) = A/q + B/q^2 - A/(q+1) + D/(q+1)^2 with
// A = 2n^2 + 2n - 2, B = g(0) = 1 - n^2, D = g(-1) = -n(n+2). Integrating
// over [n, n+1] and halving:
//   (A ln((n+1)^2 / (n(n+2))) + B/(n(n+1)) + D/((n+1)(n+2))) / 2.
// The log is log1p(1/(n(n+2))); the remaining cancellation is ~n^4, covered
// by guard digits.
ExtendedReal p01_term(std::int64_t n, int digits) {
  if (n < 1) throw DomainError("p01_term requires n >= 1");
  const int w = digits + guard_digits(n, 4);
  const ExtendedReal nn(static_cast<long>(n), w);
  const ExtendedReal A = 2L * nn * nn + 2L * nn - 2L;
  const ExtendedReal B = 1L - nn * nn;
  const ExtendedReal D = -(nn * (nn + 2L));
  ExtendedReal ratio = 1L / (nn * (nn + 2L));
  ExtendedReal log_part(w);
  mpfr_log1p(log_part.get(), ratio.get(), MPFR_RNDN);
  ExtendedReal value = A * log_part + B / (nn * (nn + 1L)) + D / ((nn + 1L) * (nn + 2L));
  return ldexp(value, -1).with_digits(digits);
}

SeriesResult p01_integral(std::int64_t N, int digits) {
  if (N < 1) throw DomainError("p01_integral requires N >= 1");
  const int w = digits + 10;
  ExtendedReal sum(w);
  for (std::int64_t n = 1; n <= N; ++n) sum += p01_term(n, w);
  SeriesResult r;
  r.series_id = "p01_integral";
  r.value = sum.with_digits(digits);
  r.terms_used = N;
  r.positive_terms = true;
  // 1 - {q}^2 <= 1 and 2 q^2 (q+1)^2 >= 2 q^4: tail <= int_{N+1}^inf dq/(2q^4).
  ExtendedReal top(static_cast<long>(N + 1), w);
  ExtendedReal bound = 1L / (6L * pow(top, 3));
  bound += (abs(sum) + 1L) * power_of_ten(-digits + 1, w);
  r.tail_bound = bound.with_digits(digits);
  return r;
}

ExtendedReal p12_term(std::int64_t n, int digits) {
  if (n < 1) throw DomainError("p12_term requires n >= 1");
  const int w = digits + guard_digits(n, 3);
  const ExtendedReal nn(static_cast<long>(n), w);
  const ExtendedReal half(0.5, w);
  ExtendedReal value = digamma(nn) - (ln_gamma(nn + half) - ln_gamma(nn - half));
  return value.with_digits(digits);
}

ExtendedReal power_sum_tail(int p, std::int64_t N, int digits) {
  if (p < 2) throw DomainError("power_sum_tail requires p >= 2");
  if (N < 1) throw DomainError("power_sum_tail requires N >= 1");
  const int w = digits + 10;
  const ExtendedReal eps = power_of_ten(-w, w);
  // Sum directly until the Euler-Maclaurin series at M converges quickly.
  const std::int64_t M = std::max<std::int64_t>(N, 2 * p + w);
  ExtendedReal sum(w);
  for (std::int64_t n = N + 1; n <= M; ++n) {
    sum += 1L / pow(ExtendedReal(static_cast<long>(n), w), static_cast<unsigned long>(p));
  }
  // sum_{n>M} n^-p = M^(1-p)/(p-1) - M^-p/2 + sum_k B_2k/(2k)! (p)_{2k-1} M^(-p-2k+1)
  const ExtendedReal m(static_cast<long>(M), w);
  const ExtendedReal m_pow = pow(m, static_cast<unsigned long>(p));
  sum += m / (m_pow * static_cast<long>(p - 1)) - 1L / (2L * m_pow);
  ExtendedReal rising(static_cast<long>(p), w);  // (p)_{2k-1}
  ExtendedReal power = 1L / (m_pow * m);         // M^(-p-2k+1)
  ExtendedReal fact(2L, w);                      // (2k)!
  const ExtendedReal inv_m2 = 1L / (m * m);
  for (int k = 1; k <= kMaxBernoulliIndex; ++k) {
    ExtendedReal t = ExtendedReal(bernoulli_even(k), w) * rising * power / fact;
    sum += t;
    if (abs(t) < eps * abs(sum)) break;
    rising *= static_cast<long>(p + 2 * k - 1);
    rising *= static_cast<long>(p + 2 * k);
    power *= inv_m2;
    fact *= static_cast<long>((2 * k + 1) * (2 * k + 2));
  }
  return sum.with_digits(digits);
}

// For large x, psi(x) - ln(x - 1/2) ~ sum_{p>=2} a_p x^-p with
//   a_p = 1/(p 2^p) - [p even] B_p / p,
// from psi(x) ~ ln x - 1/(2x) - sum B_2k/(2k x^2k) and
// ln(x - 1/2) = ln x - sum_j 1/(j 2^j x^j). (ln_gamma(x+1/2) - ln_gamma(x-1/2)
// is ln(x - 1/2) by the recurrence.) The tail sum_{n>N} term(n) is then
// sum_p a_p power_sum_tail(p, N), truncated where the contributions stop
// shrinking or drop below the working precision.
SeriesResult p12_series(std::int64_t N, bool accelerate, int digits) {
  if (N < 1) throw DomainError("p12_series requires N >= 1");
  const int w = digits + 10;
  ExtendedReal sum(w);
  for (std::int64_t n = 1; n <= N; ++n) sum += p12_term(n, w);

  SeriesResult r;
  r.series_id = accelerate ? "p12_series_accelerated" : "p12_series";
  r.terms_used = N;
  r.positive_terms = !accelerate;
  ExtendedReal bound(w);
  if (!accelerate) {
    // term(n) = -psi''(xi)/24 for some xi in (n - 1/2, n + 1/2) (midpoint rule
    // remainder), and 0 < -psi''(q) = sum_k 2/(q+k)^3 <= 1/q^2 + 2/q^3. The
    // bound is decreasing, so the tail is at most its integral from N - 1/2.
    ExtendedReal h = ExtendedReal(static_cast<long>(N), w) - ExtendedReal(0.5, w);
    bound = (1L / h + 1L / (h * h)) / 24L;
  } else {
    const ExtendedReal eps = power_of_ten(-w, w);
    ExtendedReal tail(w);
    ExtendedReal previous(w);
    bool have_previous = false;
    for (int p = 2; p <= 2 * kMaxBernoulliIndex; ++p) {
      ExactRational a(1L, 1UL);
      {
        mpz_class denom = mpz_class(p) << static_cast<mp_bitcnt_t>(p);
        a = ExactRational(mpz_class(1), denom);
      }
      if (p % 2 == 0) a -= bernoulli_even(p / 2) / ExactRational(static_cast<long>(p));
      if (a.sign() == 0) continue;
      ExtendedReal contribution = ExtendedReal(a, w) * power_sum_tail(p, N, w);
      ExtendedReal size = abs(contribution);
      if (have_previous && size > previous) {
        bound = size;
        break;
      }
      tail += contribution;
      if (size < eps * abs(tail)) {
        bound = size;
        break;
      }
      previous = size;
      have_previous = true;
    }
    sum += tail;
  }
  bound += (abs(sum) + 1L) * power_of_ten(-digits + 1, w);
  r.value = sum.with_digits(digits);
  r.tail_bound = bound.with_digits(digits);
  return r;
}

}  // namespace zetasum::special
