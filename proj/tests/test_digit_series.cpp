#include "support.hpp"

#include "zetasum/digit_series.hpp"
#include "zetasum/errors.hpp"

#include <doctest.h>

#include <bit>
#include <cstdint>

using namespace zetasum;
using namespace zetasum::digits;
using testing::dec;
using testing::near;

namespace {

// Direct transcription of each series definition with GMP rationals and
// std::popcount, sharing no code with the library.
mpq_class oracle(Series s, std::int64_t N) {
  mpq_class sum = 0;
  auto ones = [](std::int64_t m) { return static_cast<long>(std::popcount(static_cast<std::uint64_t>(m))); };
  auto length = [](std::int64_t m) { return static_cast<long>(std::bit_width(static_cast<std::uint64_t>(m))); };
  auto cubic = [](std::int64_t n) -> mpz_class { return mpz_class(2 * n) * (2 * n + 1) * (2 * n + 2); };
  for (std::int64_t n = 1; n <= N; ++n) {
    const long n1 = ones(n), n0 = length(n) - ones(n);
    mpq_class t = 0;
    switch (s) {
      case Series::gamma_vacca_alternating:
      case Series::log4pi_alternating: {
        if (n < 2) continue;
        const std::int64_t h = n / 2;
        const long h1 = ones(h), h0 = length(h) - ones(h);
        const long num = s == Series::gamma_vacca_alternating ? h1 + h0 : h1 - h0;
        t = mpq_class((n % 2 == 0) ? num : -num, n);
        break;
      }
      case Series::gamma_paired: t = mpq_class(n1 + n0, mpz_class(2 * n) * (2 * n + 1)); break;
      case Series::log4pi_paired: t = mpq_class(n1 - n0, mpz_class(2 * n) * (2 * n + 1)); break;
      case Series::gamma_addison: t = mpq_class(n1 + n0, cubic(n)); break;
      case Series::log2pi_dual: t = mpq_class(n1 - n0, cubic(n)); break;
      case Series::combined_pochti: t = mpq_class(2 * n1, cubic(n)); break;
      case Series::log2_series: t = mpq_class(1, cubic(n)); break;
      case Series::main_series:
        if (n < 3) continue;
        t = mpq_class(2 * n1 + 3, cubic(n));
        break;
      case Series::pochtipochti_series: t = mpq_class(2 * n1 + 3, cubic(n)); break;
    }
    t.canonicalize();
    sum += t;
  }
  if (s == Series::gamma_addison) sum += mpq_class(1, 2);
  if (s == Series::log2pi_dual) sum -= mpq_class(1, 2);
  return sum;
}

ExtendedReal limit(Series s, int d) {
  const ExtendedReal g = euler_gamma(d), lp = log(pi(d)), l2 = ln2(d);
  switch (s) {
    case Series::gamma_vacca_alternating:
    case Series::gamma_paired:
    case Series::gamma_addison: return g;
    case Series::log4pi_alternating:
    case Series::log4pi_paired: return 2L * l2 - lp;
    case Series::log2pi_dual: return l2 - lp;
    case Series::combined_pochti: return g - lp + l2;
    case Series::log2_series: return ExtendedReal(0.75, d) - l2;
    case Series::main_series: return g - lp - 2L * l2 + 2L;
    case Series::pochtipochti_series: return g - lp - 2L * l2 + ExtendedReal(2.25, d);
  }
  return ExtendedReal(d);
}

ExactRational q(long a, unsigned long b) { return ExactRational(a, b); }

}  // namespace

TEST_CASE("digit counts") {
  CHECK(digit_counts(1) == DigitCounts{0, 1});
  CHECK(digit_counts(5) == DigitCounts{1, 2});
  CHECK(digit_counts(6) == DigitCounts{1, 2});
  CHECK(digit_counts(1024) == DigitCounts{10, 1});
  CHECK(digit_counts((std::int64_t{1} << 40) - 1) == DigitCounts{0, 40});
  CHECK_THROWS_AS(digit_counts(0), DomainError);
  CHECK_THROWS_AS(digit_counts(-3), DomainError);
}

TEST_CASE("transcription identity on 2 <= n <= 10^6") {
  bool ok = true;
  for (std::int64_t n = 2; n <= 1'000'000; ++n) {
    const DigitCounts c = digit_counts(n / 2);
    const auto lg = static_cast<std::uint32_t>(std::bit_width(static_cast<std::uint64_t>(n)) - 1);
    if (c.n0 + c.n1 != lg) ok = false;
  }
  CHECK(ok);
}

TEST_CASE("small partial sums") {
  auto exact = [](Series s, std::int64_t N) { return *evaluate(s, N).exact_sum; };
  CHECK(exact(Series::gamma_vacca_alternating, 3) == q(1, 6));
  CHECK(exact(Series::log4pi_alternating, 2) == q(1, 2));
  CHECK(exact(Series::log4pi_alternating, 3) == q(1, 6));
  CHECK(exact(Series::gamma_paired, 1) == q(1, 6));
  CHECK(exact(Series::gamma_paired, 2) == q(4, 15));
  CHECK(exact(Series::log4pi_paired, 1) == q(1, 6));
  CHECK(exact(Series::log4pi_paired, 3) == q(3, 14));
  CHECK(exact(Series::gamma_addison, 1) == q(13, 24));
  CHECK(exact(Series::log2pi_dual, 1) == q(-11, 24));
  CHECK(exact(Series::log2pi_dual, 2) == q(-11, 24));
  CHECK(exact(Series::combined_pochti, 1) == q(1, 12));
  CHECK(exact(Series::combined_pochti, 3) == q(47, 420));
  CHECK(exact(Series::log2_series, 1) == q(1, 24));
  CHECK(exact(Series::log2_series, 2) == q(1, 20));
  CHECK(exact(Series::main_series, 3) == q(1, 48));
  CHECK(exact(Series::main_series, 4) == q(1, 36));
  CHECK(exact(Series::pochtipochti_series, 1) == q(5, 24));
  CHECK(exact(Series::pochtipochti_series, 2) == q(1, 4));
}

TEST_CASE("exact partial sums agree with the oracle") {
  for (Series s : kAllSeries) {
    CAPTURE(series_name(s));
    for (std::int64_t N : {first_index(s), first_index(s) + 1, std::int64_t{17}, std::int64_t{100},
                           std::int64_t{1000}}) {
      CAPTURE(N);
      SeriesResult r = evaluate(s, N);
      REQUIRE(r.exact_sum.has_value());
      CHECK(r.exact_sum->get() == oracle(s, N));
      CHECK(r.value == ExtendedReal(*r.exact_sum, 50));
      CHECK(r.terms_used == N - first_index(s) + 1);
    }
  }
}

TEST_CASE("N = 100 values") {
  CHECK(near(gamma_vacca_alternating(100).value, dec("0.599232827844597806538"), 1e-20));
  CHECK(near(gamma_addison(100).value, dec("0.577167691242904027608"), 1e-20));
}

TEST_CASE("floating remainder matches exact accumulation") {
  for (Series s : kAllSeries) {
    CAPTURE(series_name(s));
    SummationOptions exact, mixed;
    exact.exact_terms = 5000;
    mixed.exact_terms = 50;
    SeriesResult a = evaluate(s, 5000, exact), b = evaluate(s, 5000, mixed);
    CHECK(a.exact_sum.has_value());
    CHECK_FALSE(b.exact_sum.has_value());
    CHECK(near(a.value, b.value, 1e-47));
  }
}

TEST_CASE("results do not depend on the worker count") {
  SummationOptions o;
  o.exact_terms = 10;
  o.workers = 1;
  const SeriesResult one = main_series(200'000, o);
  for (unsigned w : {2U, 3U, 7U}) {
    o.workers = w;
    const SeriesResult other = main_series(200'000, o);
    CHECK(mpfr_equal_p(one.value.get(), other.value.get()));
    CHECK(one.value.to_string() == other.value.to_string());
  }
}

TEST_CASE("pairing: gamma_paired(N) = gamma_vacca_alternating(2N+1)") {
  ExactRational paired(0), vacca(0);
  bool ok = true;
  for (std::int64_t N = 1; N <= 1000; ++N) {
    paired = paired + term(Series::gamma_paired, N).exact();
    vacca = vacca + term(Series::gamma_vacca_alternating, 2 * N).exact() +
            term(Series::gamma_vacca_alternating, 2 * N + 1).exact();
    if (!(paired == vacca)) ok = false;
  }
  CHECK(ok);
  for (std::int64_t N : {1, 2, 3, 64, 999, 1000}) {
    CHECK(*gamma_paired(N).exact_sum == *gamma_vacca_alternating(2 * N + 1).exact_sum);
  }
}

TEST_CASE("decomposition of main_series") {
  for (std::int64_t N : {3, 4, 10, 500}) {
    ExactRational lhs = *main_series(N).exact_sum;
    ExactRational rhs = *combined_pochti(N).exact_sum + ExactRational(3) * *log2_series(N).exact_sum -
                        ExactRational(1, 4);  // first two terms of pochtipochti: 5/24 + 5/120
    CHECK(lhs == rhs);
  }
}

TEST_CASE("positivity of the positive-term series") {
  for (Series s : kAllSeries) {
    if (!has_positive_terms(s)) continue;
    CAPTURE(series_name(s));
    bool ok = true;
    for (std::int64_t n = first_index(s); n <= 100'000; ++n) {
      if (term(s, n).numerator <= 0) ok = false;
    }
    CHECK(ok);
  }
  CHECK_FALSE(has_positive_terms(Series::log4pi_paired));
  CHECK_FALSE(has_positive_terms(Series::gamma_vacca_alternating));
}

TEST_CASE("partial sums of positive series increase strictly") {
  for (Series s : kAllSeries) {
    if (!has_positive_terms(s)) continue;
    CAPTURE(series_name(s));
    ExtendedReal prev = evaluate(s, first_index(s)).value;
    for (std::int64_t N = first_index(s) + 1; N < first_index(s) + 40; ++N) {
      ExtendedReal cur = evaluate(s, N).value;
      CHECK(prev < cur);
      prev = cur;
    }
  }
}

TEST_CASE("tail bounds are sound") {
  for (Series s : kAllSeries) {
    CAPTURE(series_name(s));
    for (std::int64_t N : {100, 1000, 10'000}) {
      CAPTURE(N);
      SeriesResult a = evaluate(s, N), b = evaluate(s, 10 * N);
      CHECK(abs(b.value - a.value) <= a.tail_bound);
    }
  }
}

TEST_CASE("enclosures contain the limits") {
  for (Series s : kAllSeries) {
    CAPTURE(series_name(s));
    SeriesResult r = evaluate(s, 100'000);
    CHECK(r.enclosure().contains(limit(s, 50)));
    CHECK(r.positive_terms == has_positive_terms(s));
  }
  CHECK(near(log4pi_alternating(1'000'000).value, dec("0.2415644752"), 1e-4));
  CHECK(near(main_series(1'000'000).value, dec("0.0461914179"), 1e-10));
  CHECK(main_series(1'000'000).tail_bound < ExtendedReal(1e-9, 50));
  CHECK(near(pochtipochti_series(1'000'000).value, dec("0.2961914179"), 1e-10));
  CHECK(near(combined_pochti(10'000).value, dec("0.125632959612077995880"), 1e-8));
}

TEST_CASE("precision is honoured") {
  SummationOptions o;
  o.digits = 30;
  SeriesResult r = log2_series(1000, o);
  CHECK(r.value.digits() == 30);
  CHECK(r.tail_bound.digits() == 30);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(main_series(2), DomainError);
  CHECK_THROWS_AS(gamma_vacca_alternating(1), DomainError);
  CHECK_THROWS_AS(log2_series(0), DomainError);
  CHECK_THROWS_AS(log2_series(kMaxIndex + 1), std::invalid_argument);
  SummationOptions o;
  o.exact_terms = kMaxExactTerms + 1;
  CHECK_THROWS_AS(log2_series(10, o), std::invalid_argument);
}
