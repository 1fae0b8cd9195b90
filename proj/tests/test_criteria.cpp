#include "support.hpp"

#include "zetasum/criteria.hpp"
#include "zetasum/errors.hpp"

#include <doctest.h>

#include <random>

using namespace zetasum;
using namespace zetasum::criteria;
using zetasum::zeros::ZeroTable;
using testing::dec;
using testing::near;

namespace {

const ZeroTable& fixture() {
  static const ZeroTable t = zeros::load_zero_table(ZETASUM_TEST_DATA "/zeros_100.txt");
  return t;
}

const ZeroTable& computed() {
  static const ZeroTable t =
      zeros::find_zeros(ExtendedReal(zeros::kDefaultMaxHeight, 50), ExtendedReal(1e-10, 50));
  return t;
}

ExtendedReal main_constant(int d) { return euler_gamma(d) - log(4L * pi(d)) + 2L; }

Complex on_line(const ExtendedReal& g) { return Complex(ExtendedReal(0.5, g.digits()), g); }

}  // namespace

TEST_CASE("g on the critical line") {
  const int d = 50;
  Complex half(ExtendedReal(0.5, d), ExtendedReal(d));
  CHECK(near(g_value(half).re, ExtendedReal(4L, d), 1e-48));
  const ExtendedReal g1 = fixture()[0];
  Complex v = g_value(on_line(g1));
  CHECK(near(v.re, 1L / (ExtendedReal(0.25, d) + g1 * g1), 1e-48));
  CHECK(near(v.re, dec("0.00499898883372313974154830224669"), 1e-19));
  CHECK(abs(v.im) < ExtendedReal(1e-48, d));
  CHECK_THROWS_AS(g_value(Complex(d)), DomainError);
  CHECK_THROWS_AS(g_value(Complex(ExtendedReal(1L, d), ExtendedReal(d))), DomainError);
}

TEST_CASE("G2 vanishes on the diagonal and is symmetric") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> height(10.0, 5000.0);
  for (int i = 0; i < 50; ++i) {
    Complex a = on_line(ExtendedReal(height(rng), 50)), b = on_line(ExtendedReal(height(rng), 50));
    std::vector<Complex> aa{a, a}, ab{a, b}, ba{b, a};
    CHECK(g_product(aa).re.is_zero());
    Complex x = g_product(ab), y = g_product(ba);
    CHECK(abs(x.re - y.re) <= power_of_ten(-48, 50) * abs(x.re));
    CHECK(x.re.sign() > 0);
    CHECK(abs(x.im) <= power_of_ten(-45, 50) * abs(x.re));
  }
}

TEST_CASE("P0 zero sum") {
  const ZeroTable one = fixture().first(1);
  SeriesResult r = zero_sum_p0(one, false);
  CHECK(near(r.value, dec("0.00999797766744627948309660449338"), 1e-19));
  CHECK(r.terms_used == 1);
  CHECK_THROWS_AS(zero_sum_p0(ZeroTable()), DomainError);

  ExtendedReal prev(50);
  for (std::size_t k = 1; k <= 100; ++k) {
    ExtendedReal v = zero_sum_p0(fixture().first(k), false).value;
    CHECK(prev < v);
    prev = v;
  }
}

TEST_CASE("the tail correction") {
  TailCorrection t = zero_sum_tail(ExtendedReal(1e4, 50));
  const ExtendedReal T(1e4, 50);
  CHECK(near(t.correction, (log(T / (2L * pi(50))) + 1L) / (pi(50) * T), 1e-45));
  CHECK(t.correction.sign() > 0);
  CHECK(t.bound_on_remainder.sign() > 0);
}

TEST_CASE("P0 over 10^4 zeros") {
  const ZeroTable& z = computed();
  REQUIRE(z.size() >= 10'000);
  const ExtendedReal c = main_constant(50);
  SeriesResult corrected = zero_sum_p0(z, true), raw = zero_sum_p0(z, false);
  CHECK(near(corrected.value, c, 1e-4));
  CHECK(near(corrected.value, c, 1e-6));
  CHECK(raw.value < c);
  CHECK(near(raw.value, c, 5e-4));
  CHECK(raw.enclosure().contains(c));
  CHECK(corrected.enclosure().contains(c));
}

TEST_CASE("Li coefficients") {
  SeriesResult single = li_lambda(1, fixture().first(1), false);
  CHECK(near(single.value, dec("0.00499898883372313974154830224669"), 1e-19));

  // Pairing fold: 2 Re(term(rho)) = term(rho) + term(conj rho).
  const Complex rho = on_line(fixture()[4]);
  for (int n : {1, 2, 7, 49, 50, 51, 300}) {
    CAPTURE(n);
    Complex a = li_term(n, rho), b = li_term(n, rho.conj());
    CHECK(near(ldexp(a.re, 1), a.re + b.re, 1e-45));
    CHECK(abs(a.im + b.im) < ExtendedReal(1e-45, 50));
  }
  // exp-log and repeated multiplication agree where both apply.
  Complex off(ExtendedReal(0.3, 50), ExtendedReal(7.25, 50));
  Complex m = pow(Complex(ExtendedReal(1L, 50), ExtendedReal(50)) - Complex(ExtendedReal(1L, 50), ExtendedReal(50)) / off, 60);
  Complex e = li_term(60, off);
  CHECK(near(1L - m.re, e.re, 1e-40));

  const ZeroTable& z = computed();
  SeriesResult l1 = li_lambda(1, z, true);
  CHECK(near(l1.value, ldexp(main_constant(50), -1), 1e-4));
  CHECK(near(l1.value, dec("0.0230957089661"), 1e-6));
  for (int n = 1; n <= 10; ++n) CHECK(li_lambda(n, z, true).value.sign() > 0);
  CHECK(li_lambda(1000, fixture(), false).value.sign() > 0);
  CHECK_THROWS_AS(li_lambda(0, z), DomainError);
  CHECK_THROWS_AS(li_lambda(kMaxLiIndex + 1, z), PrecisionError);
  CHECK_THROWS_AS(li_lambda(1, ZeroTable()), DomainError);
}

TEST_CASE("G_n multisums") {
  const ZeroTable& z = fixture();
  for (std::size_t K : {1UL, 10UL, 100UL}) {
    CAPTURE(K);
    SeriesResult g1 = gn_multisum(1, z, K);
    SeriesResult p0 = zero_sum_p0(z.first(K), false);
    CHECK(ldexp(g1.value, 1) == p0.value);
  }
  const ExtendedReal x1 = 1L / (ExtendedReal(0.25, 50) + z[0] * z[0]);
  const ExtendedReal x2 = 1L / (ExtendedReal(0.25, 50) + z[1] * z[1]);
  SeriesResult two = gn_multisum(2, z, 2);
  CHECK(near(two.value, 2L * x1 * x2 * (x1 - x2) * (x1 - x2), 1e-58));
  CHECK(near(two.value, dec("1.69436974524855232609279391394e-10"), 1e-28));

  for (int n : {1, 2, 3}) {
    CAPTURE(n);
    SeriesResult fast = gn_multisum(n, z, 12), slow = gn_multisum_naive(n, z, 12);
    CHECK(abs(fast.value - slow.value) <= power_of_ten(-45, 50) * abs(slow.value));
  }
  CHECK(gn_multisum(3, z, 40).value.sign() > 0);
  CHECK(gn_multisum(2, z, 0).value.is_zero());
  CHECK_THROWS_AS(gn_multisum(4, z, 2), DomainError);
  CHECK_THROWS_AS(gn_multisum(0, z, 2), DomainError);
  CHECK_THROWS_AS(gn_multisum(1, z, 101), DomainError);
}

TEST_CASE("identity verification") {
  for (const char* id : {"itog", "p01", "pochti", "log2", "addison", "vacca_dual", "dual_addison",
                         "pochtipochti"}) {
    CAPTURE(id);
    IdentityReport r = verify_identity(id);
    CHECK(r.pass);
    CHECK(r.identity_id == id);
    CHECK(r.pass == (r.discrepancy <= r.tolerance));
    VerifyParams doubled;
    doubled.terms = 2 * default_terms(id);
    CHECK(verify_identity(id, doubled).pass);
  }
  IdentityReport itog = verify_identity("itog");
  CHECK(itog.discrepancy < ExtendedReal(1e-9, 50));
  CHECK(itog.route_a.result.series_id == "main_series");

  VerifyParams p;
  p.zeros = &computed();
  IdentityReport p0 = verify_identity("p0_zeros", p);
  CHECK(p0.pass);
  CHECK(p0.tolerance >= ExtendedReal(1e-4, 50));
  CHECK(p0.route_a.label.find("critical line") != std::string::npos);
  p.tail_correction = false;
  CHECK(verify_identity("p0_zeros", p).pass);

  // The digamma series as printed sums to (1 - ln 2)/2, so this identity fails.
  IdentityReport p12 = verify_identity("p12");
  CHECK_FALSE(p12.pass);
  CHECK(near(p12.route_a.result.value, ldexp(1L - ln2(50), -1), 1e-18));

  CHECK_THROWS_AS(verify_identity("no-such-identity"), std::invalid_argument);
  CHECK(identity_catalog().size() == 10);
}
