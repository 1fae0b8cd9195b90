#include "support.hpp"

#include "zetasum/errors.hpp"
#include "zetasum/zeta_zeros.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace zetasum;
using namespace zetasum::zeros;
using testing::dec;
using testing::near;

namespace {

const char* kG1 = "14.1347251417346937904572519836";
const char* kG2 = "21.0220396387715549926284795939";

ZeroTable fixture() { return load_zero_table(ZETASUM_TEST_DATA "/zeros_100.txt"); }

ZeroTable parse(const std::string& text) {
  std::istringstream in(text);
  return parse_zero_table(in);
}

}  // namespace

TEST_CASE("theta and Z against reference values") {
  CHECK(near(theta(ExtendedReal(17L, 50)), dec("-0.431114983873160810900800088207"), 1e-25));
  CHECK(near(theta(ExtendedReal(100L, 50)), dec("87.9721652317872196254831291138"), 1e-25));
  CHECK(near(theta(ExtendedReal(9999.5, 50)), dec("31860.0807212596375047835613881"), 1e-24));
  CHECK(near(hardy_z(ExtendedReal(17L, 50)), dec("2.14271218304331432025650395026"), 1e-25));
  CHECK(near(hardy_z(ExtendedReal(100L, 50)), dec("2.69269705666446347499537982869"), 1e-25));
  CHECK(near(hardy_z(ExtendedReal(1000.5, 50)), dec("2.54926113555555556426309925732"), 1e-25));
  CHECK(near(hardy_z(ExtendedReal(5000.25, 30)), dec("0.0521005439143592677351704448887", 30), 1e-23));
  CHECK(near(hardy_z(ExtendedReal(9999.5, 30)), dec("-3.7551205643157854360615421831", 30), 1e-23));
}

TEST_CASE("Z near the first zeros") {
  CHECK(abs(hardy_z(dec(kG1))) < ExtendedReal(1e-8, 50));
  CHECK(abs(hardy_z(dec(kG2))) < ExtendedReal(1e-25, 50));
  CHECK(hardy_z(ExtendedReal(14L, 50)).sign() != hardy_z(ExtendedReal(14.2, 50)).sign());
  CHECK(hardy_z(ExtendedReal(17L, 50)).sign() > 0);
}

TEST_CASE("Z keeps its relative accuracy across precisions") {
  for (double t : {23.5, 250.0, 3000.75}) {
    CAPTURE(t);
    ExtendedReal lo = hardy_z(ExtendedReal(t, 30)), hi = hardy_z(ExtendedReal(t, 60));
    CHECK(abs(lo - hi.with_digits(30)) <= power_of_ten(6 - 30, 30) * abs(hi.with_digits(30)));
  }
}

TEST_CASE("Z argument checks") {
  CHECK_THROWS_AS(hardy_z(ExtendedReal(50)), DomainError);
  CHECK_THROWS_AS(hardy_z(ExtendedReal(-1L, 50)), DomainError);
  CHECK_THROWS_AS(hardy_z(ExtendedReal(10001L, 30)), PrecisionError);
  CHECK_NOTHROW(hardy_z(ExtendedReal(10001L, 30), 2e4));
}

TEST_CASE("double-precision Z tracks the extended one") {
  FastHardyZ fz(1e4);
  for (double t : {10.0, 17.0, 99.25, 1234.5, 7777.0, 9999.5}) {
    CAPTURE(t);
    CHECK(std::abs(fz(t) - hardy_z(ExtendedReal(t, 30)).to_double()) < 1e-9);
  }
  CHECK_THROWS_AS(fz(9.0), PrecisionError);
  CHECK_THROWS_AS(fz(1e4 + 1), PrecisionError);
}

TEST_CASE("zero counts") {
  CHECK(near(smooth_zero_count(ExtendedReal(100L, 50)), dec("29.002343587325347988088158315"), 1e-25));
  CHECK(near(smooth_zero_count(ExtendedReal(10L, 50)), dec("0.0230563643353960944448786928004"), 1e-25));
  ZeroTable t = fixture();
  CHECK(zero_count_check(t.first(29), ExtendedReal(100L, 50)));
  CHECK_FALSE(zero_count_check(t.first(1), ExtendedReal(100L, 50)));
  CHECK(zero_count_check(ZeroTable(), ExtendedReal(10L, 50)));
}

TEST_CASE("find_zeros on small heights") {
  const ExtendedReal tol(1e-12, 50);
  ZeroTable one = find_zeros(ExtendedReal(15L, 50), tol);
  REQUIRE(one.size() == 1);
  CHECK(near(one[0], dec(kG1), 1e-12));
  CHECK(near(one[0], dec("14.1347251417"), 1e-10));
  CHECK(one.source() == ZeroSource::computed);

  ZeroTable two = find_zeros(ExtendedReal(25L, 50), tol);
  REQUIRE(two.size() == 2);
  CHECK(near(two[1], dec(kG2), 1e-12));

  ZeroTable hundred = find_zeros(ExtendedReal(100L, 50), tol);
  CHECK(hundred.size() == 29);
  CHECK(find_zeros(ExtendedReal(10L, 50), tol).empty());
  CHECK_THROWS_AS(find_zeros(ExtendedReal(2e4, 50), tol), PrecisionError);
  CHECK_THROWS_AS(find_zeros(ExtendedReal(100L, 50), ExtendedReal(1e-16, 50)), PrecisionError);
}

TEST_CASE("every ordinate sits in a sign-change bracket of width <= refine_tol") {
  const double tol = 1e-11;
  ZeroScan scan = scan_zeros(600, tol);
  REQUIRE(scan.ordinates.size() == scan.brackets.size());
  FastHardyZ fz(600);
  for (std::size_t i = 0; i < scan.brackets.size(); ++i) {
    auto [a, b] = scan.brackets[i];
    CAPTURE(i);
    CHECK(b - a <= tol);
    CHECK(a <= scan.ordinates[i]);
    CHECK(scan.ordinates[i] <= b);
    CHECK((fz(a) >= 0) != (fz(b) >= 0));
  }
  // Endpoints can sit within double noise of the zero, so the extended Z is
  // asked for a sign change on the bracket widened by 1e-12.
  for (std::size_t i = 0; i < 20; ++i) {
    auto [a, b] = scan.brackets[i];
    CAPTURE(i);
    CHECK(hardy_z(ExtendedReal(a - 1e-12, 30)).sign() != hardy_z(ExtendedReal(b + 1e-12, 30)).sign());
  }
}

TEST_CASE("zero finding does not depend on the worker count") {
  FindOptions o;
  o.workers = 1;
  ZeroScan one = scan_zeros(800, 1e-10, o);
  for (unsigned w : {2U, 5U}) {
    o.workers = w;
    ZeroScan other = scan_zeros(800, 1e-10, o);
    CHECK(one.ordinates == other.ordinates);
    CHECK(one.brackets == other.brackets);
  }
}

TEST_CASE("count checks hold at every height up to 1000") {
  ZeroTable t = find_zeros(ExtendedReal(1000L, 50), ExtendedReal(1e-10, 50));
  CHECK(t.size() == 649);
  bool ok = true;
  for (long T = 10; T <= 1000; ++T) ok = ok && zero_count_check(t, ExtendedReal(T, 50));
  CHECK(ok);
}

TEST_CASE("computed and ingested zeros agree") {
  ZeroTable ingested = fixture();
  REQUIRE(ingested.size() == 100);
  CHECK(ingested.source() == ZeroSource::ingested);
  CHECK(near(ingested.claimed_accuracy(), ExtendedReal(0.5e-20, 50), 1e-30));
  const ExtendedReal tol(1e-11, 50);
  ZeroTable computed = find_zeros(ingested[99] + ExtendedReal(0.5, 50), tol);
  REQUIRE(computed.size() >= 100);
  for (std::size_t i = 0; i < 100; ++i) {
    CAPTURE(i);
    CHECK(abs(computed[i] - ingested[i]) <= ingested.claimed_accuracy() + tol);
  }
}

TEST_CASE("parsing zero tables") {
  ZeroTable t = parse("14.134725141734\n21.022039638771\n");
  CHECK(t.size() == 2);
  CHECK(near(t.claimed_accuracy(), ExtendedReal(0.5e-12, 50), 1e-25));
  CHECK(parse("# header\n\n  14.134725141734  \n# mid\n21.022039638771\r\n").size() == 2);
  CHECK(parse("").empty());
  CHECK(parse("# only comments\n").empty());

  try {
    parse("14.134725141734\n21.022039638771\n21.0\n");
    FAIL("expected a monotonicity error");
  } catch (const ZeroTableError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse("14.1347\nfourteen\n");
    FAIL("expected a parse error");
  } catch (const ZeroTableError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse("-14.13\n"), ZeroTableError);
  // Ten ordinates below height 30 cannot be right.
  CHECK_THROWS_AS(parse("14\n15\n16\n17\n18\n19\n20\n21\n22\n23\n"), ZeroTableError);
  CHECK_THROWS_AS(load_zero_table("/nonexistent/zeros.txt"), ZeroTableError);
}

TEST_CASE("writing and truncating tables") {
  ZeroTable t = fixture();
  std::ostringstream out;
  write_zero_table(out, t.first(2), 12);
  CHECK(out.str() == "14.134725141735\n21.022039638772\n");
  ZeroTable head = t.first(2);
  CHECK(head.height() > head[1]);
  CHECK(head.height() < t[2]);
  std::istringstream back(out.str());
  CHECK(parse_zero_table(back).size() == 2);
  CHECK_THROWS_AS(ZeroTable({ExtendedReal(2L, 20), ExtendedReal(1L, 20)}, ZeroSource::computed,
                            ExtendedReal(20), ExtendedReal(3L, 20)),
                  ZeroTableError);
}
