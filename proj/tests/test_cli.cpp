#include "zetasum/report.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into the output when asked.
Run run(const std::string& args, bool with_stderr = false, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" ZETASUM_CLI "' " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

const std::string kFixture = ZETASUM_TEST_DATA "/zeros_100.txt";

}  // namespace

TEST_CASE("verify") {
  Run r = run("--format json verify itog");
  CHECK(r.status == 0);
  auto rep = zetasum::report::report_from_json(r.out);
  CHECK(rep.identity == "itog");
  CHECK(rep.routes.size() == 2);
  CHECK(rep.passed());
  CHECK(std::stod(rep.discrepancy) < 1e-9);

  CHECK(run("verify no-such-identity").status == 2);
  CHECK(run("verify").status == 2);
  CHECK(run("--format yaml verify itog").status == 2);
  CHECK(run("--precision 7 verify itog").status == 2);
  CHECK(run("verify p12").status == 1);
}

TEST_CASE("p0_zeros over a computed table") {
  Run r = run("--format json verify p0_zeros");
  CHECK(r.status == 0);
  auto rep = zetasum::report::report_from_json(r.out);
  CHECK(rep.passed());
}

TEST_CASE("json output is byte-identical across runs and worker counts") {
  Run a = run("--format json --terms 20000 verify addison");
  Run b = run("--format json --terms 20000 --workers 3 verify addison");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == run("--format json --terms 20000 verify addison").out);
}

TEST_CASE("environment overrides") {
  Run r = run("--format json --terms 1000 verify log2", false, "ZETASUM_PRECISION=30");
  auto rep = zetasum::report::report_from_json(r.out);
  Run flag = run("--precision 30 --format json --terms 1000 verify log2");
  CHECK(r.out == flag.out);
  CHECK(run("verify log2", false, "ZETASUM_FORMAT=csv").out.rfind("identity,label,", 0) == 0);
}

TEST_CASE("constants") {
  Run r = run("--precision 30 --terms 100000 --format csv constants");
  CHECK(r.status == 0);
  CHECK(r.out.find("gamma,") != std::string::npos);
  CHECK(r.out.find("0.577215664901532") != std::string::npos);
  CHECK(r.out.find("\r\n") != std::string::npos);
}

TEST_CASE("zeros find, export and check") {
  Run f = run("zeros find --height 100");
  CHECK(f.status == 0);
  CHECK(lines(f.out) == 29);
  CHECK(f.out.rfind("14.134725141", 0) == 0);

  Run e = run("zeros export --limit 2 '" + kFixture + "'");
  CHECK(e.status == 0);
  CHECK(lines(e.out) == 2);
  CHECK(e.out.rfind("14.134725", 0) == 0);
  CHECK(run("--height 30 zeros export --limit 2 --decimals 9").out == "14.134725142\n21.022039639\n");

  auto out = (std::filesystem::temp_directory_path() / "zetasum_find.txt").string();
  CHECK(run("zeros find --height 50 --decimals 15 -o '" + out + "'").status == 0);
  Run c = run("--format json zeros check '" + out + "'");
  CHECK(c.status == 0);
  CHECK(c.out.find("\"10\"") != std::string::npos);

  auto bad = temp_file("zetasum_bad.txt", "14.134725141734\n21.022039638771\n20.0\n");
  Run b = run("zeros check '" + bad + "'", true);
  CHECK(b.status == 1);
  CHECK(b.out.find("line 3") != std::string::npos);
  CHECK(run("zeros check /nonexistent/file").status == 1);
  CHECK(run("zeros").status == 2);
}

TEST_CASE("li") {
  Run r = run("--zeros-file '" + kFixture + "' --format csv li 3");
  CHECK(r.status == 0);
  CHECK(lines(r.out) == 4);
  Run one = run("--format csv li 1");
  CHECK(one.status == 0);
  CHECK(one.out.find("\r\n1,0.023095") != std::string::npos);
  Run ten = run("--height 2000 --format csv li 10");
  CHECK(ten.status == 0);
  CHECK(lines(ten.out) == 11);
  CHECK(ten.out.find("false") == std::string::npos);
  CHECK(run("li 0").status == 2);
  CHECK(run("li 1001").status == 2);
}

TEST_CASE("gn") {
  Run g1 = run("--zeros-file '" + kFixture + "' --format csv gn 1 --zeros 100");
  CHECK(g1.status == 0);
  CHECK(g1.out.find("1,100,") != std::string::npos);
  Run g2 = run("--height 500 --format csv gn 2 --zeros 200");
  CHECK(g2.status == 0);
  CHECK(g2.out.find("true") != std::string::npos);
  CHECK(run("gn 4").status == 2);
  CHECK(run("--zeros-file '" + kFixture + "' gn 2 --zeros 101").status == 2);
}

TEST_CASE("help exits cleanly") { CHECK(run("--help").status == 0); }
