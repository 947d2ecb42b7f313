#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qpr/cli.hpp"
#include "test_support.hpp"

using namespace qpr;
using namespace qpr::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("qpr_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("relations command") {
  auto r = run({"relations", fixture_path("example1_del_pezzo.quiver")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("E(a;{};{1,2,3}): Delta[1,3]*Delta[5] - Delta[2,3]*Delta[4]\n") != std::string::npos);
  CHECK(r.out.find("E(c;{};{1,2,3}): Delta[1,2]*Delta[9] + Delta[2,3]*Delta[8]\n") != std::string::npos);

  auto local = run({"relations", fixture_path("example2_jumping.quiver"), "--labels", "local"});
  CHECK(local.code == kExitOk);
  CHECK(local.out.find("Delta[left;1]") != std::string::npos);

  auto cas = run({"relations", fixture_path("example3_elliptic.quiver"), "--format", "cas"});
  CHECK(cas.code == kExitOk);
  CHECK(cas.out.find("ideal I =") != std::string::npos);

  auto classical = run({"relations", fixture_path("example1_del_pezzo.quiver"), "--classical", "--order", "2"});
  CHECK(classical.code == kExitOk);
}

TEST_CASE("verify command") {
  auto r = run({"verify", fixture_path("example2_jumping.quiver"), "--primes", "2,3", "--set", "lambda=0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("p=2: equal, 5 point(s)") != std::string::npos);
  CHECK(r.out.find("p=3: equal, 7 point(s)") != std::string::npos);
  auto missing = run({"verify", fixture_path("example2_jumping.quiver"), "--primes", "2"});
  CHECK(missing.code == kExitInputError);
  CHECK(missing.err.find("lambda") != std::string::npos);
  CHECK(run({"verify", fixture_path("example1_del_pezzo.quiver"), "--primes", "4"}).code == kExitInputError);
  CHECK(run({"verify", fixture_path("example2_jumping.quiver"), "--primes", "5", "--set", "lambda=1/5"}).code ==
        kExitInputError);
  CHECK(run({"verify", fixture_path("example2_jumping.quiver"), "--primes", "5", "--set", "mu=1"}).code ==
        kExitInputError);
}

TEST_CASE("count command") {
  auto r = run({"count", fixture_path("example2_jumping.quiver"), "--primes", "2,3,5", "--fit", "--validate", "7",
                "--set", "lambda=0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("fit: 2*q + 1") != std::string::npos);
  CHECK(r.out.find("euler characteristic: 3") != std::string::npos);
  auto elliptic = run({"count", fixture_path("example3_elliptic.quiver"), "--primes", "2,3,5,7,11,13", "--fit",
                       "--validate", "17"});
  CHECK(elliptic.code == kExitMismatch);
  auto plain = run({"count", fixture_path("example1_del_pezzo.quiver"), "--primes", "2,3"});
  CHECK(plain.code == kExitOk);
  CHECK(plain.out.find("q=2: 13") != std::string::npos);
  CHECK(plain.out.find("q=3: 22") != std::string::npos);
}

TEST_CASE("chart, schubert and paths commands") {
  auto chart = run({"chart", fixture_path("example1_del_pezzo.quiver"), "--vertex", "central", "--pivot", "1,2"});
  CHECK(chart.code == kExitOk);
  CHECK(chart.out.find("n_1 = (1, 0, -Delta[2,3]/Delta[1,2])") != std::string::npos);
  CHECK(run({"chart", fixture_path("example1_del_pezzo.quiver"), "--vertex", "central", "--pivot", "1"}).code ==
        kExitInputError);
  CHECK(run({"chart", fixture_path("example1_del_pezzo.quiver"), "--vertex", "nowhere", "--pivot", "1,2"}).code ==
        kExitInputError);

  auto cell = run({"schubert", fixture_path("example1_del_pezzo.quiver"), "--zero", "Delta[2,3]", "--one",
                   "Delta[1,3]", "--one", "Delta[4]"});
  CHECK(cell.code == kExitOk);
  CHECK(cell.out.find("\nDelta[5]\n") != std::string::npos);
  CHECK(run({"schubert", fixture_path("example1_del_pezzo.quiver"), "--zero", "Delta[1,3]", "--one",
             "Delta[1,3]"})
            .code == kExitInputError);

  auto paths = run({"paths", fixture_path("example2_jumping.quiver"), "--max-len", "2"});
  CHECK(paths.code == kExitOk);
  CHECK(paths.out.find("2 c.a : right -> mid\n") != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"bogus"}).code == kExitInputError);
  CHECK(run({"relations", "/nonexistent/file.quiver"}).code == kExitInputError);
  CHECK(run({"relations", fixture_path("example1_del_pezzo.quiver"), "--format", "tex"}).code == kExitInputError);

  auto bad = write_temp("bad.quiver", "quiver x\nvertex p dim 2\narrow v : p -> z\ndimvector p=1\n");
  auto r = run({"relations", bad});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("3:16: error:") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("output does not depend on the worker count") {
  for (const char* name : {"example1_del_pezzo.quiver", "example3_elliptic.quiver"}) {
    auto one = run({"verify", fixture_path(name), "--primes", "2,3", "--threads", "1"});
    auto four = run({"verify", fixture_path(name), "--primes", "2,3", "--threads", "4"});
    CHECK(one.code == kExitOk);
    CHECK(one.out == four.out);
    CHECK(run({"relations", fixture_path(name), "--order", "2", "--classical", "--threads", "1"}).out ==
          run({"relations", fixture_path(name), "--order", "2", "--classical", "--threads", "4"}).out);
  }
}
