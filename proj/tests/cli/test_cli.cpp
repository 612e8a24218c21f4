// End-to-end checks of the hypsum binary. The path to the built CLI comes in
// via the HYPSUM_CLI environment variable (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

std::string cli_path() {
  const char* env = std::getenv("HYPSUM_CLI");
  REQUIRE_MESSAGE(env != nullptr, "HYPSUM_CLI must point at the built binary");
  return env;
}

RunResult run(const std::string& args) {
  const std::string cmd = "\"" + cli_path() + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("table subcommand emits the frozen csv rows") {
  auto c4 = run("table c --max-m 4 --format csv");
  CHECK(c4.code == 0);
  CHECK(c4.out == "2,2,1\n3,2,0\n3,3,1\n4,2,1\n4,3,-2\n4,4,2\n");
  auto a3 = run("table a --max-m 3 --format csv");
  CHECK(a3.code == 0);
  CHECK(a3.out == "2,2,1\n3,2,0\n3,3,1\n");
}

TEST_CASE("table subcommand supports alternate routes and formats") {
  CHECK(run("table c --max-m 6 --route solve --format csv").out ==
        run("table c --max-m 6 --route explicit --format csv").out);
  CHECK(run("table a --max-m 6 --route recursion --format csv").out ==
        run("table a --max-m 6 --route closed-form --format csv").out);
  auto bf = run("table c --max-m 2 --format bfile");
  CHECK(bf.code == 0);
  CHECK(bf.out == "1 1\n");
  auto st = run("table stirling2 --max-m 4 --format csv");
  CHECK(st.code == 0);
  CHECK(contains(st.out, "4,2,7\n"));
}

TEST_CASE("eval subcommand prints exact values") {
  CHECK(run("eval psi --m 4 --n 3").out == "63\n");
  CHECK(run("eval psi --m 0 --n 9").out == "9\n");
  CHECK(run("eval psi-general --a 1 --m 2 --n 4").out == "30\n");
  auto both = run("eval hypersum --a 1 --m 2 --n 4 --method both");
  CHECK(both.code == 0);
  CHECK(both.out == "30 30\n");
  CHECK(run("eval hypersum --a 2 --m 2 --n 3 --method brute").out == "20\n");
  CHECK(run("eval hypersum --a 0 --m 5 --n 2 --method expansion").out == "32\n");
  CHECK(run("eval T --m 5 --alpha 2").out == "35\n");
  CHECK(run("eval U --m 4 --alpha 1").out == "4\n");
  CHECK(run("eval U --m 5 --alpha 2").out == "65/3\n");
}

TEST_CASE("verify families report counts and pass") {
  auto mer = run("verify mersenne --max-m 10");
  CHECK(mer.code == 0);
  CHECK(contains(mer.out, "mersenne: 18 checks, 18 passed"));
  auto pyth = run("verify pythagoras --max-c 13");
  CHECK(pyth.code == 0);
  CHECK(contains(pyth.out, "3 triples"));
  auto ws = run("verify weighted-sums --max-m 2");
  CHECK(ws.code == 0);
  CHECK(contains(ws.out, "weighted-sums: 2 checks, 2 passed"));
}

TEST_CASE("verify emits machine-readable json") {
  auto r = run("verify row-sums --max-m 6 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("pass") == true);
  CHECK(j["families"][0]["family"] == "row-sums");
  CHECK(j["families"][0]["checks"] == 10);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::string args = "verify all --max-m 8 --max-alpha 6 --max-n 6 --max-c 15";
  auto first = run(args);
  auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(run("table a --max-m 12 --format json").out ==
        run("table a --max-m 12 --format json").out);
}

TEST_CASE("serial and parallel sweeps print the same report") {
  const std::string args = "verify all --max-m 8 --max-alpha 6 --max-n 6 --max-c 15";
  CHECK(run(args).out == run(args + " --serial").out);
}

TEST_CASE("corrupted tables drive the exit code to 1") {
  auto r = run("verify row-sums --max-m 6 --corrupt-entry c,4,3");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL row-sum-c at (4): lhs=2 rhs=1"));
  auto ortho = run("verify orthogonality --max-m 6 --corrupt-entry a,3,2");
  CHECK(ortho.code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("table bogus --max-m 4").code == 2);
  CHECK(run("table c").code == 2);
  CHECK(run("table a --max-m 3 --format bfile").code == 2);
  CHECK(run("table stirling1 --max-m 3 --route solve").code == 2);
  CHECK(run("table a --max-m 1").code == 2);
  CHECK(run("eval psi --m 3 --n 0").code == 2);
  CHECK(run("eval hypersum --a 1 --m 1 --n 4").code == 2);
  CHECK(run("verify nonsense").code == 2);
  CHECK(run("verify pythagoras --max-c 3").code == 2);
  CHECK(run("verify rising-factorial --max-n 1").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("help is not an error") {
  CHECK(run("--help").code == 0);
  CHECK(run("table --help").code == 0);
}
