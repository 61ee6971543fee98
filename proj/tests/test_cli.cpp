#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "dot_grammar.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::string& args, const std::string& env = "") {
  char path[] = "/tmp/msc_cli_err_XXXXXX";
  const int fd = mkstemp(path);
  REQUIRE(fd >= 0);
  close(fd);
  const std::string cmd = env + " " + MSC_CLI_PATH + " " + args + " 2>" + path;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  Run r{0, "", ""};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  std::remove(path);
  return r;
}

bool parses(const std::string& s) { return !json::parse(s, nullptr, false).is_discarded(); }

} // namespace

TEST_CASE("worked example") {
  auto r = run("pair 'A2^2' poincare --vertex 0 --terms 10 --closed-form");
  CHECK(r.code == 0);
  CHECK(r.out.find("1/(1 - 4t^2)") != std::string::npos);
  CHECK(r.out.find("1, 0, 4, 0, 16, 0, 64, 0, 256, 0") != std::string::npos);
  r = run("poincare --pair S4A4 --side res --vertex 2 --terms 8 --json");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["coefficients"] == json::array({0, 1, 2, 7, 20, 61, 182, 547}));
}

TEST_CASE("chartable layout") {
  auto r = run("chartable binary_tetrahedral");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() > 10);
  CHECK(rows[1].rfind("size", 0) == 0);
  // header, sizes, rule, then the seven characters
  for (int i = 3; i < 10; ++i) CHECK(rows[static_cast<std::size_t>(i)].rfind("tau_", 0) == 0);
  CHECK(rows[10] == "reps:");
}

TEST_CASE("json for every subcommand") {
  for (const char* a : {"group binary_dihedral 4", "chartable symmetric4", "chartable cyclic --n 6 --numeric",
                        "pair 'E6^2'", "pair 'A2n^2' --n 3", "poincare --pair 'D4^3' --terms 6", "chebyshev T 7",
                        "exponents --type 'A_{11}^(2)'", "verify --pair 'E6^2'"}) {
    auto r = run(std::string(a) + " --json");
    CHECK_MESSAGE(r.code == 0, a << ": " << r.err);
    CHECK_MESSAGE(parses(r.out), a);
    auto u = run(std::string(a) + " --json --unicode");
    CHECK_MESSAGE(parses(u.out), a);
  }
}

TEST_CASE("dot for every pair") {
  for (const char* a : {"'A2n-1^2' --n 3", "'A2n-1^2' --n 8", "'Dn+1^2' --n 2", "'A2n^2' --n 5", "'E6^2'", "'D4^3'",
                        "'A2^2'", "S4A4"})
    for (const char* side : {"res", "ind"}) {
      auto r = run(std::string("pair ") + a + " --dot --side " + side);
      CHECK(r.code == 0);
      CHECK_MESSAGE(dotcheck::check(r.out).empty(), a << " " << side << ": " << dotcheck::check(r.out));
    }
}

TEST_CASE("exit codes") {
  CHECK(run("verify --pair S4A4").code == 0);
  auto r = run("verify --pair S4A4");
  CHECK(r.out.find("PASS denominator_identity_check") != std::string::npos);
  CHECK(run("pair nope").code == 1);
  CHECK(run("pair 'Dn+1^2' --n 1").code == 1);
  CHECK(run("chartable binary_dihedral 300", "MSC_MAX_GROUP_ORDER=100").code == 1);
  CHECK(run("chartable binary_dihedral 20", "MSC_MAX_GROUP_ORDER=100").code == 0);
  CHECK(run("").code == 64);
  CHECK(run("group").code == 64);
  CHECK(run("group cyclic 3 --bogus").code == 64);
  CHECK(run("group cyclic 3 --dot").code == 64);
  CHECK(run("pair S4A4 --json --dot").code == 64);
  CHECK(run("chebyshev V 3").code == 64);
  CHECK(run("verify").code == 64);
  CHECK(run("--help").code == 0);

  r = run("pair nope --json");
  CHECK(r.code == 1);
  auto e = json::parse(r.err);
  CHECK(e["error"] == "domain");
  CHECK(e["exit_code"] == 1);
  r = run("verify --pair 'A2^2' --json");
  CHECK(r.code == 2);
  CHECK(parses(r.out));
  e = json::parse(r.err);
  CHECK(e["error"] == "verification");
  CHECK(e["failed"].size() >= 1);
  r = run("group --json");
  CHECK(r.code == 64);
  CHECK(r.err.find("\"error\":\"usage\"") != std::string::npos);
}
