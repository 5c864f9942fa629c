#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string("\"") + CRN_BIN + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string data(const std::string& name) {
  return std::string(CRN_DATA_DIR) + "/" + name;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze reports toric structure when the kernel splits") {
  auto r = run("analyze " + data("triangle.crn") + " " + data("triangle_eq.rates"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "condition 1 (support partition): holds"));
  CHECK(contains(r.out, "partition: {1,2} {3}"));
  CHECK(contains(r.out, "verdict: toric steady states"));
}

TEST_CASE("analyze reports the failing stage") {
  auto r = run("analyze " + data("triangle.crn") + " " + data("triangle_neq.rates"));
  CHECK(r.code == 2);
  CHECK(contains(r.out, "condition 1 (support partition): fails"));
}

TEST_CASE("analyze succeeds on the signaling network only with enlargement") {
  auto plain = run("analyze " + data("envz_ompr.crn") + " " + data("envz_ompr.rates"));
  CHECK(plain.code == 2);
  auto enlarged = run("analyze " + data("envz_ompr.crn") + " " + data("envz_ompr.rates") +
                      " --enlarge-bound 1");
  CHECK(enlarged.code == 0);
  CHECK(contains(enlarged.out, "enlarged system"));
  CHECK(contains(enlarged.out, "verdict: toric steady states"));
}

TEST_CASE("analyze json output carries the schema and the partition") {
  auto r = run("analyze " + data("phos2.crn") + " " + data("phos2.rates") + " --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "toric-crn/1");
  CHECK(j["results"]["toric"]["condition1"] == true);
  auto part = j["results"]["toric"]["partition"];
  auto expect = nlohmann::json::parse("[[1,2,6,7],[3,4,9,10],[5],[8]]");
  CHECK(part == expect);
}

TEST_CASE("phospho chains print determinants and the canonical partition") {
  auto two = run("phospho 2 --unit-rates");
  CHECK(two.code == 0);
  CHECK(contains(two.out, "partition: {1,4,7,9} {2,5,8,10} {3} {6}"));
  auto one = run("phospho 1 --unit-rates");
  CHECK(one.code == 0);
  CHECK(contains(one.out, "D = -1"));
}

TEST_CASE("phospho rejects bad invocations") {
  CHECK(run("phospho 0 --unit-rates").code == 1);
  CHECK(run("phospho 2").code == 1);
  CHECK(run("phospho 2 --unit-rates --rates " + data("phos2.rates")).code == 1);
}

TEST_CASE("phospho json output parses") {
  auto r = run("phospho 2 --rates " + data("phos2.rates") + " --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "toric-crn/1");
}

TEST_CASE("multistat finds a witness for the two-site chain") {
  auto r = run("multistat " + data("phos2.crn"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "multistationarity witness found"));
  CHECK(contains(r.out, "checks: pass"));
}

TEST_CASE("multistat rules out the one-site chain") {
  auto r = run("multistat " + data("phos1.crn"));
  CHECK(r.code == 3);
  CHECK(contains(r.out, "no capacity for multistationarity"));
}

TEST_CASE("multistat rules out the triangle") {
  auto r = run("multistat " + data("triangle.crn"));
  CHECK(r.code == 3);
  CHECK(contains(r.out, "no capacity for multistationarity"));
  CHECK(contains(r.out, "structure established at symmetric rates only"));
}

TEST_CASE("multistat flags a degenerate flux cone") {
  auto r = run("multistat " + data("degenerate.crn"));
  CHECK(r.code == 4);
  CHECK(contains(r.out, "degenerate"));
}

TEST_CASE("rays lists the flux cone generators") {
  auto r = run("rays " + data("triangle.crn"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "degenerate: no"));
  auto j = run("rays " + data("triangle.crn") + " --json");
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["schema"] == "toric-crn/1");
}

TEST_CASE("bad arguments and unreadable files exit with an error") {
  CHECK(run("analyze " + data("no_such.crn") + " " + data("triangle_eq.rates")).code == 1);
  CHECK(run("analyze").code == 1);
  CHECK(run("").code == 1);
  auto r = run("analyze " + data("triangle.crn") + " " + data("no_such.rates"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "error:"));
}
