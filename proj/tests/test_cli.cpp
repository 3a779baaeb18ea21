// End-to-end checks against the built CLI binary. The harness passes its path
// in INVAR_CLI; without it the cases are skipped.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* cli_path() { return std::getenv("INVAR_CLI"); }

RunResult run(const std::string& args) {
  const std::string command = std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace

TEST_CASE("cli: molien on the trivial group") {
  if (!cli_path()) return;
  const RunResult r = run("molien --n 1 --gens '' --json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("numerator") == nlohmann::json::array({"1"}));
  CHECK(j.at("denominator_degrees") == nlohmann::json::array({1}));
}

TEST_CASE("cli: hilbert coefficients for symmetric:3") {
  if (!cli_path()) return;
  const RunResult r = run("hilbert --family symmetric:3 --max-degree 4 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("coefficients") == nlohmann::json::array({"1", "1", "2", "3", "4"}));
}

TEST_CASE("cli: certify cyclic:4") {
  if (!cli_path()) return;
  const RunResult r = run("certify --family cyclic:4 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("conclusion") == "not_cm_at_p2");
  CHECK(j.at("steps").size() == 6);
}

TEST_CASE("cli: family and raw generators give byte-identical reports") {
  if (!cli_path()) return;
  const RunResult by_family = run("analyze --family cyclic:4 --json");
  const RunResult by_raw = run("analyze --n 4 --gens '(1 2 3 4)' --json");
  REQUIRE(by_family.exit_code == 0);
  REQUIRE(by_raw.exit_code == 0);
  CHECK(by_family.out == by_raw.out);
  CHECK(!by_family.out.empty());
}

TEST_CASE("cli: emitted JSON round-trips to identical bytes") {
  if (!cli_path()) return;
  const RunResult r = run("molien --family cyclic:4 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("cli: usage errors exit 1") {
  if (!cli_path()) return;
  CHECK(run("certify --family cyclic:4 --n 4").exit_code == 1); // mutually exclusive
  CHECK(run("certify").exit_code == 1);                         // no group spec
  CHECK(run("certify --n 4").exit_code == 1);                   // --n without --gens
  CHECK(run("certify --family cyclic:0").exit_code == 1);
  CHECK(run("certify --family cyclic:4 --char 4").exit_code == 1);
  CHECK(run("nonsense").exit_code == 1);
  CHECK(run("molien --n 3 --gens '(1 5)'").exit_code == 1);        // label out of range
  CHECK(run("hilbert --family cyclic:4 --max-degree -1").exit_code == 1);
}

TEST_CASE("cli: hilbert at degree zero") {
  if (!cli_path()) return;
  const RunResult r = run("hilbert --family cyclic:4 --max-degree 0 --json");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out).at("coefficients") == nlohmann::json::array({"1"}));
}

TEST_CASE("cli: cap exhaustion exits 2") {
  if (!cli_path()) return;
  CHECK(run("analyze --family symmetric:4 --closure-cap 5").exit_code == 2);
  CHECK(run("orbit-dim --family cyclic:4 --max-degree 12 --enum-cap 10").exit_code == 2);
}

TEST_CASE("cli: orbit-dim matches the hilbert coefficients") {
  if (!cli_path()) return;
  const RunResult dims = run("orbit-dim --family dihedral:4 --max-degree 8 --json");
  const RunResult hilbert = run("hilbert --family dihedral:4 --max-degree 8 --json");
  REQUIRE(dims.exit_code == 0);
  REQUIRE(hilbert.exit_code == 0);
  const auto jd = nlohmann::json::parse(dims.out);
  const auto jh = nlohmann::json::parse(hilbert.out);
  for (int d = 0; d <= 8; ++d) {
    const auto entry = jd.at("dimensions")[static_cast<std::size_t>(d)];
    CHECK(entry.at("degree") == d);
    CHECK(std::to_string(entry.at("dimension").get<long>()) ==
          jh.at("coefficients")[static_cast<std::size_t>(d)].get<std::string>());
  }
}

TEST_CASE("cli: gobel lists the adjoined product of all variables") {
  if (!cli_path()) return;
  const RunResult r = run("gobel --family symmetric:3 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& gen : j.at("generators"))
    if (gen.at("representative") == nlohmann::json::array({1, 1, 1})) found = true;
  CHECK(found);
  CHECK(j.at("count") == j.at("generators").size());
}

TEST_CASE("cli: certify at other characteristics") {
  if (!cli_path()) return;
  const RunResult p3 = run("certify --family cyclic:4 --char 3 --json");
  REQUIRE(p3.exit_code == 0);
  auto j3 = nlohmann::json::parse(p3.out);
  CHECK(j3.at("verdict") == "nonmodular_cohen_macaulay"); // 3 does not divide 4

  const RunResult p2div = run("certify --family cyclic:6 --char 3 --json");
  REQUIRE(p2div.exit_code == 0);
  CHECK(nlohmann::json::parse(p2div.out).at("verdict") == "no_rule_applies"); // 3 divides 6

  const RunResult p0 = run("certify --family cyclic:4 --char 0 --json");
  REQUIRE(p0.exit_code == 0);
  CHECK(nlohmann::json::parse(p0.out).at("status") == "not_gorenstein");
}

TEST_CASE("cli: text mode mirrors the grouped Molien sum") {
  if (!cli_path()) return;
  const RunResult r = run("molien --family cyclic:4");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("(1/4) [ 1/(1-l)^4 + 1/(1-l^2)^2 + 2/(1-l^4) ]") != std::string::npos);
  CHECK(r.out.find("1 + l^2 + l^3 + 2*l^4 + l^5") != std::string::npos);
  CHECK(r.out.find("(1-l)(1-l^2)(1-l^3)(1-l^4)") != std::string::npos);
}
