#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "potts/ground.hpp"
#include "potts/io.hpp"

using namespace potts;

namespace {

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cayley-potts");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("verify passes every suite") {
  for (const char* k : {"1", "2"}) {
    const auto r = invoke({"--k", k, "verify"});
    CHECK(r.status == 0);
    const auto text = lines(r.out);
    REQUIRE(text.size() == 7);
    for (std::size_t n = 0; n < 6; ++n) CHECK(text[n].rfind("PASS ", 0) == 0);
    CHECK(text[6] == "6/6 suites passed");
  }
}

TEST_CASE("ground states at zero coupling are everything") {
  const auto r = invoke({"ground-states", "--j1", "0", "--j2", "0"});
  CHECK(r.status == 0);
  CHECK(json::parse(r.out).at("gs") == "ALL");
}

TEST_CASE("ground states with fractional couplings") {
  const auto r = invoke({"ground-states", "--j1=-1", "--j2", "1"});
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("u_min") == "-1/2");
  CHECK(j.at("witnesses").size() == 12);
  CHECK(j.at("orbits").size() == 1);
}

TEST_CASE("region grid matches ground-states at sampled cells") {
  const auto r = invoke({"regions", "--grid", "201"});
  REQUIRE(r.status == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + 201 * 201);
  CHECK(rows[0] == "j1,j2,minimizer_orbit_id");
  for (int n = 0; n < 20; ++n) {
    const std::size_t a = static_cast<std::size_t>((n * 37) % 201);
    const std::size_t b = static_cast<std::size_t>((n * 91 + 13) % 201);
    const auto& row = rows[1 + a * 201 + b];
    const Coupling J{Rational(-100 + static_cast<std::int64_t>(a), 50), Rational(-100 + static_cast<std::int64_t>(b), 50)};
    const auto label = row.substr(row.rfind(',') + 1);
    CHECK(label == orbit_label(minimize(J, 2).minimizers, 2));
    const auto gs = invoke({"ground-states", "--j1", to_string(J.j1), "--j2", to_string(J.j2)});
    const auto doc = json::parse(gs.out);
    if (label == "ALL") {
      CHECK(doc.at("gs") == "ALL");
    } else {
      std::string ids;
      for (const auto& o : doc.at("orbits")) ids += (ids.empty() ? "" : "+") + std::to_string(o.at("orbit_id").get<int>());
      CHECK(ids == label);
    }
  }
  // The origin is the only cell where every signature ties.
  CHECK(rows[1 + 100 * 201 + 100] == "0,0,ALL");
}

TEST_CASE("region fan JSON") {
  const auto r = invoke({"regions"});
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("sectors").size() == 5);
}

TEST_CASE("outputs are deterministic") {
  CHECK(invoke({"peierls", "--j1=-1", "--j2=-1", "--trials", "50", "--seed", "9"}).out ==
        invoke({"peierls", "--j1=-1", "--j2=-1", "--trials", "50", "--seed", "9"}).out);
  CHECK(invoke({"--k", "3", "classes", "--list"}).out == invoke({"--k", "3", "classes", "--list"}).out);
}

TEST_CASE("classes summary and list") {
  const auto text = invoke({"classes"});
  CHECK(text.status == 0);
  CHECK(text.out.find("orbit 0: ") == 0);
  const auto list = json::parse(invoke({"classes", "--list"}).out);
  CHECK(list.size() == all_orbits(2).size());
  CHECK(text.out.find(std::to_string(list.size()) + " orbits") != std::string::npos);
}

TEST_CASE("extend verifies the constructed state") {
  const auto r = invoke({"extend", "--ball", R"({"k":2,"center":1,"leaves":[1,2,3]})"});
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("ground_state").at("id") == "1123");
  CHECK(j.at("verification").at("passed") == true);
}

TEST_CASE("peierls report") {
  const auto r = invoke({"peierls", "--j1=-1", "--j2=1", "--trials", "100"});
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("lambda0") == "1/2");
  CHECK(j.at("failures").empty());
  CHECK(j.at("trials") == 100);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(invoke({}).status == 2);
  CHECK(invoke({"ground-states"}).status == 2);
  CHECK(invoke({"ground-states", "--j1", "1/0", "--j2", "1"}).status == 2);
  CHECK(invoke({"ground-states", "--j1", "abc", "--j2", "1"}).status == 2);
  CHECK(invoke({"regions", "--grid", "4"}).status == 2);
  CHECK(invoke({"regions", "--grid", "5", "--range", "0"}).status == 2);
  CHECK(invoke({"extend", "--ball", "{not json"}).status == 2);
  CHECK(invoke({"extend", "--ball", R"({"k":1,"center":1,"leaves":[1,2]})"}).status == 2);
  CHECK(invoke({"peierls", "--j1", "0", "--j2", "0"}).status == 2);
  CHECK(invoke({"--k", "0", "classes"}).status == 2);
  CHECK(invoke({"frobnicate"}).status == 2);
}
