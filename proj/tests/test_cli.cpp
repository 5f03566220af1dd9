#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(BEHREND_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(BEHREND_TEST_DATA) + "/" + name; }

nlohmann::json result_of(const Run& r) {
  auto doc = nlohmann::json::parse(r.out);
  return doc.at("result");
}

}  // namespace

TEST_CASE("eval on the three axes") {
  auto r = run("behrend eval --ideal " + data("axes.ideal") + " --point 0,0,0");
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["result"]["value"] == -1);
  CHECK(doc["config"]["seed"] == 0);
  CHECK(doc["result"]["split"]["dominating"] == -3);
  CHECK(doc["result"]["split"]["other"] == 2);

  auto alias = run("eval --ideal " + data("axes.ideal") + " --point 1,0,0");
  CHECK(alias.code == 0);
  CHECK(result_of(alias)["value"] == -1);
}

TEST_CASE("eval on the embedded point, several points") {
  auto r = run("eval --ideal " + data("embedded.ideal") + " --point 0,0 --point 1,0 --point -3/2,0");
  REQUIRE(r.code == 0);
  auto res = result_of(r);
  REQUIRE(res.size() == 3);
  CHECK(res[0]["value"] == 1);
  CHECK(res[1]["value"] == -1);
  CHECK(res[2]["value"] == -1);
}

TEST_CASE("falsify exit codes and witnesses") {
  auto fat = run("falsify --ideal " + data("fatline.ideal"));
  CHECK(fat.code == 0);
  auto res = result_of(fat);
  CHECK(res["overall"] == "Behrend function is NOT constant");
  REQUIRE(res["witnesses"].size() == 1);
  CHECK(res["components"][0]["component"]["multiplicity"] == 2);

  auto axes = run("behrend falsify --ideal " + data("axes.ideal") + " --sign -1");
  CHECK(axes.code == 0);
  CHECK(result_of(axes)["overall"] == "necessary conditions hold");

  auto mixed = run("falsify --ideal " + data("plane_line.ideal"));
  CHECK(result_of(mixed)["overall"] == "Behrend function is NOT constant");

  CHECK(run("falsify --ideal " + data("axes.ideal") + " --sign 3").code == 1);
}

TEST_CASE("hilb subcommands") {
  auto scan = run("hilb parity-scan --n 4 --format csv");
  CHECK(scan.code == 0);
  int rows = 0;
  for (char c : scan.out) rows += c == '\n';
  CHECK(rows == 1 + 1 + 13);
  CHECK(scan.out.find("partition_id,n,tangent_dim,parity") != std::string::npos);
  CHECK(scan.out.find("false") == std::string::npos);

  auto json = result_of(run("hilb parity-scan --n 4 --jobs 2"));
  CHECK(json["count"] == 13);
  CHECK(json["violations"].empty());
  CHECK(json["max_tangent"] == 18);

  auto t = result_of(run("hilb tangent --ideal " + data("m2.ideal")));
  CHECK(t["tangent_dim"] == 18);
  CHECK(t["colength"] == 4);
  CHECK(t["parity_holds"] == true);

  auto en = result_of(run("hilb enumerate --n 2"));
  CHECK(en["count"] == 3);
  CHECK(en["partitions"][0] == nlohmann::json::parse("[[0,0,0],[0,0,1]]"));

  auto q = result_of(run("hilb quot-tangent --module " + data("quot_mixed.module")));
  CHECK(q["tangent_dim"] == 4);
  CHECK(q["rank"] == 2);
}

TEST_CASE("eu, cone, cycle and algebra commands") {
  auto eu = run("eu --variety " + data("fermat3.ideal") + " --point 0,0,0");
  CHECK(eu.code == 0);
  CHECK(result_of(eu)["value"] == -3);
  CHECK(result_of(eu)["rule"] == "plane-cone");

  auto cusp = result_of(run("eu --variety " + data("cusp.ideal") + " --point 0,0"));
  CHECK(cusp["value"] == 2);
  CHECK(cusp["rule"] == "curve-multiplicity");

  auto unsupported = run("eu --variety " + data("nodal_cone.ideal") + " --point 0,0,0");
  CHECK(unsupported.code == 2);
  CHECK(result_of(unsupported)["value"].is_null());

  auto asserted = run("eu --variety " + data("fermat3.ideal") + " --point 0,0,0 --assume-prime");
  CHECK(result_of(asserted)["primality_asserted"] == true);

  auto cone = result_of(run("cone --ideal " + data("embedded.ideal")));
  CHECK(cone["components"].size() == 2);

  auto cyc = result_of(run("cycle --ideal " + data("axes.ideal")));
  CHECK(cyc["terms"].size() == 4);

  auto gb = result_of(run("gb --ideal " + data("twisted.ideal") + " --order lex"));
  CHECK(gb["order"] == "lex");
  CHECK(gb["basis"].size() == 4);

  auto el = result_of(run("eliminate --ideal " + data("twisted.ideal") + " --vars x"));
  CHECK(el["ideal"] == nlohmann::json::parse("[\"y^3 - z^2\"]"));

  auto sat = result_of(run("saturate --ideal " + data("embedded.ideal") + " --by x"));
  CHECK(sat["ideal"] == nlohmann::json::parse("[\"y\"]"));

  auto dim = result_of(run("dim --ideal " + data("axes.ideal")));
  CHECK(dim["dimension"] == 1);
  CHECK(dim["hilbert_degree"] == "3");

  auto mc = result_of(run("mincomp --ideal " + data("fatline.ideal")));
  CHECK(mc[0]["multiplicity"] == 2);
}

TEST_CASE("input errors exit with 1") {
  CHECK(run("gb --ideal " + data("broken.ideal")).code == 1);
  CHECK(run("gb --ideal " + data("missing.ideal")).code == 1);
  CHECK(run("eval --ideal " + data("embedded.ideal") + " --point 1,1").code == 1);
  CHECK(run("eval --ideal " + data("embedded.ideal") + " --point 1,1,1").code == 1);
  CHECK(run("eu --variety " + data("embedded.ideal") + " --point 0,0").code == 1);
  CHECK(run("gb --ideal " + data("axes.ideal") + " --format yaml").code == 1);
  CHECK(run("gb --ideal " + data("axes.ideal") + " --order nonsense").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("").code == 1);
}

TEST_CASE("configuration and determinism") {
  auto a = run("hilb parity-scan --n 5 --jobs 1");
  auto b = run("hilb parity-scan --n 5 --jobs 4");
  CHECK(a.out == b.out);
  CHECK(run("cone --ideal " + data("axes.ideal")).out == run("cone --ideal " + data("axes.ideal")).out);

  auto cfg = run("hilb enumerate --n 6 --config " + data("small.json"));
  CHECK(cfg.code == 2);
  auto ok = run("hilb enumerate --n 5 --config " + data("small.json"));
  CHECK(nlohmann::json::parse(ok.out)["config"]["seed"] == 7);
  auto flag_wins = run("hilb enumerate --n 5 --seed 9 --config " + data("small.json"));
  CHECK(nlohmann::json::parse(flag_wins.out)["config"]["seed"] == 9);

  std::string env = "BEHREND_CONFIG=" + data("small.json") + " ";
  std::string cmd = env + BEHREND_CLI + " hilb enumerate --n 1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
  pclose(pipe);
  CHECK(nlohmann::json::parse(out)["config"]["seed"] == 7);

  auto modp = result_of(run("gb --ideal " + data("axes.ideal") + " --char 7"));
  CHECK(modp["basis"].size() == 3);
}
