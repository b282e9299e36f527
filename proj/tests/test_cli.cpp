#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>

#include "forge/cli_runner.hpp"
#include "forge/json_io.hpp"

using namespace forge;
using nlohmann::json;

namespace {

const char* kS3 = R"({"points":3,"generators":[[1,0,2],[1,2,0]]})";
const char* kA5 = R"({"points":5,"generators":[[1,2,0,3,4],[1,2,3,4,0]]})";

json run_ok(const std::vector<std::string>& args) {
  auto r = run_command(args);
  INFO(r.output);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.output);
}

} // namespace

TEST_CASE("group info over inline JSON") {
  auto out = run_ok({"group", "info", "--json", kS3});
  CHECK(out["op"] == "group.info");
  CHECK(out["result"]["order"] == 6);
  CHECK(out["result"]["class_sizes"] == json::array({1, 2, 3}));
  CHECK(out["result"]["center_order"] == 1);
}

TEST_CASE("table-form group input") {
  auto out = run_ok({"group", "info", "--json",
                     R"({"table":[[0,1,2],[1,2,0],[2,0,1]]})"});
  CHECK(out["result"]["order"] == 3);
  CHECK(out["result"]["cyclic"] == true);
}

TEST_CASE("subgroup operations through the CLI") {
  json in;
  in["group"] = json::parse(kS3);
  in["subgroup"] = {{"elements", {0, 2, 5}}}; // the 3-cycles with identity
  auto out = run_ok({"group", "quotient", "--json", in.dump()});
  CHECK(out["result"]["order"] == 2);
}

TEST_CASE("descent supersolvable: A5 is not supersolvable") {
  json in;
  in["gamma"] = {{"points", 1}, {"generators", json::array()}};
  in["target"] = json::parse(kA5);
  in["reps"] = json::object();
  auto out = run_ok({"descent", "supersolvable", "--json", in.dump()});
  CHECK(out["result"]["supersolvable"] == false);
}

TEST_CASE("user-supplied chains are verified without requiring minimality") {
  json act;
  act["gamma"] = {{"points", 1}, {"generators", json::array()}};
  act["target"] = {{"table", {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}}};
  act["reps"] = json::object();
  json in;
  in["action"] = act;
  in["chain"] = {{0}, {0, 2}, {0, 1, 2, 3}}; // class 2, longer than minimal
  auto out = run_ok({"action", "verify-chain", "--json", in.dump()});
  CHECK(out["result"]["valid"] == true);
  CHECK(out["result"]["class"] == 2);

  json bad;
  bad["action"] = act;
  bad["action"]["target"] = {
      {"table", {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}}};
  bad["chain"] = {{0}, {0, 1, 2, 3}}; // V4 over the trivial subgroup: not cyclic
  auto r = run_command({"action", "verify-chain", "--json", bad.dump()});
  CHECK(r.exit_code == 2);
}

TEST_CASE("outer action JSON accepts generator-only reps") {
  // C2 acting on C4 by inversion, rep given only on the generator
  json in;
  in["gamma"] = {{"table", {{0, 1}, {1, 0}}}};
  in["target"] = {{"table", {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}}};
  in["reps"] = {{"1", {0, 3, 2, 1}}};
  auto out = run_ok({"descent", "supersolvable", "--json", in.dump()});
  CHECK(out["result"]["supersolvable"] == true);
  CHECK(out["result"]["class"] == 1);
}

TEST_CASE("extension splittings and exit codes") {
  json in;
  in["total"] = json::parse(kS3);
  in["kernel_elements"] = {0, 2, 5};
  auto out = run_ok({"ext", "splittings", "--json", in.dump()});
  CHECK(out["result"]["count"] == 3);

  SUBCASE("parse errors exit 1") {
    auto r = run_command({"ext", "splittings", "--json", "{not json"});
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.output).contains("error"));
  }
  SUBCASE("computation errors exit 2") {
    json bad;
    bad["total"] = json::parse(kS3);
    bad["kernel_elements"] = {0, 1}; // not normal
    auto r = run_command({"ext", "splittings", "--json", bad.dump()});
    CHECK(r.exit_code == 2);
    CHECK(json::parse(r.output)["error"]["code"] == "not_normal");
  }
  SUBCASE("budget exhaustion exits 3") {
    auto r = run_command({"group", "aut", "--json", kA5, "--budget", "1"});
    CHECK(r.exit_code == 3);
    CHECK(json::parse(r.output)["error"]["code"] == "budget_exceeded");
  }
}

TEST_CASE("lattice verbs") {
  json mod;
  mod["ambient_rank"] = 1;
  mod["relations"] = {{4}};
  mod["group"] = {{"points", 1}, {"generators", json::array()}};
  auto out = run_ok({"lattice", "resolve", "--json", mod.dump(), "--verify"});
  CHECK(out["result"]["seq1_exact"] == true);
  CHECK(out["result"]["verified"] == true);

  auto kum = run_ok({"lattice", "kummer", "--n", "6"});
  CHECK(kum["result"]["ok"] == true);

  json chain;
  chain["modules"] = json::array();
  json z;
  z["ambient_rank"] = 1;
  z["relations"] = json::array();
  z["group"] = {{"points", 1}, {"generators", json::array()}};
  json z4 = z;
  z4["relations"] = {{4}};
  chain["modules"] = {z, z, z4};
  chain["maps"] = {json::parse("[[4]]"), json::parse("[[1]]")};
  auto ver = run_ok({"lattice", "verify", "--json", chain.dump()});
  CHECK(ver["result"]["exact"] == true);
}

TEST_CASE("nf verbs") {
  auto sym = run_ok({"nf", "hilbert", "--a", "-1", "--b", "-1", "--place", "inf"});
  CHECK(sym["result"]["symbol"] == -1);

  auto pf = run_ok({"nf", "product-formula", "--a", "3/4", "--b", "-7"});
  CHECK(pf["result"]["holds"] == true);

  json nt;
  nt["modulus"] = {-2, 0, 1};
  nt["element"] = {1, 1};
  nt["theta"] = "product";
  auto val = run_ok({"nf", "n-theta", "--json", nt.dump()});
  CHECK(val["result"]["value"] == -1);

  auto ts = run_ok({"nf", "trace-square", "--alpha", "13/3"});
  CHECK(ts["result"]["trace_of_beta_squared"] == "13/3");

  json nfld;
  nfld["alphas"] = {-1};
  auto nf = run_ok({"nf", "norm-field", "--json", nfld.dump()});
  CHECK(nf["result"]["d"] == 2);
}

TEST_CASE("determinism: identical invocations produce identical bytes") {
  std::vector<std::vector<std::string>> battery = {
      {"group", "info", "--json", kA5},
      {"group", "normal-subgroups", "--json", kS3, "--verify"},
      {"lattice", "kummer", "--n", "8"},
      {"nf", "trace-square", "--alpha", "2"},
      {"nf", "hilbert", "--a", "6", "--b", "10", "--place", "3", "--verify"},
  };
  for (const auto& args : battery) {
    auto first = run_command(args);
    auto second = run_command(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
  }
}

TEST_CASE("file input matches inline input byte for byte") {
  const std::string path = "cli_input_tmp.json";
  {
    std::ofstream out(path);
    out << kA5;
  }
  auto from_file = run_command({"group", "info", "--input", path});
  auto inline_form = run_command({"group", "info", "--json", kA5});
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output == inline_form.output);
  std::remove(path.c_str());

  auto missing = run_command({"group", "info", "--input", "does_not_exist.json"});
  CHECK(missing.exit_code == 1);
}

TEST_CASE("pretty printing is valid JSON with the same content") {
  auto plain = run_command({"group", "info", "--json", kS3});
  auto pretty = run_command({"group", "info", "--json", kS3, "--pretty"});
  CHECK(json::parse(plain.output) == json::parse(pretty.output));
  CHECK(pretty.output.find('\n') != std::string::npos);
}

TEST_CASE("error output is a single structured document") {
  auto r = run_command({"nf", "trace-square", "--alpha", "-1", "--cyclic"});
  CHECK(r.exit_code == 2);
  json err = json::parse(r.output);
  CHECK(err["error"]["code"] == "obstruction");
  CHECK(err["error"]["message"].get<std::string>().find("not totally positive") !=
        std::string::npos);
}
