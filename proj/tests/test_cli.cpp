#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "radsupp/cli.hpp"

using namespace radsupp;

namespace {

CommandResult run(std::vector<std::string> args) { return run_cli(args); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check exit codes") {
    const auto tri = run({"check", "1 2; 2 3; 1 3", "--json"});
    CHECK(tri.exit_code() == 1);
    CHECK(tri.payload["kind"] == "verdict");
    CHECK(tri.payload["radical_support"] == false);
    CHECK(tri.payload.contains("cycle"));

    const auto disjoint = run({"check", "1; 2; 3"});
    CHECK(disjoint.exit_code() == 0);
    CHECK(disjoint.output().find("radical support") != std::string::npos);

    CHECK(run({"check", "1 2; 2 3; 3 4"}).exit_code() == 0);
  }

  TEST_CASE("parse errors carry a position") {
    const auto bad = run({"check", "1 2;; 3", "--json"});
    CHECK(bad.exit_code() == 2);
    CHECK(bad.payload["kind"] == "error");
    CHECK(bad.diagnostics.find("4") != std::string::npos);
    CHECK(run({"check"}).exit_code() == 2);
    CHECK(run({"frobnicate"}).exit_code() == 2);
    CHECK(run({}).exit_code() == 2);
  }

  TEST_CASE("input from a file and explicit n") {
    const std::string path = "radsupp_cli_test_input.txt";
    {
      std::ofstream out(path);
      out << "1 2; 2 3\n";
    }
    const auto r = run({"check", "--file", path, "--n", "5", "--json"});
    std::remove(path.c_str());
    CHECK(r.exit_code() == 0);
    CHECK(r.payload["support"]["n"] == 5);
    CHECK(run({"check", "--file", "does/not/exist"}).exit_code() == 2);
  }

  TEST_CASE("witness command") {
    const auto tri = run({"witness", "1 2; 2 3; 1 3", "--json", "--verify-fields", "F2,Fp:32003"});
    CHECK(tri.exit_code() == 0);
    CHECK(tri.payload["kind"] == "witness");
    CHECK(tri.payload["generators"].size() == 3);
    CHECK(tri.payload["verification"]["witness_outside"] == true);
    CHECK(tri.payload["verification"]["square_inside"] == true);
    CHECK(tri.payload["reverification"].size() == 2);

    const auto pair = run({"witness", "1 2; 1 2", "--json", "--field", "F2"});
    CHECK(pair.exit_code() == 0);
    CHECK(pair.payload["generators"].size() == 2);
    CHECK(pair.payload["ring"]["field"] == "Fp(2)");

    const auto path = run({"witness", "1 2; 2 3"});
    CHECK(path.exit_code() == 2);
    CHECK(path.diagnostics.find("no witness exists") != std::string::npos);

    CHECK(run({"witness", "1 2; 1 2", "--field", "Fp:10"}).exit_code() == 2);
  }

  TEST_CASE("regseq command") {
    const auto r = run({"regseq", "1 2; 1 3", "--m", "2,1,1", "--json"});
    CHECK(r.exit_code() == 0);
    CHECK(r.payload["monomials"] == Json::array({"x[1,1]*x[1,2]", "x[1,3]*x[2,1]"}));
    CHECK(run({"regseq", "1"}).exit_code() == 0);
    const auto bad = run({"regseq", "1; 1", "--m", "1", "--json"});
    CHECK(bad.exit_code() == 2);
    CHECK(bad.payload["label"] == 1);
    CHECK(run({"regseq", "1; 1", "--m", "1,x"}).exit_code() == 2);
  }

  TEST_CASE("cs-cert command") {
    const auto r = run({"cs-cert", "1 2; 2 3", "--json"});
    CHECK(r.exit_code() == 0);
    CHECK(r.payload["generator_count"] == 4);
    CHECK(r.payload["identity_holds"] == true);
    CHECK(run({"cs-cert", "1", "--json"}).payload["generator_count"] == 1);
    const auto tri = run({"cs-cert", "1 2; 2 3; 1 3", "--json"});
    CHECK(tri.exit_code() == 1);
    CHECK(tri.payload.contains("cycle"));
  }

  TEST_CASE("trial command logs its seed") {
    const auto r = run({"trial", "1 2; 3", "--json"});
    CHECK(r.exit_code() == 0);
    CHECK(r.payload["seed"] == 1);
    CHECK(r.diagnostics.find("seed") != std::string::npos);
    const auto a = run({"trial", "1 2; 2 3", "--seed", "9", "--json"});
    const auto b = run({"trial", "1 2; 2 3", "--seed", "9", "--json"});
    CHECK(a.payload.dump() == b.payload.dump());
    CHECK(run({"trial", "1", "--seed", "abc"}).exit_code() == 2);
  }

  TEST_CASE("records replay byte for byte") {
    const std::vector<std::vector<std::string>> commands{
        {"check", "1 2; 2 3; 1 3", "--json"},
        {"check", "1 2; 1 3; 1 4", "--json"},
        {"witness", "1 2 4; 2 3; 1 3", "--json", "--verify-fields", "F2"},
        {"regseq", "1 2; 1 3", "--json"},
        {"cs-cert", "1 2; 2 3", "--json"},
        {"trial", "1 2; 2 3", "--seed", "5", "--json"},
    };
    for (const auto& args : commands) {
      CAPTURE(args[0]);
      const auto r = run(args);
      REQUIRE(r.exit_code() <= 1);
      const auto again = run({"verify", r.payload.dump()});
      CHECK(again.exit_code() == 0);
      CHECK(replay(r.payload).reproduced);
    }
  }

  TEST_CASE("tampered records are not reproduced") {
    auto trial = run({"trial", "1 2; 2 3", "--seed", "5", "--json"}).payload;
    trial["seed"] = 6;
    CHECK_FALSE(replay(trial).reproduced);
    CHECK(run({"verify", trial.dump()}).exit_code() == 1);

    auto witness = run({"witness", "1 2; 2 3; 1 3", "--json"}).payload;
    witness["witness"] = "x[1,1]";
    CHECK_FALSE(replay(witness).reproduced);

    CHECK(run({"verify", "{not json"}).exit_code() == 2);
    CHECK(run({"verify", R"({"schema": "radsupp/v0", "kind": "witness"})"}).exit_code() == 2);
  }

  TEST_CASE("small selftest") {
    const auto r = run({"selftest", "--max-s", "2", "--max-n", "2", "--json"});
    CHECK(r.exit_code() == 0);
    CHECK(r.payload["suites"].size() == 12);
    for (const auto& s : r.payload["suites"]) CHECK(s["passed"] == true);
    CHECK(run({"selftest", "--seed", "-4"}).exit_code() == 2);
    CHECK(run({"selftest", "--max-s", "40"}).exit_code() == 2);
    CHECK(run({"selftest", "--max-s", "2", "--max-n", "2", "--serial"}).exit_code() == 0);
  }
}
