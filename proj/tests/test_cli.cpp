#include <doctest.h>

#include <random>

#include <json.hpp>

#include "cli.hpp"
#include "posat/posat.h"

using posat::cli::Command;
using posat::cli::parse_command;
using posat::cli::Report;
using posat::cli::run;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(POSAT_FIXTURES) + "/" + name; }

Report go(std::vector<std::string> args) { return run(args); }

}  // namespace

TEST_CASE("parse_command examples") {
  const Command s = parse_command({"search", "--n", "3", "--poset", "diamond-2", "--induced"});
  CHECK(s.verb == "search");
  CHECK(s.n == 3);
  CHECK(s.poset == "diamond-2");
  CHECK(s.induced);
  CHECK(s.symmetry);
  CHECK(s.theorem_pruning);

  const Command c = parse_command({"construct", "--name", "butterfly", "--n", "5"});
  CHECK(c.verb == "construct");
  CHECK(c.name == "butterfly");
  CHECK(c.n == 5);
  CHECK(c.verify);

  const Command flags = parse_command({"search", "--n", "4", "--poset", "N", "--weak", "--no-symmetry",
                                       "--no-theorem-pruning", "--threads", "3", "--max-size", "7"});
  CHECK_FALSE(flags.induced);
  CHECK_FALSE(flags.symmetry);
  CHECK_FALSE(flags.theorem_pruning);
  CHECK(flags.threads == 3);
  CHECK(flags.max_size == 7);

  const Command t = parse_command({"table", "--poset", "N", "--n-range", "3..6", "--induced", "--format", "csv"});
  CHECK(t.n_lo == 3);
  CHECK(t.n_hi == 6);
  CHECK(t.format == "csv");
}

TEST_CASE("usage errors name the offending flag") {
  auto message = [](std::vector<std::string> args) {
    try {
      parse_command(args);
    } catch (const posat::cli::UsageError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message({"search", "--n"}).find("--n") != std::string::npos);
  CHECK(message({"search", "--n", "3", "--poset", "N"}).find("--induced") != std::string::npos);
  CHECK(message({"search", "--n", "3", "--poset", "N", "--induced", "--weak"}).find("--") != std::string::npos);
  CHECK(message({"search", "--n", "3", "--poset", "N", "--induced", "--bogus"}).find("--bogus") !=
        std::string::npos);
  CHECK(message({"frobnicate"}).find("frobnicate") != std::string::npos);
  CHECK(message({"table", "--poset", "N", "--n-range", "6..3", "--induced"}).find("--n-range") != std::string::npos);
  CHECK(message({"table", "--poset", "N", "--n-range", "x", "--induced"}).find("--n-range") != std::string::npos);
  CHECK(message({"construct", "--name", "weaksat", "--n", "4"}).find("--target") != std::string::npos);
  CHECK(message({"construct", "--name", "spiral", "--n", "4"}).find("--name") != std::string::npos);
  CHECK(message({"poset"}).find("--name") != std::string::npos);
  CHECK_FALSE(message({}).empty());
}

TEST_CASE("exit code fixture matrix") {
  struct Row {
    std::vector<std::string> args;
    int exit;
  };
  const std::vector<Row> matrix{
      // success
      {{"poset", "--name", "N"}, 0},
      {{"poset", "--file", fixture("n_poset.json"), "--dot"}, 0},
      {{"search", "--n", "3", "--poset", "V-2", "--induced"}, 0},
      {{"search", "--n", "3", "--poset", fixture("n_poset.json"), "--induced"}, 0},
      {{"construct", "--name", "q-example", "--n", "5"}, 0},
      {{"construct", "--name", "weaksat", "--target", "butterfly", "--n", "4"}, 0},
      {{"sepgraph", "--family", fixture("q_family.json")}, 0},
      {{"bc", "--graph", fixture("k8.json")}, 0},
      {{"table", "--poset", "N", "--n-range", "3..6", "--induced"}, 0},
      {{"check", "--family", fixture("q_family.json"), "--poset", "Q", "--induced", "--assert", "saturated"}, 0},
      {{"check", "--family", fixture("maximal_chain.json"), "--poset", "antichain-2", "--induced", "--assert",
        "free"},
       0},
      {{"check", "--family", fixture("singleton.json"), "--poset", "V-2", "--weak"}, 0},
      {{"--help"}, 0},
      // property fails
      {{"check", "--family", fixture("singleton.json"), "--poset", "diamond-2", "--induced", "--assert",
        "saturated"},
       1},
      {{"check", "--family", fixture("maximal_chain.json"), "--poset", "chain-2", "--weak", "--assert", "saturated"},
       1},
      {{"check", "--family", fixture("maximal_chain.json"), "--poset", "chain-2", "--weak", "--assert", "free"}, 1},
      // usage
      {{"search", "--n"}, 2},
      {{"search", "--n", "3", "--poset", "V-2"}, 2},
      {{"search", "--n", "3", "--poset", "heptagon", "--induced"}, 2},
      {{"frobnicate"}, 2},
      {{"check", "--family", fixture("missing.json"), "--poset", "Q", "--induced"}, 2},
      {{"check", "--family", fixture("malformed.json"), "--poset", "Q", "--induced"}, 2},
      {{"check", "--family", fixture("unsorted_set.json"), "--poset", "Q", "--induced"}, 2},
      {{"poset", "--file", fixture("cyclic_poset.json")}, 2},
      {{"bc", "--graph", fixture("bad_edge.json")}, 2},
      {{"construct", "--name", "chains", "--n", "3"}, 2},
      {{"table", "--poset", "N", "--n-range", "3-6", "--induced"}, 2},
      // instance too large
      {{"search", "--n", "6", "--poset", "V-2", "--induced"}, 3},
      {{"search", "--n", "9", "--poset", "V-2", "--induced", "--max-n", "9"}, 3},
  };
  for (const auto& row : matrix) {
    const Report r = run(row.args);
    std::string joined;
    for (const auto& a : row.args) joined += a + " ";
    CAPTURE(joined);
    CAPTURE(r.human);
    CHECK(r.exit_code == row.exit);
  }
}

TEST_CASE("search report") {
  const Report r = go({"search", "--n", "3", "--poset", "V-2", "--induced"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.machine);
  CHECK(j["value"] == 4);
  CHECK(j["exhaustive"] == true);
  CHECK(j["poset"] == "V-2");
  CHECK(j["certificate"]["sets"].size() == 4);
  CHECK(r.human.find("value") != std::string::npos);
  CHECK(r.machine.find("wall") == std::string::npos);
  // Byte-stable across runs and thread counts.
  const Report again = go({"search", "--n", "3", "--poset", "V-2", "--induced", "--threads", "4"});
  CHECK(again.machine == r.machine);
}

TEST_CASE("check reports a witness") {
  const Report not_free = go({"check", "--family", fixture("maximal_chain.json"), "--poset", "chain-2", "--weak",
                              "--assert", "saturated"});
  const json j = json::parse(not_free.machine);
  CHECK(j["free"] == false);
  CHECK(j["embedding"]["map"].size() == 2);
  const Report unsat = go({"check", "--family", fixture("singleton.json"), "--poset", "diamond-2", "--induced"});
  const json k = json::parse(unsat.machine);
  CHECK(k["free"] == true);
  CHECK(k["saturated"] == false);
  CHECK_FALSE(k["witnesses"].empty());
}

TEST_CASE("table output formats") {
  const Report j = go({"table", "--poset", "N", "--n-range", "3..6", "--induced"});
  const json rows = json::parse(j.machine);
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(row["computed_or_construction"] == 2 * row["n"].get<int>());
    CHECK(row["computed_or_construction"].get<int>() >= row["uctp_bound"].get<int>());
  }
  const Report csv = go({"table", "--poset", "N", "--n-range", "3..4", "--induced", "--format", "csv"});
  CHECK(csv.machine.rfind("n,uctp_bound,paper_bound_low,paper_bound_high,computed_or_construction,source\n", 0) == 0);
  CHECK(csv.machine.find("3,2,2,6,6,construction:N") != std::string::npos);
  const Report text = go({"table", "--poset", "N", "--n-range", "3..4", "--induced", "--format", "text"});
  CHECK(text.machine.find("construction:N") != std::string::npos);
  const Report computed =
      go({"table", "--poset", "V-2", "--n-range", "2..4", "--induced", "--compute-up-to", "4", "--threads", "2"});
  for (const auto& row : json::parse(computed.machine)) {
    CHECK(row["source"] == "search");
    CHECK(row["computed_or_construction"] == row["n"].get<int>() + 1);
  }
}

TEST_CASE("bc and sepgraph") {
  const Report bc = go({"bc", "--graph", fixture("k8.json")});
  CHECK(json::parse(bc.machine)["value"] == 3);
  CHECK(json::parse(go({"bc", "--graph", fixture("path4.json")}).machine)["value"] == 2);
  const Report g = go({"sepgraph", "--family", fixture("q_family.json")});
  const json graph = json::parse(g.machine);
  CHECK(graph["n"] == 4);
  CHECK(graph["edges"].size() == 3);
  CHECK(go({"sepgraph", "--family", fixture("q_family.json"), "--dot"}).machine.find("--") != std::string::npos);
}

TEST_CASE("construct emits family and sidecar") {
  const Report r = go({"construct", "--name", "antichain", "--n", "6", "--ell", "3"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.machine);
  CHECK(j["family"]["sets"].size() == 17);
  CHECK(j["sidecar"]["expected_size"] == 17);
  CHECK(j["sidecar"]["verified"] == true);
  const Report skip = go({"construct", "--name", "chains", "--n", "12", "--k", "2", "--no-verify"});
  CHECK(skip.exit_code == 0);
  CHECK(json::parse(skip.machine)["sidecar"]["verified"] == false);
}

TEST_CASE("emitted JSON re-parses to equal values") {
  std::mt19937 rng(51);
  const std::vector<std::string> names{"chains", "antichain", "N", "butterfly", "diamond-interior", "q-example"};
  for (int t = 0; t < 30; ++t) {
    const std::string name = names[static_cast<std::size_t>(t) % names.size()];
    const int n = 5 + static_cast<int>(rng() % 4);
    std::vector<std::string> args{"construct", "--name", name, "--n", std::to_string(n), "--no-verify"};
    if (name == "chains") args.insert(args.end(), {"--k", std::to_string(1 + static_cast<int>(rng() % 3))});
    if (name == "antichain") args.insert(args.end(), {"--ell", "3"});
    const Report r = go(args);
    REQUIRE(r.exit_code == 0);
    const json family = json::parse(r.machine)["family"];
    posat_family* f = nullptr;
    REQUIRE(posat_family_from_json(family.dump().c_str(), &f) == POSAT_OK);
    char* back = nullptr;
    REQUIRE(posat_family_to_json(f, &back) == POSAT_OK);
    CHECK(json::parse(back) == family);
    posat_string_free(back);
    posat_family_free(f);
  }
  for (const char* p : {"V-2", "N", "butterfly", "Q", "diamond-3"}) {
    const Report r = go({"poset", "--name", p});
    posat_poset* parsed = nullptr;
    REQUIRE(posat_poset_from_json(r.machine.c_str(), &parsed) == POSAT_OK);
    char* again = nullptr;
    REQUIRE(posat_poset_to_json(parsed, &again) == POSAT_OK);
    CHECK(json::parse(again) == json::parse(r.machine));
    posat_string_free(again);
    posat_poset_free(parsed);
  }
  const Report bc = go({"bc", "--graph", fixture("k8.json")});
  CHECK(json::parse(bc.machine)["bicliques"].size() == 3);
}
