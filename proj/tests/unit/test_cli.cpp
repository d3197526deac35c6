#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "commands.hpp"

using ahp::cli::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ahp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string profile(const char* name) { return std::string(AHP_PROFILE_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "ahp_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("periods record") {
  const auto r = run({"--json", "periods", "--word", "abaab"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["subcommand"] == "periods");
  CHECK(j["result"]["periods"] == json::array({3, 5}));
  CHECK(j["certificate"] == "exact");
  CHECK(j["mu_provenance"] == "none");
  CHECK(j["seed"] == 1);
  CHECK(j.contains("wall_time_ms"));
  CHECK(j["inputs"]["word"] == "abaab");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 64);
  CHECK(run({"periods"}).code == 64);
  CHECK(run({"--backend", "free:0", "classify", "--g", "a"}).code == 64);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"commensurate", "--a", "ab", "--b", "ab"}).code == 0);
  CHECK(run({"commensurate", "--a", "ab", "--b", "abb"}).code == 2);
  CHECK(run({"theorem", "--a", "ab", "--b", "abb", "--sharp-free"}).code == 2);
  CHECK(run({"fine-wilf", "--word", "aba", "--p", "2", "--q", "3"}).code == 2);
  CHECK(run({"--profile", "/nonexistent.json", "constants"}).code == 1);
  CHECK(run({"--backend", "dehn:/nonexistent", "delta"}).code == 64);
}

TEST_CASE("profile echo and constants table") {
  const auto r = run({"--json", "--profile", profile("fixture.json"), "constants", "--r", "0", "2"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["mu_provenance"] == "user_supplied");
  CHECK(j["profile"]["mu"]["value"] == 1);
  CHECK(j["result"]["C"] == 180);
  CHECK(j["result"]["rows"][0]["K"] == 48);
  CHECK(j["result"]["rows"][0]["F"] == 163);
  CHECK(j["result"]["rows"][1]["F"] == 175);
  CHECK(j["result"]["rows"][0]["k"] == 2);
  const auto text = run({"--profile", profile("fixture.json"), "constants"});
  CHECK(text.out.find("mu provenance: user_supplied") != std::string::npos);
}

TEST_CASE("default mu is flagged as a heuristic") {
  const auto path = scratch("nomu.json");
  std::ofstream(path) << R"({"delta": "1/2", "tau": 2, "acyl": []})";
  const auto r = run({"--json", "--profile", path.string(), "constants"});
  const json j = json::parse(r.out);
  CHECK(j["mu_provenance"] == "default_heuristic");
  CHECK(j["profile"]["mu"]["value"] == 2);
}

TEST_CASE("threshold sweep emits CSV") {
  const auto r = run({"--backend", "zmzn:2,3", "--profile", profile("zmzn23.json"), "threshold", "--a", "xyxy", "--b", "yx",
                      "--y", "x", "--sweep", "0", "1", "2"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "r,periods,s,t,f,notes");
  std::string row;
  std::getline(in, row);
  CHECK(row.rfind("0,1,", 0) == 0);
}

TEST_CASE("batch preserves input order and replay reproduces it") {
  const auto input = scratch("batch.json");
  std::ofstream(input) << R"([
    {"argv": ["periods", "--word", "abaab"]},
    {"check": "theorem", "a": "ab", "b": "ab", "sharp_free": true},
    {"check": "commensurate", "a": "ab", "b": "abb"},
    {"argv": ["primroot", "--word", "abab"]},
    {"argv": ["periods"]},
    {"check": "lemma41", "b": "ab", "xq": "ab", "window": 5, "r": 2}
  ])";
  const auto records = scratch("records.json");
  const auto r = run({"batch", "--input", input.string(), "--jobs", "4", "--out", records.string()});
  CHECK(r.code == 1);
  std::ifstream rin(records);
  const json j = json::parse(rin);
  const auto& recs = j["result"]["records"];
  REQUIRE(recs.size() == 6);
  CHECK(recs[0]["subcommand"] == "periods");
  CHECK(recs[1]["result"]["witness_found"] == true);
  CHECK(recs[2]["exit_code"] == 2);
  CHECK(recs[3]["result"]["root"] == "ab");
  CHECK(recs[4]["exit_code"] == 64);
  CHECK(recs[5]["result"]["hypothesis_status"] == "conditional");
  CHECK(j["result"]["errors"] == 1);

  const auto replay = run({"replay", "--record", records.string()});
  CHECK(replay.code == 0);
  CHECK(json::parse(replay.out)["result"]["identical"] == true);
}

TEST_CASE("replay detects a changed result") {
  const auto path = scratch("one.json");
  {
    const auto r = run({"--json", "primroot", "--word", "ababab"});
    json j = json::parse(r.out);
    j["result"]["exponent"] = 2;
    std::ofstream(path) << j.dump();
  }
  const auto replay = run({"replay", "--record", path.string()});
  CHECK(replay.code == 1);
  const json j = json::parse(replay.out);
  CHECK(j["result"]["identical"] == false);
  CHECK(j["result"]["mismatches"][0]["field"] == "result");
}

TEST_CASE("seeded estimates are deterministic") {
  const std::string dehn = "dehn:" + std::string(AHP_PRESENTATION_DIR) + "/genus2.txt";
  const auto a = run({"--json", "--backend", dehn, "--seed", "5", "delta", "--radius", "2", "--max-triangles", "200"});
  const auto b = run({"--json", "--backend", dehn, "--seed", "5", "delta", "--radius", "2", "--max-triangles", "200"});
  CHECK(json::parse(a.out)["result"] == json::parse(b.out)["result"]);
  CHECK(json::parse(a.out)["result"]["sampled"] == true);
}

TEST_CASE("geometry subcommands carry certificates") {
  CHECK(json::parse(run({"--json", "stable-norm", "--g", "Bab"}).out)["certificate"] == "upper_bound");
  CHECK(json::parse(run({"--json", "--backend", "zmzn:2,3", "acyl-profile", "--eps", "4", "--radius", "6"}).out)["certificate"] ==
        "observed_on_ball");
  CHECK(json::parse(run({"--json", "--backend", "zmzn:2,3", "delta", "--radius", "4"}).out)["result"]["delta"] == "1/2");
  const auto line = json::parse(run({"--json", "line", "--a", "ab", "--n-max", "2"}).out);
  CHECK(line["result"]["label"] == "abab");
  CHECK(line["result"]["phase_indices"] == json::array({0, 2, 4}));
}

TEST_CASE("fourgon selfcheck") {
  const auto r = run({"--json", "--backend", "zmzn:2,3", "fourgon-selfcheck", "--count", "50"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["result"]["failures"] == 0);
}

}
