#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace blockarg;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(BLOCKARG_CLI) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return RunResult{WEXITSTATUS(status), out};
}

std::string fx(const std::string& name) { return testsupport::fixture_path(name); }

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("solve: court case without constraints") {
  auto r = run_cli("solve -i " + fx("fig_a.json") + " --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["extensions"] == json::array({json::array({"a_1", "a_4", "a_5", "a_7", "a_8"})}));
  REQUIRE(j["labellings"].size() == 1);
  REQUIRE(j["divergences"].empty());
  REQUIRE(j["semantics"]["grounded_is_complete"] == true);
}

TEST_CASE("solve: DSL input agrees with JSON input") {
  auto rj = run_cli("solve -i " + fx("fig_a.json") + " --format json");
  auto rd = run_cli("solve -i " + fx("fig_a.bba") + " --format json");
  REQUIRE(rj.code == 0);
  REQUIRE(rd.code == 0);
  REQUIRE(json::parse(rj.out)["extensions"] == json::parse(rd.out)["extensions"]);
}

TEST_CASE("solve: the detached box under G empties the extension") {
  auto r = run_cli("solve -i " + fx("fig_b.json") + " --constraints G --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["extensions"] == json::array({json::array()}));
}

TEST_CASE("solve: divergence note accompanies the S run on fixture D") {
  auto r = run_cli("solve -i " + fx("fig_d.json") + " --constraints S --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["divergences"].size() == 1);
  REQUIRE(j["extensions"] ==
          json::array({json::array({"a_0"}), json::array({"a_0", "a_2", "a_4"}),
                       json::array({"a_0", "a_3"})}));
  // the documented family differs from the computed one
  REQUIRE(j["divergences"][0]["documented"]["complete"] != j["semantics"]["complete"]);

  auto quiet = run_cli("solve -i " + fx("fig_d.json") + " --format json");
  REQUIRE(json::parse(quiet.out)["divergences"].empty());
}

TEST_CASE("solve: oracle engine agrees on a small fixture") {
  auto fast = run_cli("solve -i " + fx("fig_d.json") + " --constraints S --format json");
  auto slow = run_cli("solve -i " + fx("fig_d.json") + " --constraints S --engine oracle --format json");
  REQUIRE(slow.code == 0);
  REQUIRE(json::parse(fast.out)["labellings"] == json::parse(slow.out)["labellings"]);
}

TEST_CASE("solve: repair mode on the duplication chain, collapsed") {
  auto r = run_cli("solve -i " + fx("fig_f.json") +
                   " --constraints STAR --mode repair --collapse-eq --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["extensions"] == json::array({json::array({"a_5"})}));
  REQUIRE(j["divergences"].size() == 1);
}

TEST_CASE("check: exit reflects the violation report") {
  auto solved = run_cli("solve -i " + fx("fig_b.json") + " --format json");
  json j = json::parse(solved.out);
  auto lab_path = temp_file("blockarg_lab_b.json", j["labellings"][0].dump());
  auto dirty = run_cli("check -i " + fx("fig_b.json") + " --labelling " + lab_path +
                       " --constraints G --format json");
  REQUIRE(dirty.code == 1);
  json report = json::parse(dirty.out);
  REQUIRE(report.size() == 1);
  REQUIRE(report[0]["constraint"] == "G");
  REQUIRE(report[0]["pos"] == json::array({0, 2}));

  auto clean = run_cli("check -i " + fx("fig_b.json") + " --labelling " + lab_path +
                       " --constraints none");
  REQUIRE(clean.code == 0);

  auto solved_a = run_cli("solve -i " + fx("fig_a.json") + " --format json");
  auto lab_a = temp_file("blockarg_lab_a.json",
                         json::parse(solved_a.out)["labellings"][0].dump());
  auto all = run_cli("check -i " + fx("fig_a.json") + " --labelling " + lab_a +
                     " --constraints G,S,STAR");
  REQUIRE(all.code == 0);
}

TEST_CASE("flatten: text and json output") {
  auto text = run_cli("flatten -i " + fx("fig_a.json"));
  REQUIRE(text.code == 0);
  REQUIRE(std::count(text.out.begin(), text.out.end(), '\n') == 19);
  auto js = run_cli("flatten -i " + fx("fig_a.json") + " --format json");
  REQUIRE(json::parse(js.out).size() == 19);
}

TEST_CASE("encode-aba then solve the encoded document") {
  auto out_path = (std::filesystem::temp_directory_path() / "blockarg_enc.json").string();
  auto enc = run_cli("encode-aba -i " + fx("aba_mutual.json") + " -o " + out_path);
  REQUIRE(enc.code == 0);
  auto solved = run_cli("solve -i " + out_path + " --format json");
  REQUIRE(solved.code == 0);
  json j = json::parse(solved.out);
  REQUIRE(j["semantics"]["complete"].size() == 3);
}

TEST_CASE("dot export runs") {
  auto r = run_cli("dot -i " + fx("fig_a.json"));
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("subgraph cluster_") != std::string::npos);
}

TEST_CASE("exit codes: bad input and caps") {
  auto missing = run_cli("solve -i /nonexistent.json");
  REQUIRE(missing.code == 1);
  auto cyclic = temp_file("blockarg_cyclic.json",
                          R"({"definitions":{"b":{"block":{"args":["b"]}}},"root":"b"})");
  REQUIRE(run_cli("solve -i " + cyclic).code == 1);
  auto capped = run_cli("flatten -i " + fx("fig_a.json") + " --cap 5");
  REQUIRE(capped.code == 3);
}
