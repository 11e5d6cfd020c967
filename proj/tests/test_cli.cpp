#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LINMONAD_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/linmonad_cli_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("validate accepts the gallery and reports a verdict") {
  auto r = run("validate gallery:dnoi");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("valid") != std::string::npos);
}

TEST_CASE("validate exits 2 on an invalid monad") {
  // dnoi with the last beta entry zeroed: common zero at [0:0:0:1]
  auto dnoi = run("gallery dnoi --json");
  REQUIRE(dnoi.exit_code == 0);
  auto j = nlohmann::json::parse(dnoi.out);
  j["beta"][0][3] = {"0", "0", "0", "0"};
  auto path = write_temp("invalid.json", j.dump());
  auto r = run("validate " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("invalid") != std::string::npos);
  auto rj = run("validate " + path + " --json");
  CHECK(rj.exit_code == 2);
  auto rep = nlohmann::json::parse(rj.out);
  CHECK(rep["beta_surjective"] == false);
  CHECK(rep["complex_ok"] == true);
}

TEST_CASE("usage and input errors exit 1") {
  CHECK(run("validate gallery:nope").exit_code == 1);
  CHECK(run("validate /tmp/linmonad_no_such_file.json").exit_code == 1);
  auto path = write_temp("garbage.json", "{broken");
  CHECK(run("validate " + path).exit_code == 1);
  CHECK(run("frobnicate").exit_code == 1);
  CHECK(run("cohomology gallery:dnoi").exit_code == 1);  // missing window flags
  CHECK(run("random -n 3 -v 1 -w 6 -u 1").exit_code == 1);  // seed is mandatory
}

TEST_CASE("cohomology table in JSON matches the known grid") {
  auto r = run("cohomology gallery:dnoi --kmin -4 --kmax 1 --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["h"] == nlohmann::json::parse(
                      "[[0,0,0,0,0,5],[0,0,0,1,0,0],[2,1,0,0,0,0],[2,0,0,0,0,0]]"));
  CHECK(j["chi"] == nlohmann::json::parse("[0,1,0,-1,0,5]"));
  CHECK(j["charge"] == 1);
}

TEST_CASE("pretty and JSON modes report the same classification numbers") {
  auto pretty = run("classify gallery:dnoi");
  REQUIRE(pretty.exit_code == 0);
  CHECK(pretty.out.find("codim 2") != std::string::npos);
  CHECK(pretty.out.find("torsion-free-not-reflexive") != std::string::npos);
  auto j = nlohmann::json::parse(run("classify gallery:dnoi --json").out);
  CHECK(j["codim"] == 2);
  CHECK(j["class"] == "torsion-free-not-reflexive");
  CHECK(j["rank"] == 2);
}

TEST_CASE("existence queries") {
  auto no = run("exists -n 4 -v 1 -w 4 -u 1");
  CHECK(no.exit_code == 0);
  CHECK(no.out.find("no") == 0);
  auto yes = nlohmann::json::parse(run("exists -n 3 -v 1 -w 6 -u 1 --json").out);
  CHECK(yes["exists"] == true);
  CHECK(yes["expected_codim"] == "empty");
  auto pts = nlohmann::json::parse(run("exists -n 3 -v 1 -w 4 -u 1 --json").out);
  CHECK(pts["expected_codim"] == 3);
}

TEST_CASE("random sampling is reproducible and pipes back in") {
  auto a = run("random -n 3 -v 1 -w 6 -u 1 --seed 7 --json");
  auto b = run("random -n 3 -v 1 -w 6 -u 1 --seed 7 --json");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto path = write_temp("random.json", a.out);
  CHECK(run("validate " + path).exit_code == 0);
  CHECK(run("instanton " + path).exit_code == 0);
  auto r = run("random -n 2 -v 1 -w 2 -u 1 --seed 3 --max-tries 5");
  CHECK(r.exit_code == 2);  // exhausted tries
}

TEST_CASE("gallery, dual, restrict, and sum emit canonical monad documents") {
  auto g = run("gallery dnoi --json");
  REQUIRE(g.exit_code == 0);
  auto path = write_temp("dnoi.json", g.out);

  auto d = run("dual " + path + " --json");
  REQUIRE(d.exit_code == 0);
  auto dj = nlohmann::json::parse(d.out);
  CHECK(dj["v"] == 1);
  CHECK(dj["w"] == 4);

  auto rr = run("restrict " + path + " --var 3 --json");
  REQUIRE(rr.exit_code == 0);
  CHECK(nlohmann::json::parse(rr.out)["n"] == 2);

  auto s = run("sum " + path + " " + path + " --json");
  REQUIRE(s.exit_code == 0);
  auto sj = nlohmann::json::parse(s.out);
  CHECK(sj["v"] == 2);
  CHECK(sj["w"] == 8);

  // invalid restriction: a beta column that dies on the hyperplane
  std::string bad = R"({"n":2,"field":{"type":"Q"},"v":0,"w":1,"u":1,
    "alpha":[[]],"beta":[[["0","0","1"]]]})";
  auto bad_path = write_temp("bad_restrict.json", bad);
  CHECK(run("restrict " + bad_path + " --var 2").exit_code == 2);
}

TEST_CASE("probe and instanton exit zero and agree with the library verdicts") {
  auto p = nlohmann::json::parse(run("probe-stability gallery:nc-p3 --json").out);
  CHECK(p["stable_verdict"] == true);
  auto i = nlohmann::json::parse(run("instanton gallery:ex4 --json").out);
  CHECK(i["is_instanton"] == false);
  auto e = nlohmann::json::parse(run("euler gallery:dnoi -k -1 --json").out);
  CHECK(e["chi"] == -1);
  auto c = nlohmann::json::parse(run("chern gallery:ex4 --json").out);
  CHECK(c["coefficients"] == nlohmann::json::parse("[1,1,2,2,3]"));
}

TEST_CASE("nullcorrelation subcommand") {
  auto r = run("nullcorrelation -n 3 --seed 12 --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["v"] == 1);
  CHECK(j["w"] == 4);
  CHECK(j["u"] == 1);
  auto path = write_temp("nc.json", r.out);
  CHECK(run("validate " + path).exit_code == 0);
  CHECK(run("nullcorrelation -n 3").exit_code == 1);  // needs --seed or --matrix
}
