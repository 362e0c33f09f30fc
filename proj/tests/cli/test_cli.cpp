#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dal::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("dal_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(path(name)) << body;
    return path(name);
  }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json(const std::string& path) { return Json::parse(slurp(path)); }

std::vector<std::vector<double>> read_csv(const std::string& path, std::vector<std::string>* header) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  std::stringstream hs(line);
  for (std::string cell; std::getline(hs, cell, ',');) header->push_back(cell);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::stringstream ls(line);
    std::vector<double> row;
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

const char* kOptimalSteady = R"({"command": "steady",
  "params": {"omega_c": -0.74, "j": -0.31, "j_c": 0.01, "gamma": 0.001, "gamma_c": 0.03}})";

}  // namespace

TEST_CASE("help, version and presets listing") {
  const auto help = invoke({"--help"});
  CHECK(help.code == 0);
  for (const char* cmd : {"steady", "sweep", "scan", "dynamics", "optimize", "analytic2q"}) {
    CHECK(help.out.find(cmd) != std::string::npos);
  }
  CHECK(invoke({"--version"}).code == 0);
  CHECK(invoke({}).code == dal::cli::kConfigError);
  CHECK(invoke({"frobnicate"}).code == dal::cli::kConfigError);

  const auto list = invoke({"presets"});
  for (const char* name : {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "opt"}) {
    CHECK(list.out.find(std::string(name) + "\n") != std::string::npos);
  }
  CHECK(invoke({"presets", "nope"}).code == dal::cli::kConfigError);
}

TEST_CASE("every preset validates against its own subcommand") {
  for (auto name : dal::cli::preset_names()) {
    const Json cfg = Json::parse(*dal::cli::preset(name));
    const std::string cmd = cfg["command"];
    const auto r = invoke({cmd, "--preset", std::string(name), "--dry-run"});
    CAPTURE(name);
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["command"] == cmd);
    const std::string other = cmd == "steady" ? "sweep" : "steady";
    CHECK(invoke({other, "--preset", std::string(name), "--dry-run"}).code ==
          dal::cli::kConfigError);
  }
}

TEST_CASE("steady: reference point, trivial point and output schema") {
  Scratch s;
  const auto cfg = s.write("opt.json", kOptimalSteady);
  REQUIRE(invoke({"steady", "--config", cfg, "--out", s.path("opt_out.json")}).code == 0);
  const Json r = read_json(s.path("opt_out.json"));
  CHECK(std::abs(r["negativity"].get<double>() - 0.413) <= 0.005);
  for (const char* key : {"negativity", "residual", "gap", "min_eigenvalue"}) {
    CHECK(r.contains(key));
  }
  CHECK(r["fidelities"].size() == 8);
  CHECK(r["eigenenergies"].size() == 8);
  CHECK(fs::exists(s.path("opt_out.manifest.json")));

  const auto zero = s.write("zero.json", R"({"params": {"omega_c": 0.3, "j": 0, "j_c": 0,
      "gamma": 0.001, "gamma_c": 0.001}})");
  REQUIRE(invoke({"steady", "--config", zero, "--out", s.path("zero_out.json")}).code == 0);
  CHECK(read_json(s.path("zero_out.json"))["negativity"].get<double>() == 0.0);
}

TEST_CASE("config errors exit 2 and write nothing") {
  Scratch s;
  const std::string out = s.path("never.json");
  auto rejected = [&](const std::string& body, const std::string& needle) {
    const auto cfg = s.write("bad.json", body);
    const auto r = invoke({"steady", "--config", cfg, "--out", out});
    CHECK(r.code == dal::cli::kConfigError);
    CHECK(r.err.find(needle) != std::string::npos);
    CHECK_FALSE(fs::exists(out));
  };
  rejected("{not json", "malformed JSON");
  rejected(R"({"params": {"omega_c": 0, "j": 0, "j_c": 0, "gamma": 0.001}})", "gamma_c");
  rejected(R"({"params": {"omega_c": 0, "j": 0, "j_c": 0, "gamma": 0.001, "gamma_c": 0.001,
              "beta": 1}})",
           "beta");
  rejected(R"({"params": {"omega_c": 0, "j": 0, "j_c": 0, "gamma": 0.001, "gamma_c": 0.001},
              "extra": true})",
           "extra");
  rejected(R"({"params": {"omega_c": 0, "j": 0, "j_c": 0, "gamma": 0, "gamma_c": 0.001}})",
           "positive");
  rejected(R"({"command": "sweep"})", "subcommand");

  CHECK(invoke({"steady", "--config", s.path("missing.json"), "--out", out}).code ==
        dal::cli::kConfigError);
  CHECK(invoke({"steady", "--preset", "fig3", "--out", out}).code == dal::cli::kConfigError);
  CHECK(invoke({"steady", "--config", s.write("ok.json", kOptimalSteady)}).code ==
        dal::cli::kConfigError);
  CHECK(invoke({"steady", "--config", s.path("ok.json"), "--out", out, "--seed", "3"}).code ==
        dal::cli::kConfigError);
  CHECK(invoke({"sweep", "--config", s.write("ax.json", R"({"params": {"j": -0.62,
      "gamma": 0.001, "gamma_c": 0.001, "omega_c": 0.5}})"),
                "--out", out})
            .code == dal::cli::kConfigError);
  CHECK(invoke({"sweep", "--config", s.write("ax2.json", R"({"params": {"j": -0.62,
      "gamma": 0.001, "gamma_c": 0.001}, "j_c": {"min": 0, "max": 1, "points": 1}})"),
                "--out", out})
            .code == dal::cli::kConfigError);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("computation errors exit 1") {
  Scratch s;
  const auto cfg = s.write("scan.json", R"({"params": {"omega_c": 0.55, "j": -0.62, "j_c": 0.01,
      "gamma": 0.001}, "gamma_c": {"spacing": "list", "values": [0.3, 0.9]},
      "crossover": {"reference": 0.9, "bracket": [0.3, 0.9]}})");
  const auto r = invoke({"scan", "--config", cfg, "--out", s.path("scan.csv")});
  CHECK(r.code == dal::cli::kComputationError);
  CHECK(r.err.find("BracketInvalid") != std::string::npos);
  CHECK_FALSE(fs::exists(s.path("scan.csv")));
}

TEST_CASE("sweep output is independent of --jobs and its manifest reproduces it") {
  Scratch s;
  const auto cfg = s.write("sweep.json", R"({"command": "sweep",
      "params": {"j": -0.62, "gamma": 0.001, "gamma_c": 0.001},
      "omega_c": {"min": 0.45, "max": 0.65, "points": 5},
      "j_c": {"min": 0.0, "max": 0.02, "points": 3}})");
  REQUIRE(invoke({"sweep", "--config", cfg, "--out", s.path("a.csv")}).code == 0);
  REQUIRE(invoke({"sweep", "--config", cfg, "--out", s.path("b.csv"), "--jobs", "3"}).code == 0);
  CHECK(slurp(s.path("a.csv")) == slurp(s.path("b.csv")));

  const Json m = read_json(s.path("a.manifest.json"));
  CHECK(m["tool_version"] == "0.1.0");
  CHECK(m["command"] == "sweep");
  CHECK(m["wall_time_s"].get<double>() >= 0.0);
  CHECK(m["failures"].empty());
  CHECK(m["summary"]["max"]["negativity"].get<double>() > 0.17);
  REQUIRE(invoke({"sweep", "--config", s.path("a.manifest.json"), "--out", s.path("c.csv")})
              .code == 0);
  CHECK(slurp(s.path("a.csv")) == slurp(s.path("c.csv")));

  std::vector<std::string> header;
  const auto rows = read_csv(s.path("a.csv"), &header);
  CHECK(header == std::vector<std::string>{"omega_c", "j_c", "negativity"});
  CHECK(rows.size() == 15);
}

TEST_CASE("per-point failures land in the manifest") {
  Scratch s;
  const auto cfg = s.write("closed.json", R"({"params": {"j": -0.62, "gamma": 0, "gamma_c": 0.001},
      "omega_c": {"min": 0, "max": 1, "points": 2}, "j_c": {"min": 0, "max": 1, "points": 2}})");
  REQUIRE(invoke({"sweep", "--config", cfg, "--out", s.path("f.csv")}).code == 0);
  const Json m = read_json(s.path("f.manifest.json"));
  CHECK(m["failures"].size() == 4);
  CHECK(slurp(s.path("f.csv")).find("nan") != std::string::npos);
}

TEST_CASE("optimize: seed flag is recorded and the manifest replays it") {
  Scratch s;
  const auto cfg = s.write("opt.json", R"({"bounds": {"j": [-0.62, -0.62], "j_c": [0.01, 0.01],
      "omega_c": [0.55, 0.55], "gamma_c": [0.001, 0.2]}, "starts": 2, "seed": 5})");
  REQUIRE(invoke({"optimize", "--config", cfg, "--out", s.path("o.json"), "--seed", "9"}).code ==
          0);
  const Json m = read_json(s.path("o.manifest.json"));
  CHECK(m["config"]["seed"] == 9);
  const Json r = read_json(s.path("o.json"));
  CHECK(std::abs(r["best_negativity"].get<double>() - 0.203) <= 0.005);
  CHECK(r["history"].size() == 2);
  REQUIRE(invoke({"optimize", "--config", s.path("o.manifest.json"), "--out", s.path("p.json")})
              .code == 0);
  CHECK(slurp(s.path("o.json")) == slurp(s.path("p.json")));
}

TEST_CASE("scan preset: peak and crossover summary") {
  Scratch s;
  REQUIRE(invoke({"scan", "--preset", "fig4", "--out", s.path("fig4.csv")}).code == 0);
  const Json m = read_json(s.path("fig4.manifest.json"));
  CHECK(std::abs(m["summary"]["max"]["negativity"].get<double>() - 0.203) <= 0.005);
  CHECK(std::abs(m["summary"]["crossover_gamma_c"].get<double>() - 0.64) <= 0.02);
  std::vector<std::string> header;
  const auto rows = read_csv(s.path("fig4.csv"), &header);
  CHECK(header == std::vector<std::string>{"gamma_c", "negativity"});
  CHECK(rows.size() == 201);
}

TEST_CASE("dynamics presets: long-time fidelity argmax") {
  Scratch s;
  for (const auto& [name, want] : {std::pair{"fig5", 0}, std::pair{"fig6", 4}}) {
    const std::string out = s.path(std::string(name) + ".csv");
    REQUIRE(invoke({"dynamics", "--preset", name, "--out", out}).code == 0);
    std::vector<std::string> header;
    const auto rows = read_csv(out, &header);
    REQUIRE(header.size() == 11);
    CHECK(header[1] == "F_0");
    CHECK(header[9] == "trace_error");
    const auto& last = rows.back();
    const auto best = std::max_element(last.begin() + 1, last.begin() + 9) - (last.begin() + 1);
    CAPTURE(name);
    CHECK(best == want);
    for (const auto& row : rows) {
      CHECK(row[9] <= 1e-9);
      CHECK(row[10] >= -1e-8);
    }
  }
}

TEST_CASE("analytic2q to standard output") {
  const auto r = invoke({"analytic2q", "--out", "-"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(std::abs(j["j_star"].get<double>() - 0.618) <= 0.001);
  CHECK(std::abs(j["n_star"].get<double>() - 0.1545) <= 0.0005);
  CHECK(j["curve"].size() == 201);
}

TEST_CASE("DAL_LOG controls verbosity") {
  Scratch s;
  const auto cfg = s.write("opt.json", kOptimalSteady);
  ::setenv("DAL_LOG", "info", 1);
  const auto loud = invoke({"steady", "--config", cfg, "--out", s.path("a.json")});
  ::setenv("DAL_LOG", "off", 1);
  const auto quiet = invoke({"steady", "--config", cfg, "--out", s.path("b.json")});
  ::unsetenv("DAL_LOG");
  CHECK(loud.err.find("[dal info]") != std::string::npos);
  CHECK(quiet.err.empty());
}
