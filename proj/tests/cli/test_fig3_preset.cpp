// Full-resolution (201 x 201) reproduction of the J < 0 sweep through the CLI.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

TEST_CASE("negative-coupling sweep preset maximum") {
  const auto dir = std::filesystem::temp_directory_path() / "dal_fig3_preset";
  std::filesystem::create_directories(dir);
  const std::string out = (dir / "fig3.csv").string();
  std::ostringstream sink;
  REQUIRE(dal::cli::run({"sweep", "--preset", "fig3", "--out", out}, sink, sink) == 0);

  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "omega_c,j_c,negativity");
  double best[3] = {0.0, 0.0, -1.0};
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    double v[3];
    std::stringstream ls(line);
    std::string cell;
    for (double& x : v) {
      std::getline(ls, cell, ',');
      x = std::stod(cell);
    }
    if (v[2] > best[2]) std::copy(v, v + 3, best);
    ++rows;
  }
  CHECK(rows == 201 * 201);
  // Grid steps: 0.01 in omega_c, 0.005 in j_c.
  CHECK(std::abs(best[0] - 0.55) <= 0.01 + 1e-12);
  CHECK(std::abs(best[1] - 0.01) <= 0.005 + 1e-12);
  CHECK(std::abs(best[2] - 0.180) <= 0.005);
  std::filesystem::remove_all(dir);
}
