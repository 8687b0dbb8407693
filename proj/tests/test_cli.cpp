#include <doctest.h>

#include "commands.hpp"
#include "config.hpp"

#include <sheetcrystal/figure.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace sheetcrystal;
using namespace sheetcrystal::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sheetcrystal_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::map<std::string, std::string> summary(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) kv[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return kv;
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(SHEETCRYSTAL_TOOL) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("config parsing") {
  const auto c = parse_config("# crystal\nmode = canonical\nN = 3\nalpha = 2\na = 0.5 # spacing\n");
  CHECK(c.mode == Mode::canonical);
  CHECK(c.N == 3);
  CHECK(c.alpha == 2.0);
  CHECK(c.a == 0.5);
  CHECK(c.points == 2001);

  const auto s = parse_config("mode = sheets\nsheets = -1:2, 1:2\nwindow = -3,3\npoints = 11\n");
  REQUIRE(s.sheets.size() == 2);
  CHECK(s.sheets[1].position == 1.0);
  CHECK(s.window->second == 3.0);

  const auto q = parse_config("mode = quantum\ndeltas = -1:-1, 1:-1\noffsets = 0, -2, 0\n");
  CHECK(q.strengths == std::vector<double>{-1.0, -1.0});
  CHECK(q.offsets == std::vector<double>{0.0, -2.0, 0.0});

  CHECK_THROWS_AS(parse_config("mode = canonical\ncolour = red\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("mode = canonical\nN = 1\nN = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("mode = canonical\nsheets = 0:1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("mode = sheets\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("mode = canonical\npoints = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("mode = canonical\nwindow = 2,1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("mode = canonical\nalpha = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("mode = crystal\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("no equals sign\n"), ConfigError);
  try {
    parse_config("mode = canonical\ncolour = red\n");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("colour") != std::string::npos);
  }
}

TEST_CASE("unit files and lists") {
  const auto u = parse_units("hbar = 1\nmass = 1\neps0 = 4\na0 = 1\n");
  CHECK(u.V0() == doctest::Approx(0.5));
  CHECK_THROWS_AS(parse_units("hbar = 1\nmass = 1\neps0 = 1\na0 = 1\nV0 = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse_units("hbar = 1\nmass = 1\n"), ConfigError);
  CHECK(units_preset("atomic") == UnitSystem::atomic());
  CHECK_THROWS_AS(units_preset("si"), ConfigError);
  CHECK(parse_int_list("1:4") == std::vector<int>{1, 2, 3, 4});
  CHECK(parse_int_list("0,2,5") == std::vector<int>{0, 2, 5});
  CHECK(parse_real_list("0.5, 1") == std::vector<double>{0.5, 1.0});
  CHECK(parse_window("-2, 3") == std::pair{-2.0, 3.0});
}

TEST_CASE("solve canonical N=1") {
  const auto dir = scratch("solve1");
  ScenarioConfig cfg;
  cfg.N = 1;
  cfg.points = 101;
  std::ostringstream out, err;
  REQUIRE(cmd_solve(cfg, UnitSystem::atomic(), (dir / "s.csv").string(), out, err) == exit_ok);
  const auto kv = summary(out.str());
  CHECK(std::stod(kv.at("energy")) == -0.5);
  const double A = 1.0 / std::sqrt(2 * std::exp(-2.0) - std::exp(-4.0));
  CHECK(std::stod(kv.at("A")) == doctest::Approx(A).epsilon(1e-14));
  CHECK(std::stod(kv.at("A_exact")) == doctest::Approx(A).epsilon(1e-14));
  CHECK(std::stoi(kv.at("bound_state_count")) == 2);
  CHECK(std::stod(kv.at("oracle_energy")) == doctest::Approx(-0.5).epsilon(1e-10));

  std::vector<std::string> header;
  const auto rows = parse_numeric_csv(slurp(dir / "s.csv"), &header);
  CHECK(header == std::vector<std::string>{"z", "V", "psi", "U_region"});
  REQUIRE(rows.size() == 101);
  CHECK(rows.front()[0] == -5.0);
  CHECK(rows.back()[0] == 5.0);
  for (const auto& r : rows) {
    CHECK(r[2] > 0.0);
    CHECK(r[3] == 0.0);
  }
}

TEST_CASE("solve canonical N=0 expectation values") {
  const auto dir = scratch("solve0");
  ScenarioConfig cfg;
  cfg.N = 0;
  std::ostringstream out, err;
  REQUIRE(cmd_solve(cfg, UnitSystem::atomic(), (dir / "s.csv").string(), out, err) == exit_ok);
  const auto kv = summary(out.str());
  CHECK(std::stod(kv.at("U_exp")) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::stod(kv.at("T_exp")) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::stod(kv.at("A")) == 1.0);
}

TEST_CASE("solve sheets and quantum modes") {
  const auto dir = scratch("solvemodes");
  std::ostringstream out, err;
  const auto sheets = parse_config("mode = sheets\nsheets = -1:2, 1:2\npoints = 41\n");
  REQUIRE(cmd_solve(sheets, UnitSystem::atomic(), (dir / "a.csv").string(), out, err) == exit_ok);
  auto kv = summary(out.str());
  CHECK(std::stod(kv.at("energy")) == -2.0);
  CHECK(std::stod(kv.at("U_exp")) + std::stod(kv.at("T_exp")) == doctest::Approx(-2.0).epsilon(1e-10));
  const auto rows = parse_numeric_csv(slurp(dir / "a.csv"));
  for (const auto& r : rows) {
    if (std::abs(r[0]) < 1.0) CHECK(r[3] == -2.0);
    if (std::abs(r[0]) > 1.0) CHECK(r[3] == 0.0);
  }

  out.str("");
  const auto quantum = parse_config("mode = quantum\ndeltas = -1:-1, 1:-1\noffsets = 0, -2, 0\n");
  REQUIRE(cmd_solve(quantum, UnitSystem::atomic(), (dir / "b.csv").string(), out, err) == exit_ok);
  kv = summary(out.str());
  CHECK(std::abs(std::stod(kv.at("energy")) + 2.0) < 1e-8);
  std::vector<std::string> header;
  const auto text = slurp(dir / "b.csv");
  CHECK(text.rfind("z,V,psi,U_region\n", 0) == 0);
}

TEST_CASE("solve rejects bad input with exit 1") {
  const auto dir = scratch("solvebad");
  std::ostringstream out, err;
  const auto neg = parse_config("mode = sheets\nsheets = -1:1, 1:-2\n");
  CHECK(cmd_solve(neg, UnitSystem::atomic(), (dir / "x.csv").string(), out, err) == exit_input);
  CHECK(err.str().find("not normalizable") != std::string::npos);

  err.str("");
  const auto repulsive = parse_config("mode = quantum\ndeltas = 0:1\n");
  CHECK(cmd_solve(repulsive, UnitSystem::atomic(), (dir / "y.csv").string(), out, err) == exit_input);

  ScenarioConfig cfg;
  cfg.N = 1;
  CHECK(cmd_solve(cfg, UnitSystem::atomic(), (dir / "missing" / "z.csv").string(), out, err) ==
        exit_input);
}

TEST_CASE("figure files") {
  const auto dir = scratch("figure");
  std::ostringstream out, err;
  REQUIRE(cmd_figure({1, 2, 3, 4}, 1.0, dir.string(), 2001, out, err) == exit_ok);
  for (int N = 1; N <= 4; ++N) {
    std::vector<std::string> header;
    const auto rows = parse_numeric_csv(slurp(dir / ("psi_N" + std::to_string(N) + ".csv")), &header);
    CHECK(header == std::vector<std::string>{"z", "psi"});
    REQUIRE(rows.size() == 2001);
    CHECK(rows.front()[0] == -(N + 4));
    CHECK(rows.back()[0] == N + 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i][1] > 0.0);
      CHECK(rows[i][0] == -rows[rows.size() - 1 - i][0]);
      CHECK(rows[i][1] == doctest::Approx(rows[rows.size() - 1 - i][1]).epsilon(1e-14));
    }
  }
  const auto n1 = parse_numeric_csv(slurp(dir / "psi_N1.csv"));
  // grid step 0.005, so z = 0 and z = +-1 are samples
  CHECK(n1[1000][0] == 0.0);
  CHECK(std::abs(n1[1000][1] - 0.2694047) < 1e-6);
  CHECK(std::abs(n1[1200][1] - 0.7323179) < 1e-6);
  CHECK(std::abs(n1[800][1] - 0.7323179) < 1e-6);
}

TEST_CASE("figure rejects bad input") {
  std::ostringstream out, err;
  CHECK(cmd_figure({0}, 1.0, scratch("fig0").string(), 11, out, err) == exit_input);
  CHECK(cmd_figure({1}, -1.0, scratch("fig1").string(), 11, out, err) == exit_input);
  const auto file = scratch("figfile") / "plain";
  std::ofstream(file) << "x";
  CHECK(cmd_figure({1}, 1.0, (file / "sub").string(), 11, out, err) == exit_input);
}

TEST_CASE("sweep output") {
  const SweepGrid grid{{4, 0, 2, 1, 3}, {1.0}, {1.0}};
  const auto text = sweep_csv(grid, UnitSystem::atomic(), 1);
  std::vector<std::string> header;
  const auto rows = parse_numeric_csv(text, &header);
  CHECK(header == std::vector<std::string>{"N", "alpha", "a", "E", "A", "U_exp", "T_exp", "count",
                                           "closed_vs_oracle_resid"});
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i][0] == static_cast<double>(i));
    CHECK(rows[i][3] == -0.5);
  }
  CHECK(rows[2][5] == doctest::Approx(-2.729329).epsilon(1e-6));
  // the published normalization tracks the oracle only up to N = 1
  CHECK(rows[0][8] < 1e-8);
  CHECK(rows[1][8] < 1e-8);
  CHECK(rows[2][8] > 1e-3);

  CHECK(sweep_csv(grid, UnitSystem::atomic(), 4) == text);
  CHECK(sweep_csv(grid, UnitSystem::atomic(), 1) == text);

  const SweepGrid multi{{1, 0}, {2.0, 0.5}, {1.0, 0.5}};
  const auto m = parse_numeric_csv(sweep_csv(multi, UnitSystem::atomic(), 3));
  REQUIRE(m.size() == 8);
  for (std::size_t i = 1; i < m.size(); ++i) {
    const auto key = [](const std::vector<double>& r) { return std::tuple(r[0], r[1], r[2]); };
    CHECK(key(m[i - 1]) < key(m[i]));
  }

  std::ostringstream csv, err;
  CHECK(cmd_sweep({{}, {1.0}, {1.0}}, UnitSystem::atomic(), 0, csv, err) == exit_input);
  CHECK(cmd_sweep({{1}, {-1.0}, {1.0}}, UnitSystem::atomic(), 0, csv, err) == exit_input);
}

TEST_CASE("thread count from the environment") {
  ::setenv("SHEETCRYSTAL_THREADS", "3", 1);
  CHECK(threads_from_env() == 3);
  ::setenv("SHEETCRYSTAL_THREADS", "many", 1);
  CHECK(threads_from_env() == 0);
  ::unsetenv("SHEETCRYSTAL_THREADS");
  CHECK(threads_from_env() == 0);
}

TEST_CASE("command-line exit codes") {
  const auto dir = scratch("tool");
  {
    std::ofstream(dir / "bad.cfg") << "mode = canonical\nflavour = x\n";
    std::ofstream(dir / "neg.cfg") << "mode = sheets\nsheets = 0:-1\n";
    std::ofstream(dir / "ok.cfg") << "mode = canonical\nN = 2\n";
  }
  CHECK(run_tool("solve --config " + (dir / "bad.cfg").string()) == 1);
  CHECK(run_tool("solve --config " + (dir / "neg.cfg").string()) == 1);
  CHECK(run_tool("solve --config " + (dir / "ok.cfg").string() + " --out " +
                 (dir / "ok.csv").string()) == 0);
  CHECK(fs::exists(dir / "ok.csv"));
  CHECK(run_tool("solve") == 1);
  CHECK(run_tool("verify --depth medium") == 1);
  CHECK(run_tool("figure --n-values 1,2 --out " + (dir / "fig").string()) == 0);
  CHECK(fs::exists(dir / "fig" / "psi_N2.csv"));
  CHECK(run_tool("sweep --N 0:1 --out " + (dir / "sweep.csv").string()) == 0);
  const std::string first = slurp(dir / "sweep.csv");
  CHECK(run_tool("sweep --N 0:1 --out " + (dir / "sweep.csv").string()) == 0);
  CHECK(slurp(dir / "sweep.csv") == first);
  // the published closed forms fail criteria 3, 4 and 7
  CHECK(run_tool("verify --depth quick") == 2);
}
