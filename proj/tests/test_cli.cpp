// Runs the mannheim executable end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(MANNHEIM_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(MANNHEIM_TEST_TMP) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& json) {
  const fs::path path = dir / "config.json";
  std::ofstream(path) << json;
  return path;
}

/// Columns by header name.
std::map<std::string, std::vector<double>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> names;
  std::stringstream hs(line);
  for (std::string f; std::getline(hs, f, ',');) names.push_back(f);
  std::map<std::string, std::vector<double>> cols;
  while (std::getline(in, line)) {
    std::stringstream ls(line);
    std::size_t k = 0;
    for (std::string f; std::getline(ls, f, ','); ++k) cols[names[k]].push_back(std::stod(f));
  }
  return cols;
}

std::vector<std::array<double, 3>> read_obj_vertices(const fs::path& path, std::size_t* faces) {
  std::ifstream in(path);
  std::vector<std::array<double, 3>> v;
  *faces = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("v ", 0) == 0) {
      std::array<double, 3> p;
      std::sscanf(line.c_str(), "v %lf %lf %lf", &p[0], &p[1], &p[2]);
      v.push_back(p);
    } else if (line.rfind("f ", 0) == 0) {
      ++*faces;
    }
  }
  return v;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

TEST(Cli, AnalyzeParaboloid) {
  const fs::path dir = scratch("analyze_hp");
  const auto cfg = write_config(dir, R"({"surface": {"builtin": "hyperbolic_paraboloid"}, "param_range": [-1, 1], "sample_count": 2001})");
  const CliRun r = run("analyze --config " + cfg.string() + " --out " + (dir / "out").string());
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const auto cols = read_csv(dir / "out" / "analysis.csv");
  EXPECT_EQ(cols.at("u").size(), 2001u);
  EXPECT_LT(max_abs(cols.at("gamma")), 1e-4);
  EXPECT_EQ(cols.size(), 23u);
}

TEST(Cli, AnalyzeConeIsDevelopable) {
  const fs::path dir = scratch("analyze_cone");
  const auto cfg = write_config(dir, R"({"surface": {"builtin": "cone", "alpha": 0.7853981633974483}, "output_dir": "out"})");
  const CliRun r = run("analyze --config " + cfg.string());
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_LT(max_abs(read_csv(dir / "out" / "analysis.csv").at("Delta")), 1e-8);
}

TEST(Cli, EvenSampleCountIsInputError) {
  const fs::path dir = scratch("even");
  const auto cfg = write_config(dir, R"({"surface": {"builtin": "cone"}, "sample_count": 2000})");
  const CliRun r = run("analyze --config " + cfg.string() + " --out " + dir.string());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("sample_count must be odd"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsAreInputErrors) {
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
  EXPECT_EQ(run("analyze --config /no/such/file.json").exit_code, 1);
  EXPECT_EQ(run("verify --tolerance nope=1").exit_code, 1);
  EXPECT_EQ(run("verify --help").exit_code, 0);
}

TEST(Cli, OffsetReproducesParaboloidStrictionLines) {
  const fs::path dir = scratch("offset_hp");
  const auto cfg = write_config(dir, R"({"surface": {"builtin": "hyperbolic_paraboloid"},
    "offsets": [{"mode": "constant_angle", "theta": 0, "theta_star": 5.656854249492381},
                {"mode": "constant_angle", "theta": 0.7853981633974483, "theta_star": 2.8284271247461903}]})");
  const CliRun r = run("offset --config " + cfg.string() + " --out " + (dir / "out").string());
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("n/a(guard)"), std::string::npos);
  EXPECT_NE(r.out.find("informational"), std::string::npos);
  const double shifts[] = {-4.0, -2.0};
  for (int k = 0; k < 2; ++k) {
    const auto cols = read_csv(dir / "out" / ("offset_" + std::to_string(k) + ".csv"));
    for (std::size_t i = 0; i < cols.at("u").size(); ++i) {
      const double u = cols.at("u")[i];
      EXPECT_NEAR(cols.at("c_x")[i], u / 2.0 + shifts[k], 1e-9);
      EXPECT_NEAR(cols.at("c_y")[i], u / 2.0 + shifts[k], 1e-9);
      EXPECT_NEAR(cols.at("c_z")[i], 0.0, 1e-9);
    }
  }
  std::ifstream compare(dir / "out" / "offset_0_compare.csv");
  std::string header, first;
  std::getline(compare, header);
  std::getline(compare, first);
  EXPECT_NE(first.find("n/a(guard)"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "out" / "offset_report.json"));
}

TEST(Cli, TheoremOffsetOnConePasses) {
  const fs::path dir = scratch("offset_cone");
  const auto cfg = write_config(dir, R"({"surface": {"builtin": "cone", "alpha": 0.7853981633974483},
    "offsets": [{"mode": "theorem_consistent", "c": 1.5707963267948966, "c_star": 0.5}]})");
  CliRun r = run("offset --config " + cfg.string() + " --out " + (dir / "out").string());
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;

  r = run("offset --config " + cfg.string() + " --out " + (dir / "tight").string() +
          " --tolerance offset_invariants=1e-12");
  EXPECT_EQ(r.exit_code, 2) << r.out;
}

TEST(Cli, DegenerateOffsetIsInputError) {
  const fs::path dir = scratch("offset_degenerate");
  const auto cfg = write_config(dir, R"({"surface": {"builtin": "cone"}, "offsets": [{"mode": "theorem_consistent", "c": 0, "c_star": 0}]})");
  const CliRun r = run("offset --config " + cfg.string() + " --out " + dir.string());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("degenerate"), std::string::npos) << r.out;
}

TEST(Cli, MeshGridAndTranslatedOffset) {
  const fs::path dir = scratch("mesh");
  const auto cfg = write_config(dir, R"({"surface": {"builtin": "hyperbolic_paraboloid"}, "sample_count": 101,
    "offsets": [{"mode": "constant_angle", "theta": 0, "theta_star": 5.656854249492381}]})");
  const CliRun r = run("mesh --config " + cfg.string() + " --out " + (dir / "out").string() + " --v-range -1 1 --v-count 2");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  std::size_t base_faces = 0, offset_faces = 0;
  const auto base = read_obj_vertices(dir / "out" / "base.obj", &base_faces);
  const auto off = read_obj_vertices(dir / "out" / "offset_0.obj", &offset_faces);
  EXPECT_EQ(base.size(), 202u);
  EXPECT_EQ(base_faces, 100u);
  ASSERT_EQ(off.size(), base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    EXPECT_NEAR(off[i][0] - base[i][0], -4.0, 1e-9);
    EXPECT_NEAR(off[i][1] - base[i][1], -4.0, 1e-9);
    EXPECT_NEAR(off[i][2] - base[i][2], 0.0, 1e-9);
  }
}

TEST(Cli, UnwritableOutputIsInputError) {
  const fs::path dir = scratch("unwritable");
  const auto cfg = write_config(dir, R"({"surface": {"builtin": "cone"}})");
  std::ofstream(dir / "blocker") << "file";
  EXPECT_EQ(run("mesh --config " + cfg.string() + " --out " + (dir / "blocker" / "sub").string()).exit_code, 1);
}

TEST(Cli, AnalyzeOutputRoundTrips) {
  const fs::path dir = scratch("roundtrip");
  const auto cfg = write_config(dir, R"({"surface": {"builtin": "hyperbolic_paraboloid"}, "output_dir": "first"})");
  ASSERT_EQ(run("analyze --config " + cfg.string()).exit_code, 0);
  const fs::path again = dir / "again";
  fs::create_directories(again);
  const auto cfg2 = write_config(again, R"({"surface": {"file": "../first/analysis.csv"}, "output_dir": "second"})");
  const CliRun r = run("analyze --config " + cfg2.string());
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("finite differences"), std::string::npos);
  const auto a = read_csv(dir / "first" / "analysis.csv");
  const auto b = read_csv(again / "second" / "analysis.csv");
  for (const char* col : {"Delta", "delta", "gamma"}) {
    for (std::size_t i = 2; i + 2 < a.at(col).size(); ++i) EXPECT_NEAR(a.at(col)[i], b.at(col)[i], 1e-4) << col;
  }
}

TEST(Cli, VerifyPassesDeterministically) {
  const auto start = std::chrono::steady_clock::now();
  const CliRun a = run("verify 2>/dev/null");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ASSERT_EQ(a.exit_code, 0) << a.out;
  EXPECT_LT(seconds, 10.0);
  EXPECT_NE(a.out.find("result: PASS"), std::string::npos);
  const CliRun b = run("verify 2>/dev/null");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyUnattainableToleranceFails) {
  const CliRun r = run("verify --tolerance frame_ode_sampled=1e-15");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("failing suites: ruled-surface"), std::string::npos) << r.out;
}

}  // namespace
