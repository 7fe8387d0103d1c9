#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "config.hpp"
#include "doctest.h"
#include "halfbem/off_io.hpp"

using namespace halfbem;
using namespace halfbem::cli;

namespace {

std::string g_binary;
std::string g_workdir;

int run_cli(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " > " + g_workdir + "/stdout.txt 2> " +
                          g_workdir + "/stderr.txt";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string base_config(const std::string& output, const std::string& extra = "") {
  return "nu = 0.25\nmu = 1\ncavity = sphere\nsubdiv = 2\nz = 0 0 -1\nepsilon = 0.05\n"
         "pressure = 1\ngrid_nx = 21\ngrid_ny = 21\ngrid_extent = 5\noutput = " +
         output + "\n" + extra;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("config round trip is the identity") {
  RunConfig cfg = parse_config(base_config("/tmp/x.csv"));
  const RunConfig again = parse_config(serialize_config(cfg));
  CHECK(again == cfg);

  cfg.lambda = 1.25;
  cfg.nu.reset();
  cfg.points_file = "pts.txt";
  cfg.mesh_file = "shape.off";
  cfg.cavity = "file";
  CHECK(parse_config(serialize_config(cfg)) == cfg);
}

TEST_CASE("config rejections") {
  CHECK_THROWS_AS(parse_config("nu = 0.25\nmu = 1\nz = 0 0 1\nepsilon = 0.1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("nu = 0.25\nmu = 1\nz = 0 0 -1\nepsilon = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("bogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("nu = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("nu = 0.25\nmu = 1\nz = 0 0 -1\nepsilon = 0.1\ngrid_nx = 0\n"),
                  ConfigError);
  // moduli: both lambda and nu is ambiguous
  const RunConfig both = parse_config("lambda = 1\nnu = 0.25\nmu = 1\nz = 0 0 -1\nepsilon = 1\n");
  CHECK_THROWS_AS(both.moduli(), ConfigError);
}

TEST_CASE("forward csv schema, symmetry and determinism") {
  const std::string out = g_workdir + "/forward.csv";
  spit(g_workdir + "/fw.cfg", base_config(out));
  REQUIRE(run_cli("forward -c " + g_workdir + "/fw.cfg") == 0);

  const std::string csv = slurp(out);
  CHECK(count_lines(csv) == 442);  // header plus 21*21 rows
  CHECK(csv.substr(0, 15) == "y1,y2,u1,u2,u3\n");
  CHECK(csv.find("\r") == std::string::npos);

  // epicenter row: horizontal components negligible against vertical
  std::istringstream lines(csv);
  std::string line;
  bool found = false;
  while (std::getline(lines, line)) {
    if (line.rfind("0,0,", 0) == 0) {
      double u1, u2, u3;
      std::sscanf(line.c_str(), "0,0,%lf,%lf,%lf", &u1, &u2, &u3);
      CHECK(std::abs(u1) <= 1e-3 * std::abs(u3));
      CHECK(std::abs(u2) <= 1e-3 * std::abs(u3));
      // within 5% of the closed-form value -0.75 eps^3
      CHECK(std::abs(u3 - (-0.75 * 0.05 * 0.05 * 0.05)) <= 0.05 * 0.75 * 0.05 * 0.05 * 0.05);
      found = true;
    }
  }
  CHECK(found);

  REQUIRE(run_cli("forward -c " + g_workdir + "/fw.cfg") == 0);
  CHECK(slurp(out) == csv);  // byte-identical rerun
}

TEST_CASE("pointsource with the analytic sphere moment equals mogi output") {
  const std::string out_ps = g_workdir + "/ps.csv";
  const std::string out_mg = g_workdir + "/mg.csv";
  spit(g_workdir + "/ps.cfg", base_config(out_ps));
  spit(g_workdir + "/mg.cfg", base_config(out_mg));
  REQUIRE(run_cli("pointsource -c " + g_workdir + "/ps.cfg --moment analytic-sphere") == 0);
  REQUIRE(run_cli("mogi -c " + g_workdir + "/mg.cfg") == 0);
  {
    // same closed form through two arithmetic routes
    std::istringstream a(slurp(out_ps)), b(slurp(out_mg));
    std::string la, lb;
    std::getline(a, la);
    std::getline(b, lb);
    while (std::getline(a, la) && std::getline(b, lb)) {
      double y1, y2, ua[3], ub[3];
      std::sscanf(la.c_str(), "%lf,%lf,%lf,%lf,%lf", &y1, &y2, &ua[0], &ua[1], &ua[2]);
      std::sscanf(lb.c_str(), "%lf,%lf,%lf,%lf,%lf", &y1, &y2, &ub[0], &ub[1], &ub[2]);
      const double diff = std::hypot(ua[0] - ub[0], ua[1] - ub[1], ua[2] - ub[2]);
      CHECK(diff <= 1e-10 * std::hypot(ub[0], ub[1], ub[2]));
    }
  }

  // bem moment on the subdiv-2 sphere stays within 2 percent of analytic
  REQUIRE(run_cli("pointsource -c " + g_workdir + "/ps.cfg --moment bem") == 0);
  std::istringstream a(slurp(out_ps)), b(slurp(out_mg));
  std::string la, lb;
  std::getline(a, la);
  std::getline(b, lb);
  double worst = 0.0;
  while (std::getline(a, la) && std::getline(b, lb)) {
    double y1, y2, ua[3], ub[3];
    std::sscanf(la.c_str(), "%lf,%lf,%lf,%lf,%lf", &y1, &y2, &ua[0], &ua[1], &ua[2]);
    std::sscanf(lb.c_str(), "%lf,%lf,%lf,%lf,%lf", &y1, &y2, &ub[0], &ub[1], &ub[2]);
    const double na = std::hypot(ua[0] - ub[0], ua[1] - ub[1], ua[2] - ub[2]);
    const double nb = std::hypot(ub[0], ub[1], ub[2]);
    worst = std::max(worst, na / nb);
  }
  CHECK(worst <= 0.03);  // subdiv 2; subdiv 3 is within 2 percent (unit suite)
}

TEST_CASE("moment subcommand prints the sphere identity contraction") {
  spit(g_workdir + "/mom.cfg", base_config(g_workdir + "/unused.csv"));
  REQUIRE(run_cli("moment -c " + g_workdir + "/mom.cfg") == 0);
  const std::string rep = slurp(g_workdir + "/stdout.txt");
  CHECK(rep.find("MI") != std::string::npos);
  CHECK(rep.find("minor symmetry defect") != std::string::npos);

  // first MI diagonal entry close to 2.25
  const auto pos = rep.find("MI");
  const auto line_start = rep.find("\n  ", pos) + 3;
  const double mi00 = std::atof(rep.c_str() + line_start);
  CHECK(std::abs(mi00 - 2.25) <= 0.07);
}

TEST_CASE("exit codes") {
  // 2: config parse error
  spit(g_workdir + "/bad.cfg", "epsilon = -1\n");
  CHECK(run_cli("forward -c " + g_workdir + "/bad.cfg") == 2);
  CHECK(run_cli("forward -c " + g_workdir + "/missing.cfg") == 2);
  CHECK(run_cli("forward") == 2);           // missing required option
  CHECK(run_cli("not-a-command") == 2);

  // 3: mesh error (shape file is an open surface)
  spit(g_workdir + "/open.off", "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
  spit(g_workdir + "/mesh.cfg",
       base_config(g_workdir + "/x.csv", "cavity = file\nmesh_file = " + g_workdir + "/open.off\n"));
  CHECK(run_cli("forward -c " + g_workdir + "/mesh.cfg") == 3);

  // 3: cavity reaching the surface
  spit(g_workdir + "/touch.cfg",
       "nu = 0.25\nmu = 1\ncavity = sphere\nsubdiv = 1\nz = 0 0 -0.5\nepsilon = 0.8\n"
       "output = " + g_workdir + "/x.csv\n");
  CHECK(run_cli("forward -c " + g_workdir + "/touch.cfg") == 3);
}

TEST_CASE("points file drives the observation set") {
  spit(g_workdir + "/pts.txt", "# y1 y2\n0 0\n1.5 -2\n");
  spit(g_workdir + "/pts.cfg",
       base_config(g_workdir + "/pts.csv", "points_file = " + g_workdir + "/pts.txt\n"));
  REQUIRE(run_cli("mogi -c " + g_workdir + "/pts.cfg") == 0);
  CHECK(count_lines(slurp(g_workdir + "/pts.csv")) == 3);  // header + 2 points
}

TEST_CASE("validate subcommand passes on a clean build") {
  REQUIRE(run_cli("validate") == 0);
  const std::string rep = slurp(g_workdir + "/stdout.txt");
  CHECK(rep.find("jump relations") != std::string::npos);
  CHECK(rep.find("traction-free surface") != std::string::npos);
  CHECK(rep.find("surface trace formulas") != std::string::npos);
  CHECK(rep.find("mogi comparison") != std::string::npos);
  CHECK(rep.find("convergence table") != std::string::npos);
  CHECK(rep.find("FAIL") == std::string::npos);
  CHECK(rep.find("all checks passed") != std::string::npos);
}

int main(int argc, char** argv) {
  doctest::Context context;
  // last non-doctest argument is the CLI binary under test
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--", 0) != 0) g_binary = arg;
  }
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-halfbem-binary>\n");
    return 1;
  }
  g_workdir = "/tmp/halfbem-cli-test";
  std::system(("mkdir -p " + g_workdir).c_str());
  context.applyCommandLine(argc, argv);
  return context.run();
}
