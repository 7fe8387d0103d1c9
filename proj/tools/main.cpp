#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "config.hpp"
#include "halfbem/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitMesh = 3;
constexpr int kExitSolver = 4;

int classify(const std::exception& e) {
  using namespace halfbem;
  if (dynamic_cast<const cli::ConfigError*>(&e)) return kExitConfig;
  if (dynamic_cast<const MeshOpen*>(&e) || dynamic_cast<const MeshInverted*>(&e) ||
      dynamic_cast<const MeshDegenerateFace*>(&e) || dynamic_cast<const MeshInvalid*>(&e) ||
      dynamic_cast<const MeshMismatch*>(&e) || dynamic_cast<const CavityTouchesSurface*>(&e)) {
    return kExitMesh;
  }
  return kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary-element and point-source surface deformation for a "
               "pressurized cavity in an elastic half-space"};
  app.require_subcommand(1);

  std::string config_path;
  std::string moment = "analytic-sphere";

  CLI::App* forward = app.add_subcommand("forward", "full boundary-element forward solve");
  forward->add_option("-c,--config", config_path, "run configuration file")->required();

  CLI::App* pointsource =
      app.add_subcommand("pointsource", "leading-order point-source field");
  pointsource->add_option("-c,--config", config_path, "run configuration file")->required();
  pointsource->add_option("--moment", moment, "moment tensor source")
      ->check(CLI::IsMember({"analytic-sphere", "bem"}));

  CLI::App* mogi_cmd = app.add_subcommand("mogi", "closed-form Mogi field");
  mogi_cmd->add_option("-c,--config", config_path, "run configuration file")->required();

  CLI::App* moment_cmd =
      app.add_subcommand("moment", "elastic moment tensor of the cavity shape");
  moment_cmd->add_option("-c,--config", config_path, "run configuration file")->required();

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "run the built-in validation harness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    using namespace halfbem::cli;
    if (*validate_cmd) {
      return run_validation(std::cout) == 0 ? 0 : 1;
    }

    const RunConfig cfg = parse_config_file(config_path);
    if (*moment_cmd) {
      std::cout << moment_report(cfg);
      return 0;
    }

    const halfbem::SurfacePointSet points = observation_points(cfg);
    std::vector<halfbem::Vec3> field;
    if (*forward) {
      field = run_forward(cfg, points);
    } else if (*pointsource) {
      field = run_pointsource(cfg, points, moment, std::cerr);
    } else if (*mogi_cmd) {
      field = run_mogi(cfg, points);
    }
    write_field_csv(cfg.output, points, field);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify(e);
  }
}
