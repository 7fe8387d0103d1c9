#ifndef HALFBEM_TOOLS_COMMANDS_HPP_
#define HALFBEM_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"
#include "halfbem/solver.hpp"

namespace halfbem::cli {

/// Observation points in input units: the configured grid is centered at
/// (z1, z2) and spans +-grid_extent * |z3|; a points_file overrides it.
SurfacePointSet observation_points(const RunConfig& cfg);

/// Cavity shape at unit scale (built-in sphere or OFF file).
TriangleMesh shape_mesh(const RunConfig& cfg);

/// Full boundary-element forward solve; u in input units.
std::vector<Vec3> run_forward(const RunConfig& cfg, const SurfacePointSet& points);

/// Leading-order point-source field. moment = "analytic-sphere" or "bem".
std::vector<Vec3> run_pointsource(const RunConfig& cfg, const SurfacePointSet& points,
                                  const std::string& moment, std::ostream& warnings);

std::vector<Vec3> run_mogi(const RunConfig& cfg, const SurfacePointSet& points);

void write_field_csv(const std::string& path, const SurfacePointSet& points,
                     const std::vector<Vec3>& field);

/// `moment` subcommand body: MI, the full tensor and the symmetry defect.
std::string moment_report(const RunConfig& cfg);

/// `validate` subcommand body. Prints one line per check; returns the
/// number of failed checks.
int run_validation(std::ostream& out);

}  // namespace halfbem::cli

#endif  // HALFBEM_TOOLS_COMMANDS_HPP_
