#ifndef HALFBEM_TOOLS_CONFIG_HPP_
#define HALFBEM_TOOLS_CONFIG_HPP_

#include <optional>
#include <string>

#include "halfbem/errors.hpp"
#include "halfbem/moduli.hpp"
#include "halfbem/types.hpp"

namespace halfbem::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Flat `key = value` run configuration. Keys: lambda, mu, nu, cavity,
/// subdiv, mesh_file, z, epsilon, pressure, grid_nx, grid_ny, grid_extent,
/// points_file, output. Lines starting with '#' are comments.
struct RunConfig {
  // moduli: either lambda + mu or nu + mu
  std::optional<double> lambda;
  std::optional<double> nu;
  double mu = 1.0;

  std::string cavity = "sphere";  // "sphere" or "file"
  int subdiv = 3;
  std::string mesh_file;

  Vec3 z = Vec3(0, 0, -1);
  double epsilon = 0.0;
  double pressure = 1.0;

  int grid_nx = 21;
  int grid_ny = 21;
  double grid_extent = 5.0;     // half-width in units of |z3|
  std::string points_file;      // overrides the grid when set

  std::string output = "field.csv";

  bool operator==(const RunConfig&) const = default;

  ElasticModuli moduli() const;
  void validate() const;  // throws ConfigError
};

RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);
std::string serialize_config(const RunConfig& cfg);

/// Locale-independent shortest-precise rendering used across all file output.
std::string format_double(double v);

}  // namespace halfbem::cli

#endif  // HALFBEM_TOOLS_CONFIG_HPP_
