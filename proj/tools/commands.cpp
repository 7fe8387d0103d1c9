#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "halfbem/asymptotics.hpp"
#include "halfbem/kelvin.hpp"
#include "halfbem/layers.hpp"
#include "halfbem/mindlin.hpp"
#include "halfbem/off_io.hpp"

namespace halfbem::cli {

SurfacePointSet observation_points(const RunConfig& cfg) {
  SurfacePointSet pts;
  if (!cfg.points_file.empty()) {
    std::ifstream in(cfg.points_file);
    if (!in) throw ConfigError("cannot open points file: " + cfg.points_file);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream s(line);
      std::string first;
      if (!(s >> first) || first[0] == '#') continue;
      double y1 = 0, y2 = 0;
      std::istringstream reparse(line);
      if (!(reparse >> y1 >> y2) || !std::isfinite(y1) || !std::isfinite(y2)) {
        throw ConfigError("bad points file line: '" + line + "'");
      }
      pts.points.emplace_back(y1, y2);
    }
    if (pts.points.empty()) throw ConfigError("points file is empty");
    return pts;
  }

  const double half = cfg.grid_extent * std::abs(cfg.z.z());
  for (int iy = 0; iy < cfg.grid_ny; ++iy) {
    for (int ix = 0; ix < cfg.grid_nx; ++ix) {
      const double fx = cfg.grid_nx > 1 ? 2.0 * ix / (cfg.grid_nx - 1.0) - 1.0 : 0.0;
      const double fy = cfg.grid_ny > 1 ? 2.0 * iy / (cfg.grid_ny - 1.0) - 1.0 : 0.0;
      pts.points.emplace_back(cfg.z.x() + half * fx, cfg.z.y() + half * fy);
    }
  }
  return pts;
}

TriangleMesh shape_mesh(const RunConfig& cfg) {
  if (cfg.cavity == "file") {
    const TriangleMesh mesh = read_off_file(cfg.mesh_file);
    mesh_validate(mesh);
    return mesh;
  }
  return icosphere(cfg.subdiv);
}

std::vector<Vec3> run_forward(const RunConfig& cfg, const SurfacePointSet& points) {
  const ElasticModuli moduli = cfg.moduli();
  const TriangleMesh shape = shape_mesh(cfg);

  // Work in units of the depth: lengths scale by 1/d, displacements by d
  // on the way back out; the pressure is scale free.
  const double d = std::abs(cfg.z.z());
  const Vec3 z_hat = cfg.z / d;
  const double eps_hat = cfg.epsilon / d;

  const TriangleMesh cavity = place_cavity(shape, eps_hat, z_hat);
  const BoundaryField f = solve_trace(cavity, moduli, cfg.pressure);

  SurfacePointSet scaled;
  scaled.points.reserve(points.size());
  for (const auto& p : points.points) scaled.points.emplace_back(p / d);

  std::vector<Vec3> u = surface_displacement(cavity, moduli, cfg.pressure, f, scaled);
  for (auto& v : u) v *= d;
  return u;
}

std::vector<Vec3> run_pointsource(const RunConfig& cfg, const SurfacePointSet& points,
                                  const std::string& moment, std::ostream& warnings) {
  const ElasticModuli moduli = cfg.moduli();

  Mat3 mi;
  double volume = 0.0;
  double diameter = 0.0;
  if (moment == "analytic-sphere") {
    mi = MomentTensor::sphere_identity_contraction(moduli);
    volume = 4.0 * M_PI / 3.0;
    diameter = 2.0;
  } else if (moment == "bem") {
    const TriangleMesh shape = shape_mesh(cfg);
    mi = moment_tensor(shape, moduli, solve_theta(shape, moduli)).contract_identity();
    volume = shape.signed_volume();
    diameter = shape.bounding_box_scale();
  } else {
    throw ConfigError("moment must be 'analytic-sphere' or 'bem', got '" + moment + "'");
  }
  const double ratio = cfg.epsilon * diameter / std::abs(cfg.z.z());
  if (ratio > 0.3) {
    warnings << "warning: cavity size over depth is " << format_double(ratio)
             << "; the leading-order field degrades beyond ~0.3\n";
  }

  return point_source_displacement(cfg.z, cfg.epsilon, cfg.pressure, mi, volume, moduli,
                                   points.points);
}

std::vector<Vec3> run_mogi(const RunConfig& cfg, const SurfacePointSet& points) {
  return mogi(cfg.z, cfg.epsilon, cfg.pressure, cfg.moduli(), points.points);
}

void write_field_csv(const std::string& path, const SurfacePointSet& points,
                     const std::vector<Vec3>& field) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << "y1,y2,u1,u2,u3\n";
  for (size_t k = 0; k < field.size(); ++k) {
    out << format_double(points.points[k].x()) << ',' << format_double(points.points[k].y())
        << ',' << format_double(field[k].x()) << ',' << format_double(field[k].y()) << ','
        << format_double(field[k].z()) << '\n';
  }
}

std::string moment_report(const RunConfig& cfg) {
  const ElasticModuli moduli = cfg.moduli();
  const TriangleMesh shape = shape_mesh(cfg);
  const MomentTensor mt = moment_tensor(shape, moduli, solve_theta(shape, moduli));
  const Mat3 mi = mt.contract_identity();

  std::ostringstream out;
  out << "shape: " << (cfg.cavity == "sphere" ? "icosphere subdiv " + std::to_string(cfg.subdiv)
                                              : cfg.mesh_file)
      << ", faces " << shape.face_count() << ", volume " << format_double(shape.signed_volume())
      << "\n";
  out << "MI (moment tensor contracted with the identity):\n";
  for (int i = 0; i < 3; ++i) {
    out << "  " << format_double(mi(i, 0)) << " " << format_double(mi(i, 1)) << " "
        << format_double(mi(i, 2)) << "\n";
  }
  out << "full tensor M[i][j][q][r], blocks by (q,r):\n";
  for (int q = 0; q < 3; ++q) {
    for (int r = 0; r < 3; ++r) {
      out << " (q,r) = (" << q + 1 << "," << r + 1 << ")\n";
      for (int i = 0; i < 3; ++i) {
        out << "  " << format_double(mt(i, 0, q, r)) << " " << format_double(mt(i, 1, q, r))
            << " " << format_double(mt(i, 2, q, r)) << "\n";
      }
    }
  }
  out << "minor symmetry defect: " << format_double(mt.minor_symmetry_defect()) << "\n";
  return out.str();
}

namespace {

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

void report(std::ostream& out, std::vector<Check>& checks, const std::string& name, bool pass,
            const std::string& detail) {
  checks.push_back({name, pass, detail});
  out << (pass ? "PASS" : "FAIL") << "  " << name << " (" << detail << ")\n";
}

}  // namespace

int run_validation(std::ostream& out) {
  const ElasticModuli m = moduli_from_poisson(0.25, 1.0);
  std::vector<Check> checks;
  std::mt19937_64 rng(2024);
  auto uniform = [&](double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
  };

  {  // jump relations on the level-3 sphere
    const TriangleMesh sph = icosphere(3);
    const Eigen::MatrixXd k = assemble_double_layer(sph, m);
    BoundaryField phi(sph);
    for (int f = 0; f < sph.face_count(); ++f) {
      const Vec3 c = sph.centroid(f);
      phi[f] = Vec3(1.0 + c.x(), std::sin(c.y()), c.z() * c.x());
    }
    const Eigen::VectorXd kphi = k * phi.stacked();
    double scale = 0.0;
    for (int f = 0; f < sph.face_count(); ++f) scale = std::max(scale, phi[f].norm());
    double worst = 0.0;
    for (int i = 5; i < sph.face_count(); i += 89) {
      const Vec3 c = sph.centroid(i);
      const Vec3 n = sph.normal(i);
      const double delta = 1e-3 * sph.diameter(i);
      const Vec3 outside =
          eval_potential(PotentialKind::DoubleKelvin, c + delta * n, sph, phi, m);
      const Vec3 inside =
          eval_potential(PotentialKind::DoubleKelvin, c - delta * n, sph, phi, m);
      const Vec3 kp = kphi.segment<3>(3 * i);
      worst = std::max(worst, (outside - (kp - 0.5 * phi[i])).norm() / scale);
      worst = std::max(worst, (inside - (kp + 0.5 * phi[i])).norm() / scale);
    }
    report(out, checks, "jump relations", worst <= 0.02,
           "worst probe error " + format_double(worst) + ", tolerance 0.02");
  }

  {  // traction-free surface
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Vec3 x(uniform(-3, 3), uniform(-3, 3), 0.0);
      const Vec3 y(uniform(-2, 2), uniform(-2, 2), uniform(-3, -0.2));
      const Mat3 traction = neumann_traction(x, Vec3(0, 0, 1), y, m);
      const Tensor333 g = neumann_grad(x, y, m);
      double scale = 0.0;
      for (int k = 0; k < 3; ++k) scale += g[k].norm();
      scale *= m.lambda + 2.0 * m.mu;
      worst = std::max(worst, traction.norm() / scale);
    }
    report(out, checks, "traction-free surface", worst <= 1e-6,
           "worst relative traction " + format_double(worst) + ", tolerance 1e-6");
  }

  {  // surface trace formulas
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Vec3 z(uniform(-2, 2), uniform(-2, 2), uniform(-3, -0.2));
      const Eigen::Vector2d y(uniform(-3, 3), uniform(-3, 3));
      const Tensor333 g = grad_n_surface(z, y, m);
      const Vec3 d(z.x() - y.x(), z.y() - y.y(), z.z());
      const double f3 = std::pow(1.0 / d.norm(), 3);
      const double c = 2.0 * m.kmu * (1.0 - 2.0 * m.nu);
      for (int a = 0; a < 2; ++a) {
        const double want = c * d[a] * f3;
        worst = std::max(worst, std::abs(g[a].trace() - want) / std::abs(want));
      }
      const double want3 = c * z.z() * f3;
      worst = std::max(worst, std::abs(g[2].trace() - want3) / std::abs(want3));
    }
    report(out, checks, "surface trace formulas", worst <= 1e-6,
           "worst relative error " + format_double(worst) + ", tolerance 1e-6");
  }

  {  // Mogi comparison, subdiv 3
    const double eps = 0.05;
    const Vec3 z(0, 0, -1);
    const TriangleMesh cavity = place_cavity(icosphere(3), eps, z);
    const BoundaryField f = solve_trace(cavity, m, 1.0);
    SurfacePointSet grid;
    for (int iy = 0; iy < 21; ++iy)
      for (int ix = 0; ix < 21; ++ix)
        grid.points.emplace_back(ix / 2.0 - 5.0, iy / 2.0 - 5.0);
    const auto u = surface_displacement(cavity, m, 1.0, f, grid);
    const auto um = mogi(z, eps, 1.0, m, grid.points);
    double sup_gap = 0.0, sup_m = 0.0;
    for (size_t p = 0; p < u.size(); ++p) {
      sup_gap = std::max(sup_gap, (u[p] - um[p]).norm());
      sup_m = std::max(sup_m, um[p].norm());
    }
    report(out, checks, "mogi comparison", sup_gap / sup_m <= 0.05,
           "relative sup gap " + format_double(sup_gap / sup_m) + ", tolerance 0.05");
  }

  {  // convergence table, desk scale (subdiv 2)
    const ConvergenceReport rep =
        convergence_report(icosphere(2), {0.2, 0.1, 0.05}, m, 1.0);
    const bool monotone = rep.rows[0].rel_gap > rep.rows[1].rel_gap &&
                          rep.rows[1].rel_gap > rep.rows[2].rel_gap;
    out << "convergence table (icosphere subdiv 2, leading term from the BEM moment tensor):\n"
        << rep.table;
    report(out, checks, "convergence of the leading-order gap", monotone,
           "relative gap monotone over eps = 0.2, 0.1, 0.05");
  }

  int failures = 0;
  for (const auto& c : checks) failures += c.pass ? 0 : 1;
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
      << "\n";
  return failures;
}

}  // namespace halfbem::cli
