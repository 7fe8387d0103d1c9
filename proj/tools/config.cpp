#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace halfbem::cli {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  double out = 0.0;
  const std::string v = trim(value);
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError("bad numeric value for '" + key + "': '" + value + "'");
  }
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  const std::string v = trim(value);
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw ConfigError("bad integer value for '" + key + "': '" + value + "'");
  }
  return out;
}

Vec3 parse_vec3(const std::string& key, std::string value) {
  for (auto& c : value) {
    if (c == ',') c = ' ';
  }
  std::istringstream s(value);
  Vec3 out;
  if (!(s >> out.x() >> out.y() >> out.z())) {
    throw ConfigError("expected three numbers for '" + key + "', got '" + value + "'");
  }
  std::string rest;
  if (s >> rest) throw ConfigError("trailing content after '" + key + "': '" + rest + "'");
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));

    if (key == "lambda") {
      cfg.lambda = parse_number(key, value);
    } else if (key == "mu") {
      cfg.mu = parse_number(key, value);
    } else if (key == "nu") {
      cfg.nu = parse_number(key, value);
    } else if (key == "cavity") {
      cfg.cavity = value;
    } else if (key == "subdiv") {
      cfg.subdiv = parse_int(key, value);
    } else if (key == "mesh_file") {
      cfg.mesh_file = value;
    } else if (key == "z") {
      cfg.z = parse_vec3(key, value);
    } else if (key == "epsilon") {
      cfg.epsilon = parse_number(key, value);
    } else if (key == "pressure") {
      cfg.pressure = parse_number(key, value);
    } else if (key == "grid_nx") {
      cfg.grid_nx = parse_int(key, value);
    } else if (key == "grid_ny") {
      cfg.grid_ny = parse_int(key, value);
    } else if (key == "grid_extent") {
      cfg.grid_extent = parse_number(key, value);
    } else if (key == "points_file") {
      cfg.points_file = value;
    } else if (key == "output") {
      cfg.output = value;
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  if (cfg.lambda) out << "lambda = " << format_double(*cfg.lambda) << "\n";
  if (cfg.nu) out << "nu = " << format_double(*cfg.nu) << "\n";
  out << "mu = " << format_double(cfg.mu) << "\n";
  out << "cavity = " << cfg.cavity << "\n";
  out << "subdiv = " << cfg.subdiv << "\n";
  if (!cfg.mesh_file.empty()) out << "mesh_file = " << cfg.mesh_file << "\n";
  out << "z = " << format_double(cfg.z.x()) << " " << format_double(cfg.z.y()) << " "
      << format_double(cfg.z.z()) << "\n";
  out << "epsilon = " << format_double(cfg.epsilon) << "\n";
  out << "pressure = " << format_double(cfg.pressure) << "\n";
  out << "grid_nx = " << cfg.grid_nx << "\n";
  out << "grid_ny = " << cfg.grid_ny << "\n";
  out << "grid_extent = " << format_double(cfg.grid_extent) << "\n";
  if (!cfg.points_file.empty()) out << "points_file = " << cfg.points_file << "\n";
  out << "output = " << cfg.output << "\n";
  return out.str();
}

ElasticModuli RunConfig::moduli() const {
  try {
    if (lambda && nu) {
      throw ConfigError("give either lambda or nu, not both");
    }
    if (lambda) return moduli_from_lame(*lambda, mu);
    if (nu) return moduli_from_poisson(*nu, mu);
  } catch (const ModuliOutOfRange& e) {
    throw ConfigError(std::string("invalid moduli: ") + e.what());
  }
  throw ConfigError("moduli not specified: set lambda or nu (with mu)");
}

void RunConfig::validate() const {
  if (cavity != "sphere" && cavity != "file") {
    throw ConfigError("cavity must be 'sphere' or 'file', got '" + cavity + "'");
  }
  if (cavity == "file" && mesh_file.empty()) {
    throw ConfigError("cavity = file requires mesh_file");
  }
  if (cavity == "sphere" && (subdiv < 0 || subdiv > 7)) {
    throw ConfigError("subdiv must be in [0, 7]");
  }
  if (!(z.z() < 0.0)) throw ConfigError("z3 must be negative");
  if (!std::isfinite(z.x()) || !std::isfinite(z.y()) || !std::isfinite(z.z())) {
    throw ConfigError("z must be finite");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be positive");
  }
  if (!std::isfinite(pressure)) throw ConfigError("pressure must be finite");
  if (grid_nx < 1 || grid_ny < 1) throw ConfigError("grid counts must be at least 1");
  if (!(grid_extent > 0.0) || !std::isfinite(grid_extent)) {
    throw ConfigError("grid_extent must be positive");
  }
  if (output.empty()) throw ConfigError("output path must not be empty");
}

}  // namespace halfbem::cli
