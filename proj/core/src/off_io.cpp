#include "halfbem/off_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "halfbem/errors.hpp"

namespace halfbem {

namespace {

// Next whitespace-trimmed line that is neither empty nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r\n");
    line = line.substr(first, last - first + 1);
    return true;
  }
  return false;
}

std::string format17(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace

TriangleMesh read_off(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line) || line != "OFF") {
    throw MeshInvalid("OFF parse error: missing 'OFF' header");
  }
  if (!next_content_line(in, line)) throw MeshInvalid("OFF parse error: missing counts line");

  long nv = 0, nf = 0, ne = 0;
  {
    std::istringstream s(line);
    if (!(s >> nv >> nf)) throw MeshInvalid("OFF parse error: bad counts line '" + line + "'");
    s >> ne;  // edge count is present but ignored
    if (nv < 0 || nf < 0) throw MeshInvalid("OFF parse error: negative counts");
  }

  std::vector<Vec3> verts;
  verts.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    if (!next_content_line(in, line)) throw MeshInvalid("OFF parse error: truncated vertex list");
    std::istringstream s(line);
    Vec3 v;
    if (!(s >> v.x() >> v.y() >> v.z())) {
      throw MeshInvalid("OFF parse error: bad vertex line '" + line + "'");
    }
    verts.push_back(v);
  }

  std::vector<std::array<int, 3>> faces;
  faces.reserve(nf);
  for (long i = 0; i < nf; ++i) {
    if (!next_content_line(in, line)) throw MeshInvalid("OFF parse error: truncated face list");
    std::istringstream s(line);
    int arity = 0;
    std::array<int, 3> f{};
    if (!(s >> arity >> f[0] >> f[1] >> f[2]) || arity != 3) {
      throw MeshInvalid("OFF parse error: expected triangle face '3 i j k', got '" + line + "'");
    }
    faces.push_back(f);
  }

  return TriangleMesh(std::move(verts), std::move(faces));
}

TriangleMesh read_off_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshInvalid("cannot open mesh file: " + path);
  return read_off(in);
}

void write_off(std::ostream& out, const TriangleMesh& mesh) {
  out << "OFF\n" << mesh.vertex_count() << ' ' << mesh.face_count() << " 0\n";
  for (const auto& v : mesh.vertices()) {
    out << format17(v.x()) << ' ' << format17(v.y()) << ' ' << format17(v.z()) << '\n';
  }
  for (const auto& f : mesh.faces()) {
    out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  }
}

void write_off_file(const std::string& path, const TriangleMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw MeshInvalid("cannot open output mesh file: " + path);
  write_off(out, mesh);
}

}  // namespace halfbem
