#ifndef HALFBEM_OFF_IO_HPP_
#define HALFBEM_OFF_IO_HPP_

#include <iosfwd>
#include <string>

#include "halfbem/mesh.hpp"

namespace halfbem {

/// Reads an ASCII OFF mesh ("OFF" header, counts line, vertices, faces).
/// Only triangular faces ("3 i j k") are accepted.
TriangleMesh read_off(std::istream& in);
TriangleMesh read_off_file(const std::string& path);

void write_off(std::ostream& out, const TriangleMesh& mesh);
void write_off_file(const std::string& path, const TriangleMesh& mesh);

}  // namespace halfbem

#endif  // HALFBEM_OFF_IO_HPP_
