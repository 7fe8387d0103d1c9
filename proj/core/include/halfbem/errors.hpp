#ifndef HALFBEM_ERRORS_HPP_
#define HALFBEM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace halfbem {

/// Base class of all halfbem error conditions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ModuliOutOfRange : public Error {
 public:
  using Error::Error;
};

class MeshOpen : public Error {
 public:
  using Error::Error;
};

class MeshInverted : public Error {
 public:
  using Error::Error;
};

class MeshDegenerateFace : public Error {
 public:
  using Error::Error;
};

class MeshInvalid : public Error {
 public:
  using Error::Error;
};

class MeshMismatch : public Error {
 public:
  using Error::Error;
};

class CavityTouchesSurface : public Error {
 public:
  using Error::Error;
};

class SingularPoint : public Error {
 public:
  using Error::Error;
};

class InvalidHalfSpacePoint : public Error {
 public:
  using Error::Error;
};

class PointOnBoundary : public Error {
 public:
  using Error::Error;
};

class PointInsideCavity : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

}  // namespace halfbem

#endif  // HALFBEM_ERRORS_HPP_
