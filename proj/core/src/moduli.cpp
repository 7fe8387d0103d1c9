#include "halfbem/moduli.hpp"

#include <cmath>
#include <string>

#include "halfbem/errors.hpp"

namespace halfbem {

namespace {

ElasticModuli finish(double lambda, double mu) {
  if (!(mu > 0.0) || !(3.0 * lambda + 2.0 * mu > 0.0) ||
      !std::isfinite(lambda) || !std::isfinite(mu)) {
    throw ModuliOutOfRange("moduli out of range: require mu > 0 and 3*lambda + 2*mu > 0, got lambda=" +
                           std::to_string(lambda) + " mu=" + std::to_string(mu));
  }
  ElasticModuli m;
  m.lambda = lambda;
  m.mu = mu;
  m.nu = lambda / (2.0 * (lambda + mu));
  m.cmn = 1.0 / (16.0 * M_PI * mu * (1.0 - m.nu));
  m.cnu = 4.0 * (1.0 - m.nu) * (1.0 - 2.0 * m.nu);
  m.cpnu = (1.0 - 2.0 * m.nu) / (8.0 * M_PI * (1.0 - m.nu));
  m.kmu = 1.0 / (4.0 * M_PI * mu);
  return m;
}

}  // namespace

ElasticModuli moduli_from_lame(double lambda, double mu) {
  return finish(lambda, mu);
}

ElasticModuli moduli_from_poisson(double nu, double mu) {
  if (!(nu > -1.0) || !(nu < 0.5) || !std::isfinite(nu)) {
    throw ModuliOutOfRange("Poisson ratio out of range (-1, 0.5): " + std::to_string(nu));
  }
  const double lambda = 2.0 * mu * nu / (1.0 - 2.0 * nu);
  return finish(lambda, mu);
}

Mat3 ElasticModuli::apply_stiffness(const Mat3& a) const {
  const Mat3 sym = 0.5 * (a + a.transpose());
  return lambda * a.trace() * Mat3::Identity() + 2.0 * mu * sym;
}

Vec3 ElasticModuli::traction(const Mat3& grad, const Vec3& n) const {
  return lambda * grad.trace() * n + mu * (grad + grad.transpose()) * n;
}

double ElasticModuli::stiffness(int i, int j, int q, int r) const {
  const double d_ij = (i == j) ? 1.0 : 0.0;
  const double d_qr = (q == r) ? 1.0 : 0.0;
  const double d_iq = (i == q) ? 1.0 : 0.0;
  const double d_jr = (j == r) ? 1.0 : 0.0;
  const double d_ir = (i == r) ? 1.0 : 0.0;
  const double d_jq = (j == q) ? 1.0 : 0.0;
  return lambda * d_ij * d_qr + mu * (d_iq * d_jr + d_ir * d_jq);
}

}  // namespace halfbem
