#include "halfbem/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace halfbem {

const TriangleRule& triangle_rule_7() {
  static const TriangleRule rule = [] {
    TriangleRule r;
    const double s15 = std::sqrt(15.0);
    const double a1 = (6.0 - s15) / 21.0;
    const double a2 = (6.0 + s15) / 21.0;
    const double w0 = 9.0 / 40.0;
    const double w1 = (155.0 - s15) / 1200.0;
    const double w2 = (155.0 + s15) / 1200.0;

    r.bary.push_back(Vec3(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0));
    r.weights.push_back(w0);
    for (int k = 0; k < 3; ++k) {
      Vec3 b1 = Vec3::Constant(a1);
      b1[k] = 1.0 - 2.0 * a1;
      r.bary.push_back(b1);
      r.weights.push_back(w1);
      Vec3 b2 = Vec3::Constant(a2);
      b2[k] = 1.0 - 2.0 * a2;
      r.bary.push_back(b2);
      r.weights.push_back(w2);
    }
    return r;
  }();
  return rule;
}

const LineRule& gauss_legendre_01(int n) {
  static std::map<int, LineRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Newton iteration on Legendre polynomials over [-1, 1], then map to [0, 1].
  LineRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p0 = 0.0, p1 = 0.0, dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[i] = 0.5 * (1.0 - x);  // descending roots map to ascending nodes
    rule.w[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

std::array<std::array<Vec3, 3>, 4> split4(const std::array<Vec3, 3>& tri) {
  const Vec3 m01 = 0.5 * (tri[0] + tri[1]);
  const Vec3 m12 = 0.5 * (tri[1] + tri[2]);
  const Vec3 m20 = 0.5 * (tri[2] + tri[0]);
  return {{{tri[0], m01, m20}, {tri[1], m12, m01}, {tri[2], m20, m12}, {m01, m12, m20}}};
}

void integrate_singular(const std::array<Vec3, 3>& tri, const Vec3& pole, int n1d,
                        const std::function<void(const Vec3& x, double w)>& accumulate) {
  const LineRule& gl = gauss_legendre_01(n1d);
  for (int s = 0; s < 3; ++s) {
    const Vec3& va = tri[s];
    const Vec3& vb = tri[(s + 1) % 3];
    const Vec3 e0 = va - pole;
    const Vec3 e1 = vb - va;
    const double jac = e0.cross(e1).norm();  // twice the sub-triangle area
    if (jac == 0.0) continue;
    for (int iu = 0; iu < n1d; ++iu) {
      const double u = gl.x[iu];
      for (int it = 0; it < n1d; ++it) {
        const double t = gl.x[it];
        const Vec3 x = pole + u * (e0 + t * e1);
        accumulate(x, gl.w[iu] * gl.w[it] * u * jac);
      }
    }
  }
}

}  // namespace halfbem
