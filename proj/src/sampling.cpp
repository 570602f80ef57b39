#include "rodnet/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace rodnet {

Mat3 haar_rotation(Rng& rng) {
  double q0 = rng.normal(), q1 = rng.normal(), q2 = rng.normal(), q3 = rng.normal();
  const double n = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
  q0 /= n; q1 /= n; q2 /= n; q3 /= n;
  Mat3 r;
  r(0, 0) = 1 - 2 * (q2 * q2 + q3 * q3);
  r(0, 1) = 2 * (q1 * q2 - q0 * q3);
  r(0, 2) = 2 * (q1 * q3 + q0 * q2);
  r(1, 0) = 2 * (q1 * q2 + q0 * q3);
  r(1, 1) = 1 - 2 * (q1 * q1 + q3 * q3);
  r(1, 2) = 2 * (q2 * q3 - q0 * q1);
  r(2, 0) = 2 * (q1 * q3 - q0 * q2);
  r(2, 1) = 2 * (q2 * q3 + q0 * q1);
  r(2, 2) = 1 - 2 * (q1 * q1 + q2 * q2);
  return r;
}

namespace {
Sym3 conjugate_diag(const Mat3& r, double a, double b, double c) {
  const Mat3 d = Mat3::diag(a, b, c);
  return Sym3::from_mat(r * d * transpose(r));
}
}  // namespace

Sym3 random_spd(Rng& rng, double lo, double hi) {
  const double a = rng.log_uniform(lo, hi);
  const double b = rng.log_uniform(lo, hi);
  const double c = rng.log_uniform(lo, hi);
  const Mat3 r = haar_rotation(rng);
  return conjugate_diag(r, a, b, c);
}

Sym3 random_traceless_bounded(Rng& rng) {
  double a = rng.normal(), b = rng.normal(), c = rng.normal();
  const double mean = (a + b + c) / 3.0;
  a -= mean; b -= mean; c -= mean;
  const double lo = std::min({a, b, c});
  const double hi = std::max({a, b, c});
  double scale = 1.0;
  if (lo < 0.0) scale = std::min(scale, (1.0 / 3.0) / -lo);
  if (hi > 0.0) scale = std::min(scale, (2.0 / 3.0) / hi);
  scale *= rng.uniform(0.0, 1.0);  // fill the interior, not just the shell
  const Mat3 r = haar_rotation(rng);
  return conjugate_diag(r, scale * a, scale * b, scale * c);
}

Mat3 random_mat(Rng& rng, double scale) {
  Mat3 m;
  for (auto& v : m.m) v = rng.uniform(-scale, scale);
  return m;
}

Mat3 random_det_positive(Rng& rng, double scale) {
  for (;;) {
    Mat3 m = random_mat(rng, scale);
    if (det(m) > 1e-6 * scale * scale * scale) return m;
  }
}

}  // namespace rodnet
