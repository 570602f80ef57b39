#include "rodnet/mat3.hpp"

#include <algorithm>

namespace rodnet {

namespace {

// Fix the sign so the largest-magnitude component is positive; ties resolved
// lexicographically (x before y before z).
Vec3 canonical_sign(Vec3 v) {
  double best = std::abs(v.x);
  double lead = v.x;
  if (std::abs(v.y) > best) { best = std::abs(v.y); lead = v.y; }
  if (std::abs(v.z) > best) { lead = v.z; }
  return (lead < 0.0) ? -1.0 * v : v;
}

// Eigenvector of (A - lambda I) via the largest cross product of its rows.
Vec3 null_direction(const Sym3& a, double lambda) {
  Mat3 b = a.to_mat();
  b(0, 0) -= lambda;
  b(1, 1) -= lambda;
  b(2, 2) -= lambda;
  const Vec3 c01 = cross(b.row(0), b.row(1));
  const Vec3 c02 = cross(b.row(0), b.row(2));
  const Vec3 c12 = cross(b.row(1), b.row(2));
  const double n01 = dot(c01, c01), n02 = dot(c02, c02), n12 = dot(c12, c12);
  Vec3 best = c01;
  double nb = n01;
  if (n02 > nb) { best = c02; nb = n02; }
  if (n12 > nb) { best = c12; nb = n12; }
  if (nb <= 0.0) return {1.0, 0.0, 0.0};  // fully degenerate shell
  return normalized(best);
}

// Any unit vector orthogonal to u.
Vec3 orthogonal_to(Vec3 u) {
  Vec3 t = (std::abs(u.x) < 0.5) ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  return normalized(cross(u, t));
}

}  // namespace

EigResult eig_sym(const Sym3& a) {
  EigResult out;
  const double q = trace(a) / 3.0;
  Sym3 b = a;
  b.xx -= q;
  b.yy -= q;
  b.zz -= q;
  const double p2 = (b.xx * b.xx + b.yy * b.yy + b.zz * b.zz +
                     2.0 * (b.xy * b.xy + b.xz * b.xz + b.yz * b.yz)) / 6.0;
  const double p = std::sqrt(p2);

  const double scale = std::abs(q) + p;
  if (p <= 1e-300 || p <= 1e-15 * scale) {
    // numerically a multiple of the identity
    out.lambda = {q, q, q};
    out.frame = Mat3::identity();
    return out;
  }

  // Cardano: eigenvalues of B/p are 2 cos(phi + 2 pi k / 3).
  double r = det(b) / (2.0 * p2 * p);
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  double l0 = q + 2.0 * p * std::cos(phi);                          // largest
  double l2 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);       // smallest
  double l1 = 3.0 * q - l0 - l2;

  // Solve the best-separated eigenvalue by cross products, then diagonalize
  // the symmetric 2x2 restriction to its orthogonal complement.
  const bool top_isolated = (l0 - l1) >= (l1 - l2);
  const double liso = top_isolated ? l0 : l2;
  const Vec3 viso = null_direction(a, liso);
  const Vec3 u = orthogonal_to(viso);
  const Vec3 w = normalized(cross(viso, u));

  const Vec3 au = apply(a, u);
  const Vec3 aw = apply(a, w);
  const double auu = dot(u, au), aww = dot(w, aw), auw = dot(u, aw);
  // 2x2 symmetric eigenproblem [[auu, auw], [auw, aww]]
  const double half = 0.5 * (auu + aww);
  const double diff = 0.5 * (auu - aww);
  const double rad = std::sqrt(diff * diff + auw * auw);
  const double mu_hi = half + rad;
  const double mu_lo = half - rad;
  Vec3 v_hi, v_lo;
  if (rad <= 1e-15 * (std::abs(half) + rad)) {
    v_hi = u;
    v_lo = w;
  } else {
    // eigenvector of the 2x2 for mu_hi, chosen from the larger column
    double c, s;
    if (diff >= 0.0) { c = diff + rad; s = auw; }
    else             { c = auw; s = rad - diff; }
    const double n = std::sqrt(c * c + s * s);
    c /= n;
    s /= n;
    v_hi = normalized(c * u + s * w);
    v_lo = normalized(cross(viso, v_hi));
  }

  std::array<std::pair<double, Vec3>, 3> pairs;
  if (top_isolated)
    pairs = {{{mu_lo, v_lo}, {mu_hi, v_hi}, {liso, viso}}};
  else
    pairs = {{{liso, viso}, {mu_lo, v_lo}, {mu_hi, v_hi}}};
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  // re-orthonormalize (Gram-Schmidt) and fix signs deterministically
  Vec3 e0 = normalized(pairs[0].second);
  Vec3 e1 = pairs[1].second - dot(pairs[1].second, e0) * e0;
  e1 = normalized(e1);
  Vec3 e2 = cross(e0, e1);
  e0 = canonical_sign(e0);
  e1 = canonical_sign(e1);
  e2 = canonical_sign(e2);

  out.lambda = {pairs[0].first, pairs[1].first, pairs[2].first};
  for (std::size_t i = 0; i < 3; ++i) {
    out.frame(i, 0) = e0[i];
    out.frame(i, 1) = e1[i];
    out.frame(i, 2) = e2[i];
  }
  return out;
}

}  // namespace rodnet
