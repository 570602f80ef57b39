#include "rodnet/order.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rodnet {

OrderTensor::OrderTensor(const Sym3& q) : q_(q) {
  const double scale = 1.0 + frobenius(q);
  if (std::abs(trace(q)) > kTraceTol * scale)
    throw DomainError("order tensor must be traceless, trace = " + std::to_string(trace(q)));
  eig_ = eig_sym(q);
  if (eig_.lambda[0] < -1.0 / 3.0 - kEigBoundTol || eig_.lambda[2] > 2.0 / 3.0 + kEigBoundTol)
    throw DomainError("order tensor eigenvalues must lie in [-1/3, 2/3]");
  r_ = eig_.lambda[0] + 2.0 * eig_.lambda[1];
  s_ = 2.0 * eig_.lambda[0] + eig_.lambda[1];
}

OrderTensor uniaxial_q(double s, Vec3 n) {
  if (!(s > -0.5 && s < 1.0))
    throw DomainError("uniaxial order parameter must lie in (-1/2, 1), got " + std::to_string(s));
  if (std::abs(norm(n) - 1.0) > 1e-12)
    throw DomainError("director must be a unit vector");
  Sym3 q;
  q.xx = s * (n.x * n.x - 1.0 / 3.0);
  q.yy = s * (n.y * n.y - 1.0 / 3.0);
  q.zz = s * (n.z * n.z - 1.0 / 3.0);
  q.xy = s * n.x * n.y;
  q.xz = s * n.x * n.z;
  q.yz = s * n.y * n.z;
  return OrderTensor(q);
}

TrianglePosition triangle_classify(const OrderTensor& q) {
  TrianglePosition pos;
  pos.r = q.r();
  pos.s = q.s();
  const double e1 = 1.0 - (pos.r + pos.s);
  const double e2 = 1.0 - (pos.r - 2.0 * pos.s);
  const double e3 = 1.0 - (pos.s - 2.0 * pos.r);
  const double m = std::min({e1, e2, e3});
  pos.distance_to_boundary = m;
  if (std::abs(m) <= kBoundaryTol)
    pos.region = TriangleRegion::boundary;
  else if (m > 0.0)
    pos.region = TriangleRegion::interior;
  else
    pos.region = TriangleRegion::exterior;
  return pos;
}

}  // namespace rodnet
