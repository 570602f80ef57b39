#pragma once

#include "rodnet/errors.hpp"
#include "rodnet/mat3.hpp"

namespace rodnet {

inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigBoundTol = 1e-12;
inline constexpr double kBoundaryTol = 1e-10;

/// Nematic order tensor: symmetric, traceless, eigenvalues in [-1/3, 2/3].
/// Immutable after construction; eigendata and the biaxial coordinates
/// (r, s) = (lam1 + 2 lam2, 2 lam1 + lam2) are cached (eigenvalues ascending).
class OrderTensor {
 public:
  /// Validates trace and eigenvalue bounds; throws DomainError otherwise.
  explicit OrderTensor(const Sym3& q);

  const Sym3& tensor() const { return q_; }
  const EigResult& eig() const { return eig_; }
  double lambda_min() const { return eig_.lambda[0]; }
  double lambda_max() const { return eig_.lambda[2]; }

  /// Biaxial order parameters, r = lam1 + 2 lam2 and s = 2 lam1 + lam2.
  double r() const { return r_; }
  double s() const { return s_; }

 private:
  Sym3 q_;
  EigResult eig_;
  double r_ = 0.0, s_ = 0.0;
};

/// Uniaxial order tensor Q = s (n x n - I/3). Prolate for s > 0.
/// Requires |n| = 1 (to 1e-12) and s in the open interval (-1/2, 1).
OrderTensor uniaxial_q(double s, Vec3 n);

enum class TriangleRegion { interior, boundary, exterior };

/// Position of (r, s) relative to the admissible triangle whose edges are
/// r + s = 1, r - 2s = 1 and s - 2r = 1. The edge functionals
/// {1-(r+s), 1-(r-2s), 1-(s-2r)} equal 3(lam_i + 1/3), so the boundary is
/// exactly where Q + I/3 becomes singular.
struct TrianglePosition {
  double r = 0.0;
  double s = 0.0;
  TriangleRegion region = TriangleRegion::interior;
  double distance_to_boundary = 0.0;  // min of the three edge functionals
};

TrianglePosition triangle_classify(const OrderTensor& q);

}  // namespace rodnet
