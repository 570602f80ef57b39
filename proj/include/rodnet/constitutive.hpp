#pragma once

#include "rodnet/errors.hpp"
#include "rodnet/mat3.hpp"
#include "rodnet/order.hpp"

namespace rodnet {

// SPD acceptance threshold: reject L with lam_min <= this fraction of tr L.
inline constexpr double kSpdRelTol = 1e-10;

/// Step-length tensor L = beta (alpha Q + I/3): the ellipsoidal chain shape
/// tied to the order tensor. trace L = beta; shares eigenvectors with Q.
class StepLengthTensor {
 public:
  StepLengthTensor(const Sym3& l, double alpha, double beta);

  const Sym3& tensor() const { return l_; }
  const EigResult& eig() const { return eig_; }
  double lambda_min() const { return eig_.lambda[0]; }
  double lambda_max() const { return eig_.lambda[2]; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  Mat3 sqrt() const;      // L^(1/2)
  Mat3 inv_sqrt() const;  // L^(-1/2)

 private:
  Sym3 l_;
  EigResult eig_;
  double alpha_ = 1.0, beta_ = 3.0;
};

/// Build L = beta (alpha Q + I/3). Eigenvalues are beta (alpha lam_i + 1/3);
/// throws SingularShapeError when Q sits on (or numerically at) the
/// admissible boundary so that L degenerates.
StepLengthTensor l_from_q(const OrderTensor& q, double alpha, double beta);

/// Deformation gradient with cached determinant; requires det F > 0.
class DeformationGradient {
 public:
  explicit DeformationGradient(const Mat3& f);

  const Mat3& matrix() const { return f_; }
  double determinant() const { return det_; }

 private:
  Mat3 f_;
  double det_ = 1.0;
};

/// Anisotropic deformation measure G = L^(-1/2) F L0^(1/2).
struct AnisoDeformation {
  Mat3 g;
  double det_g = 1.0;
};

AnisoDeformation aniso_g(const StepLengthTensor& l, const StepLengthTensor& l0,
                         const DeformationGradient& f);

/// Same composition for raw SPD inputs (verification paths).
AnisoDeformation aniso_g_raw(const Sym3& l, const Sym3& l0, const Mat3& f);

/// tr(F^T L F) >= lam_min(L) |F|^2.
struct FtlfCheck {
  double lhs = 0.0, rhs = 0.0;
  bool holds = false;
};
FtlfCheck check_ftlf(const Sym3& l, const Mat3& f);

/// det(L)/|L| >= lam_min(L)^2 / sqrt(3).
struct DetOverNormCheck {
  double lhs = 0.0, rhs = 0.0;
  bool holds = false;
};
DetOverNormCheck check_det_over_norm(const Sym3& l);

/// |G| >= C1 |F| and |adj G| >= C2 |adj F| with
/// C1 = sqrt(lam_min(L0)/lam_max(L)), C2 = C1^2 / 3.
struct GBoundsCheck {
  double g_norm = 0.0, c1_f_norm = 0.0;
  double adj_g_norm = 0.0, c2_adj_f_norm = 0.0;
  bool holds = false;
};
GBoundsCheck check_g_bounds(const Sym3& l, const Sym3& l0, const Mat3& f);

}  // namespace rodnet
