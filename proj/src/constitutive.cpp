#include "rodnet/constitutive.hpp"

#include <cmath>
#include <string>

namespace rodnet {

namespace {
constexpr double kIneqTol = 1e-10;

Mat3 spectral_pow(const EigResult& e, double expo) {
  const Mat3 d = Mat3::diag(std::pow(e.lambda[0], expo), std::pow(e.lambda[1], expo),
                            std::pow(e.lambda[2], expo));
  return e.frame * d * transpose(e.frame);
}
}  // namespace

StepLengthTensor::StepLengthTensor(const Sym3& l, double alpha, double beta)
    : l_(l), alpha_(alpha), beta_(beta) {
  eig_ = eig_sym(l);
  const double tr = trace(l);
  if (!(eig_.lambda[0] > kSpdRelTol * tr))
    throw SingularShapeError("step-length tensor is singular or indefinite, lam_min = " +
                             std::to_string(eig_.lambda[0]));
}

Mat3 StepLengthTensor::sqrt() const { return spectral_pow(eig_, 0.5); }
Mat3 StepLengthTensor::inv_sqrt() const { return spectral_pow(eig_, -0.5); }

StepLengthTensor l_from_q(const OrderTensor& q, double alpha, double beta) {
  if (!(beta > 0.0)) throw DomainError("trace parameter beta must be positive");
  Sym3 l = beta * (alpha * q.tensor() + (1.0 / 3.0) * Sym3::identity());
  return StepLengthTensor(l, alpha, beta);
}

DeformationGradient::DeformationGradient(const Mat3& f) : f_(f), det_(det(f)) {
  if (!(det_ > 0.0)) throw DomainError("deformation gradient must have positive determinant");
}

AnisoDeformation aniso_g(const StepLengthTensor& l, const StepLengthTensor& l0,
                         const DeformationGradient& f) {
  AnisoDeformation out;
  out.g = l.inv_sqrt() * f.matrix() * l0.sqrt();
  out.det_g = det(out.g);
  return out;
}

AnisoDeformation aniso_g_raw(const Sym3& l, const Sym3& l0, const Mat3& f) {
  return aniso_g(StepLengthTensor(l, 1.0, trace(l)), StepLengthTensor(l0, 1.0, trace(l0)),
                 DeformationGradient(f));
}

FtlfCheck check_ftlf(const Sym3& l, const Mat3& f) {
  FtlfCheck c;
  const Mat3 ltf = l.to_mat() * f;
  c.lhs = trace(transpose(f) * ltf);
  c.rhs = eig_sym(l).lambda[0] * frobenius(f) * frobenius(f);
  c.holds = c.lhs >= c.rhs - kIneqTol * (1.0 + std::abs(c.rhs));
  return c;
}

DetOverNormCheck check_det_over_norm(const Sym3& l) {
  DetOverNormCheck c;
  c.lhs = det(l) / frobenius(l);
  const double lmin = eig_sym(l).lambda[0];
  c.rhs = lmin * lmin / std::sqrt(3.0);
  c.holds = c.lhs >= c.rhs - kIneqTol * (1.0 + std::abs(c.rhs));
  return c;
}

GBoundsCheck check_g_bounds(const Sym3& l, const Sym3& l0, const Mat3& f) {
  GBoundsCheck c;
  const AnisoDeformation g = aniso_g_raw(l, l0, f);
  const double c1 = std::sqrt(eig_sym(l0).lambda[0] / eig_sym(l).lambda[2]);
  const double c2 = c1 * c1 / 3.0;
  c.g_norm = frobenius(g.g);
  c.c1_f_norm = c1 * frobenius(f);
  c.adj_g_norm = frobenius(adjugate(g.g));
  c.c2_adj_f_norm = c2 * frobenius(adjugate(f));
  c.holds = c.g_norm >= c.c1_f_norm - kIneqTol * (1.0 + c.c1_f_norm) &&
            c.adj_g_norm >= c.c2_adj_f_norm - kIneqTol * (1.0 + c.c2_adj_f_norm);
  return c;
}

}  // namespace rodnet
