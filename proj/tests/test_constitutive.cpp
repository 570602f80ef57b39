#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rodnet/constitutive.hpp"
#include "rodnet/sampling.hpp"

using namespace rodnet;

TEST_CASE("isotropic Q maps to (a0/3) I") {
  const StepLengthTensor l = l_from_q(uniaxial_q(0.0, {0, 0, 1}), 1.0, 3.0);
  CHECK(frobenius(l.tensor() - Sym3::identity()) < 1e-14);
  CHECK(trace(l.tensor()) == doctest::Approx(l.beta()));
}

TEST_CASE("uniaxial s=0.5 maps to diag(0.5, 0.5, 2.0) at beta=3") {
  const StepLengthTensor l = l_from_q(uniaxial_q(0.5, {0, 0, 1}), 1.0, 3.0);
  CHECK(l.tensor().xx == doctest::Approx(0.5));
  CHECK(l.tensor().yy == doctest::Approx(0.5));
  CHECK(l.tensor().zz == doctest::Approx(2.0));
}

TEST_CASE("boundary Q rejected as singular shape") {
  const OrderTensor q(Sym3::diag(2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0));
  CHECK_THROWS_AS(l_from_q(q, 1.0, 3.0), SingularShapeError);
}

TEST_CASE("trace and shared eigenvectors") {
  Rng rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const OrderTensor q(random_traceless_bounded(rng));
    if (q.lambda_min() < -1.0 / 3.0 + 1e-6) continue;
    const double beta = rng.uniform(0.5, 5.0);
    const double alpha = rng.uniform(0.1, 1.0);
    const StepLengthTensor l = l_from_q(q, alpha, beta);
    CHECK(trace(l.tensor()) == doctest::Approx(beta).epsilon(1e-12));
    // eigenvalues are beta (alpha lam_i + 1/3)
    for (int i = 0; i < 3; ++i)
      CHECK(l.eig().lambda[i] ==
            doctest::Approx(beta * (alpha * q.eig().lambda[i] + 1.0 / 3.0)).epsilon(1e-9));
  }
}

TEST_CASE("deformation gradient requires positive determinant") {
  CHECK_THROWS_AS(DeformationGradient(Mat3::diag(1.0, 1.0, -1.0)), DomainError);
  CHECK_THROWS_AS(DeformationGradient(Mat3::diag(1.0, 0.0, 1.0)), DomainError);
}

TEST_CASE("G at the reference state is the identity") {
  const StepLengthTensor l = l_from_q(uniaxial_q(0.3, {0, 0, 1}), 1.0, 3.0);
  const AnisoDeformation g = aniso_g(l, l, DeformationGradient(Mat3::identity()));
  CHECK(frobenius(g.g - Mat3::identity()) < 1e-12);
}

TEST_CASE("isotropic shapes cancel: G = F") {
  Rng rng(4);
  const StepLengthTensor l = l_from_q(uniaxial_q(0.0, {0, 0, 1}), 1.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat3 f = random_det_positive(rng, 2.0);
    const AnisoDeformation g = aniso_g(l, l, DeformationGradient(f));
    CHECK(frobenius(g.g - f) < 1e-10 * (1.0 + frobenius(f)));
  }
}

TEST_CASE("determinant identity det G = det F sqrt(det L0 / det L)") {
  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const Sym3 l = random_spd(rng, 1e-2, 1e2);
    const Sym3 l0 = random_spd(rng, 1e-2, 1e2);
    const Mat3 f = random_det_positive(rng, 2.0);
    const AnisoDeformation g = aniso_g_raw(l, l0, f);
    const double expect = det(f) * std::sqrt(det(l0) / det(l));
    CHECK(g.det_g == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("ftlf examples") {
  const FtlfCheck c = check_ftlf(Sym3::diag(1, 2, 3), Mat3::identity());
  CHECK(c.lhs == doctest::Approx(6.0));
  CHECK(c.rhs == doctest::Approx(3.0));
  CHECK(c.holds);
  const FtlfCheck z = check_ftlf(Sym3::diag(1, 2, 3), Mat3{});
  CHECK(z.lhs == doctest::Approx(0.0));
  CHECK(z.holds);
}

TEST_CASE("det-over-norm equality at the identity") {
  const DetOverNormCheck c = check_det_over_norm(Sym3::identity());
  CHECK(c.lhs == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(c.rhs == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(c.holds);
}

TEST_CASE("det-over-norm asymptotic diag(1,1,t)") {
  const double t = 1e6;
  const DetOverNormCheck c = check_det_over_norm(Sym3::diag(1, 1, t));
  CHECK(c.lhs == doctest::Approx(t / std::sqrt(2.0 + t * t)));
  CHECK(c.rhs == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(c.holds);
}

TEST_CASE("g-bounds trivial and scaled cases") {
  const GBoundsCheck c = check_g_bounds(Sym3::identity(), Sym3::identity(), Mat3::identity());
  CHECK(c.g_norm == doctest::Approx(std::sqrt(3.0)));
  CHECK(c.c1_f_norm == doctest::Approx(std::sqrt(3.0)));
  CHECK(c.adj_g_norm == doctest::Approx(std::sqrt(3.0)));
  CHECK(c.c2_adj_f_norm == doctest::Approx(std::sqrt(3.0) / 3.0));
  CHECK(c.holds);

  const GBoundsCheck s = check_g_bounds(Sym3::diag(2, 2, 2), Sym3::identity(), Mat3::identity());
  CHECK(s.g_norm == doctest::Approx(std::sqrt(1.5)));
  CHECK(s.c1_f_norm == doctest::Approx(std::sqrt(1.5)));
  CHECK(s.holds);
}

TEST_CASE("randomized inequality oracles, 1e4 trials each") {
  Rng rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    const Sym3 l = random_spd(rng);
    const Mat3 f = random_mat(rng, 10.0);
    CHECK(check_ftlf(l, f).holds);
    CHECK(check_det_over_norm(l).holds);
  }
  for (int trial = 0; trial < 10000; ++trial) {
    const Sym3 l = random_spd(rng, 1e-2, 1e2);
    const Sym3 l0 = random_spd(rng, 1e-2, 1e2);
    const Mat3 f = random_det_positive(rng, 2.0);
    CHECK(check_g_bounds(l, l0, f).holds);
  }
}

TEST_CASE("degeneracy: det L -> 0 exactly with det(Q + I/3) along edge paths") {
  Rng rng(123);
  for (int path = 0; path < 100; ++path) {
    const Mat3 rot = haar_rotation(rng);
    const double mid = rng.uniform(-0.2, 0.4);
    double prev = 1e300;
    for (double eps = 1e-2; eps >= 1e-10; eps *= 0.1) {
      const double l1 = -1.0 / 3.0 + eps;
      const Mat3 d = Mat3::diag(l1, mid, -l1 - mid);
      const Sym3 q = Sym3::from_mat(rot * d * transpose(rot));
      const Sym3 l = 3.0 * (q + (1.0 / 3.0) * Sym3::identity());
      const double dq = det(q + (1.0 / 3.0) * Sym3::identity());
      const double dl = det(l);
      CHECK(dl == doctest::Approx(27.0 * dq).epsilon(1e-8));
      CHECK(std::abs(dl) < prev);
      prev = std::abs(dl);
    }
  }
}

TEST_CASE("|G| depends on F only through L0- and L-contracted invariants") {
  // |G|^2 = tr(L0 F^T L^-1 F): replacing F by R F with L -> R L R^T leaves it unchanged
  Rng rng(321);
  for (int trial = 0; trial < 500; ++trial) {
    const Sym3 l = random_spd(rng, 1e-1, 1e1);
    const Sym3 l0 = random_spd(rng, 1e-1, 1e1);
    const Mat3 f = random_det_positive(rng, 2.0);
    const Mat3 r = haar_rotation(rng);
    const Mat3 rf = r * f;
    const Sym3 rl = Sym3::from_mat(r * l.to_mat() * transpose(r));
    const double a = frobenius(aniso_g_raw(l, l0, f).g);
    const double b = frobenius(aniso_g_raw(rl, l0, rf).g);
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
  }
}
