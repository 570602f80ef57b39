#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rodnet/order.hpp"
#include "rodnet/sampling.hpp"

using namespace rodnet;

TEST_CASE("uniaxial tensor: isotropic state is zero") {
  const OrderTensor q = uniaxial_q(0.0, {0.0, 0.0, 1.0});
  CHECK(frobenius(q.tensor()) == doctest::Approx(0.0).epsilon(1e-15));
  const TrianglePosition pos = triangle_classify(q);
  CHECK(pos.region == TriangleRegion::interior);
  CHECK(pos.r == doctest::Approx(0.0));
  CHECK(pos.s == doctest::Approx(0.0));
}

TEST_CASE("uniaxial spectrum {2s/3, -s/3, -s/3}") {
  const OrderTensor q = uniaxial_q(0.5, {0.0, 0.0, 1.0});
  CHECK(q.tensor().xx == doctest::Approx(-1.0 / 6.0));
  CHECK(q.tensor().yy == doctest::Approx(-1.0 / 6.0));
  CHECK(q.tensor().zz == doctest::Approx(1.0 / 3.0));
  CHECK(q.lambda_min() == doctest::Approx(-0.5 / 3.0));
  CHECK(q.lambda_max() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("perfect-alignment limit reaches the boundary") {
  const OrderTensor q = uniaxial_q(1.0 - 1e-13, {1.0, 0.0, 0.0});
  CHECK(q.lambda_min() == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(triangle_classify(q).region == TriangleRegion::boundary);
}

TEST_CASE("uniaxial domain errors") {
  CHECK_THROWS_AS(uniaxial_q(1.0, {0.0, 0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(uniaxial_q(-0.5, {0.0, 0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(uniaxial_q(0.3, {0.0, 0.0, 2.0}), DomainError);
}

TEST_CASE("non-traceless input rejected") {
  CHECK_THROWS_AS(OrderTensor(Sym3::diag(0.1, 0.1, 0.1)), DomainError);
}

TEST_CASE("minimum-eigenvalue edge classifies as boundary") {
  const OrderTensor q(Sym3::diag(2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0));
  CHECK(triangle_classify(q).region == TriangleRegion::boundary);
}

TEST_CASE("interior iff det(Q + I/3) positive, against brute force") {
  Rng rng(101);
  for (int trial = 0; trial < 20000; ++trial) {
    const OrderTensor q(random_traceless_bounded(rng));
    const double d = det(q.tensor() + (1.0 / 3.0) * Sym3::identity());
    const TrianglePosition pos = triangle_classify(q);
    if (pos.region == TriangleRegion::boundary) {
      // edge functionals are 3(lambda_i + 1/3); det is their product / 27
      CHECK(std::abs(d) <= 2e-10);
    } else if (pos.region == TriangleRegion::interior) {
      CHECK(d > 0.0);
    }
    CHECK(pos.region != TriangleRegion::exterior);
  }
}

TEST_CASE("uniaxial s=0.9 stays interior with det (1+2s)(1-s)^2/27") {
  const double s = 0.9;
  const OrderTensor q = uniaxial_q(s, {0.0, 1.0, 0.0});
  const double d = det(q.tensor() + (1.0 / 3.0) * Sym3::identity());
  CHECK(d == doctest::Approx((1 + 2 * s) * (1 - s) * (1 - s) / 27.0).epsilon(1e-12));
  CHECK(triangle_classify(q).region == TriangleRegion::interior);
}

TEST_CASE("lambda_max <= -2 lambda_min for traceless tensors") {
  Rng rng(55);
  for (int trial = 0; trial < 100000; ++trial) {
    const EigResult e = eig_sym(random_traceless_bounded(rng));
    CHECK(e.lambda[2] <= -2.0 * e.lambda[0] + 1e-12);
  }
}

TEST_CASE("uniaxial tensor invariant under n -> -n") {
  Rng rng(66);
  for (int trial = 0; trial < 1000; ++trial) {
    Vec3 n = {rng.normal(), rng.normal(), rng.normal()};
    n = normalized(n);
    const double s = rng.uniform(-0.49, 0.99);
    const Sym3 a = uniaxial_q(s, n).tensor();
    const Sym3 b = uniaxial_q(s, -1.0 * n).tensor();
    CHECK(frobenius(a - b) < 1e-14);
  }
}

TEST_CASE("(r, s) identities against the spectral definition") {
  Rng rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const OrderTensor q(random_traceless_bounded(rng));
    const auto& lam = q.eig().lambda;
    // with trace 0: lam1 - lam3 = 2 lam1 + lam2 and lam2 - lam3 = lam1 + 2 lam2
    CHECK(q.s() == doctest::Approx(lam[0] - lam[2]).epsilon(1e-10));
    CHECK(q.r() == doctest::Approx(lam[1] - lam[2]).epsilon(1e-10));
  }
}
