#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rodnet/mat3.hpp"
#include "rodnet/sampling.hpp"

using namespace rodnet;

namespace {

Mat3 reconstruct(const EigResult& e) {
  Mat3 sum;
  for (int i = 0; i < 3; ++i) sum = sum + e.lambda[i] * outer(e.vector(i), e.vector(i));
  return sum;
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 9; ++i) m = std::max(m, std::abs(a.m[i] - b.m[i]));
  return m;
}

}  // namespace

TEST_CASE("identity eigendecomposition") {
  const EigResult e = eig_sym(Sym3::identity());
  for (int i = 0; i < 3; ++i) CHECK(e.lambda[i] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(max_abs_diff(reconstruct(e), Sym3::identity().to_mat()) < 1e-14);
}

TEST_CASE("diagonal input keeps its spectrum") {
  const EigResult e = eig_sym(Sym3::diag(-1.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0));
  CHECK(e.lambda[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(e.lambda[1] == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(e.lambda[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("eigenvalues ascending, frame orthonormal, reconstruction to 1e-12") {
  Rng rng(20240901);
  for (int trial = 0; trial < 100000; ++trial) {
    Sym3 m;
    // mix of scales and near-degenerate spectra
    const int kind = trial % 4;
    if (kind == 0) {
      const Mat3 a = random_mat(rng, 1.0);
      m = Sym3::from_mat(a + transpose(a));
    } else if (kind == 1) {
      m = random_spd(rng, 1e-3, 1e3);
    } else if (kind == 2) {
      const double base = rng.uniform(-2.0, 2.0);
      const double gap = rng.uniform(0.0, 1e-9);
      const Mat3 r = haar_rotation(rng);
      m = Sym3::from_mat(r * Mat3::diag(base, base + gap, rng.uniform(-2.0, 2.0)) * transpose(r));
    } else {
      m = random_traceless_bounded(rng);
    }
    const EigResult e = eig_sym(m);
    CHECK(e.lambda[0] <= e.lambda[1]);
    CHECK(e.lambda[1] <= e.lambda[2]);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const double d = dot(e.vector(i), e.vector(j));
        CHECK(std::abs(d - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    const double tol = 1e-12 * (1.0 + frobenius(m));
    REQUIRE(max_abs_diff(reconstruct(e), m.to_mat()) < tol);
  }
}

TEST_CASE("degenerate frames are deterministic") {
  const Sym3 m = Sym3::diag(2.0, 2.0, -1.0);
  const EigResult a = eig_sym(m);
  const EigResult b = eig_sym(m);
  CHECK(max_abs_diff(a.frame, b.frame) == 0.0);
}

TEST_CASE("adjugate identity and determinant") {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const Mat3 a = random_mat(rng, 2.0);
    const Mat3 prod = adjugate(a) * a;
    const Mat3 expect = det(a) * Mat3::identity();
    CHECK(max_abs_diff(prod, expect) < 1e-12 * (1.0 + frobenius(a) * frobenius(a) * frobenius(a)));
  }
}

TEST_CASE("sym3 determinant matches dense determinant") {
  Rng rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const Sym3 s = random_spd(rng, 1e-2, 1e2);
    CHECK(det(s) == doctest::Approx(det(s.to_mat())).epsilon(1e-12));
  }
}
