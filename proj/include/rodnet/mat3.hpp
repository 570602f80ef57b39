#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace rodnet {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double& operator[](std::size_t i) { return (&x)[i]; }
  double operator[](std::size_t i) const { return (&x)[i]; }
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double c, Vec3 v) { return {c * v.x, c * v.y, c * v.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(Vec3 v) {
  const double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

/// Dense 3x3 matrix, row-major.
struct Mat3 {
  std::array<double, 9> m{};

  double& operator()(std::size_t i, std::size_t j) { return m[3 * i + j]; }
  double operator()(std::size_t i, std::size_t j) const { return m[3 * i + j]; }

  static Mat3 identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
  }
  static Mat3 diag(double a, double b, double c) {
    Mat3 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
  }

  Vec3 row(std::size_t i) const { return {m[3 * i], m[3 * i + 1], m[3 * i + 2]}; }
  Vec3 col(std::size_t j) const { return {m[j], m[3 + j], m[6 + j]}; }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}
inline Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}
inline Mat3 operator*(double c, const Mat3& a) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = c * a.m[i];
  return r;
}
inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}
inline Vec3 operator*(const Mat3& a, Vec3 v) {
  return {dot(a.row(0), v), dot(a.row(1), v), dot(a.row(2), v)};
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}
inline Mat3 outer(Vec3 a, Vec3 b) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
  return r;
}
inline double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }
inline double det(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Adjugate (transposed cofactor matrix): adj(A) A = det(A) I.
inline Mat3 adjugate(const Mat3& a) {
  Mat3 r;
  r(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  r(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  r(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  r(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  r(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  r(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  r(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  r(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  r(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return r;
}

inline double frobenius(const Mat3& a) {
  double s = 0.0;
  for (double v : a.m) s += v * v;
  return std::sqrt(s);
}

/// Symmetric 3x3 tensor stored as its six independent components,
/// so symmetry holds exactly by construction.
struct Sym3 {
  double xx = 0.0, yy = 0.0, zz = 0.0, xy = 0.0, xz = 0.0, yz = 0.0;

  static Sym3 identity() { return {1.0, 1.0, 1.0, 0.0, 0.0, 0.0}; }
  static Sym3 diag(double a, double b, double c) { return {a, b, c, 0.0, 0.0, 0.0}; }

  /// Symmetric part of an arbitrary matrix.
  static Sym3 from_mat(const Mat3& m) {
    return {m(0, 0), m(1, 1), m(2, 2),
            0.5 * (m(0, 1) + m(1, 0)), 0.5 * (m(0, 2) + m(2, 0)), 0.5 * (m(1, 2) + m(2, 1))};
  }

  Mat3 to_mat() const {
    Mat3 r;
    r(0, 0) = xx; r(1, 1) = yy; r(2, 2) = zz;
    r(0, 1) = r(1, 0) = xy;
    r(0, 2) = r(2, 0) = xz;
    r(1, 2) = r(2, 1) = yz;
    return r;
  }
};

inline Sym3 operator+(const Sym3& a, const Sym3& b) {
  return {a.xx + b.xx, a.yy + b.yy, a.zz + b.zz, a.xy + b.xy, a.xz + b.xz, a.yz + b.yz};
}
inline Sym3 operator-(const Sym3& a, const Sym3& b) {
  return {a.xx - b.xx, a.yy - b.yy, a.zz - b.zz, a.xy - b.xy, a.xz - b.xz, a.yz - b.yz};
}
inline Sym3 operator*(double c, const Sym3& a) {
  return {c * a.xx, c * a.yy, c * a.zz, c * a.xy, c * a.xz, c * a.yz};
}
inline double trace(const Sym3& a) { return a.xx + a.yy + a.zz; }
inline double det(const Sym3& a) {
  return a.xx * (a.yy * a.zz - a.yz * a.yz) - a.xy * (a.xy * a.zz - a.yz * a.xz) +
         a.xz * (a.xy * a.yz - a.yy * a.xz);
}
inline double frobenius(const Sym3& a) {
  return std::sqrt(a.xx * a.xx + a.yy * a.yy + a.zz * a.zz +
                   2.0 * (a.xy * a.xy + a.xz * a.xz + a.yz * a.yz));
}
/// Quadratic form v . (A v).
inline double quad_form(const Sym3& a, Vec3 v) {
  return a.xx * v.x * v.x + a.yy * v.y * v.y + a.zz * v.z * v.z +
         2.0 * (a.xy * v.x * v.y + a.xz * v.x * v.z + a.yz * v.y * v.z);
}
inline Vec3 apply(const Sym3& a, Vec3 v) {
  return {a.xx * v.x + a.xy * v.y + a.xz * v.z,
          a.xy * v.x + a.yy * v.y + a.yz * v.z,
          a.xz * v.x + a.yz * v.y + a.zz * v.z};
}

/// Eigendecomposition result: eigenvalues ascending, eigenvectors as the
/// columns of an orthonormal frame (column i pairs with eigenvalue i).
struct EigResult {
  std::array<double, 3> lambda{};
  Mat3 frame;

  Vec3 vector(std::size_t i) const { return frame.col(i); }
};

/// Closed-form symmetric 3x3 eigendecomposition (Cardano eigenvalues,
/// cross-product eigenvector for the best-separated eigenvalue, analytic
/// 2x2 solve in the orthogonal complement). Deterministic: degenerate
/// frames are tie-broken by fixing the sign of each eigenvector so its
/// largest-magnitude component is positive.
EigResult eig_sym(const Sym3& a);

}  // namespace rodnet
