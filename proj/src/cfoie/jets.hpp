#pragma once

#include <array>
#include <cmath>

namespace cfoie {

// Truncated second-order Taylor arithmetic in two parameters (u, v).
// Charts are written once in terms of Jet2 scalars, which yields exact
// first and second partial derivatives for the fundamental forms.
struct Jet2 {
  double v = 0, du = 0, dv = 0, duu = 0, duv = 0, dvv = 0;

  static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static Jet2 var_u(double u) { return {u, 1, 0, 0, 0, 0}; }
  static Jet2 var_v(double v) { return {v, 0, 1, 0, 0, 0}; }

  Jet2 operator-() const { return {-v, -du, -dv, -duu, -duv, -dvv}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.v + b.v, a.du + b.du, a.dv + b.dv, a.duu + b.duu, a.duv + b.duv, a.dvv + b.dvv};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.v - b.v, a.du - b.du, a.dv - b.dv, a.duu - b.duu, a.duv - b.duv, a.dvv - b.dvv};
}
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v * b.v,
          a.du * b.v + a.v * b.du,
          a.dv * b.v + a.v * b.dv,
          a.duu * b.v + 2 * a.du * b.du + a.v * b.duu,
          a.duv * b.v + a.du * b.dv + a.dv * b.du + a.v * b.duv,
          a.dvv * b.v + 2 * a.dv * b.dv + a.v * b.dvv};
}
inline Jet2 operator+(const Jet2& a, double c) { return a + Jet2::constant(c); }
inline Jet2 operator+(double c, const Jet2& a) { return a + Jet2::constant(c); }
inline Jet2 operator-(const Jet2& a, double c) { return a - Jet2::constant(c); }
inline Jet2 operator-(double c, const Jet2& a) { return Jet2::constant(c) - a; }
inline Jet2 operator*(const Jet2& a, double c) { return a * Jet2::constant(c); }
inline Jet2 operator*(double c, const Jet2& a) { return a * Jet2::constant(c); }

// Chain rule for a smooth univariate f applied to a jet.
inline Jet2 chain(const Jet2& a, double f, double fp, double fpp) {
  return {f,
          fp * a.du,
          fp * a.dv,
          fpp * a.du * a.du + fp * a.duu,
          fpp * a.du * a.dv + fp * a.duv,
          fpp * a.dv * a.dv + fp * a.dvv};
}

inline Jet2 sqrt(const Jet2& a) {
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}
inline Jet2 reciprocal(const Jet2& a) {
  const double i = 1.0 / a.v;
  return chain(a, i, -i * i, 2 * i * i * i);
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
inline Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return chain(a, s, c, -s);
}
inline Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return chain(a, c, -s, -c);
}

using Jet2Vec3 = std::array<Jet2, 3>;

inline Jet2 dot(const Jet2Vec3& a, const Jet2Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// First-order variant used on hot paths (auxiliary quadrature nodes), where
// only positions and tangents are needed.
struct Jet1 {
  double v = 0, du = 0, dv = 0;

  static Jet1 constant(double c) { return {c, 0, 0}; }
  static Jet1 var_u(double u) { return {u, 1, 0}; }
  static Jet1 var_v(double v) { return {v, 0, 1}; }

  Jet1 operator-() const { return {-v, -du, -dv}; }
};

inline Jet1 operator+(const Jet1& a, const Jet1& b) { return {a.v + b.v, a.du + b.du, a.dv + b.dv}; }
inline Jet1 operator-(const Jet1& a, const Jet1& b) { return {a.v - b.v, a.du - b.du, a.dv - b.dv}; }
inline Jet1 operator*(const Jet1& a, const Jet1& b) {
  return {a.v * b.v, a.du * b.v + a.v * b.du, a.dv * b.v + a.v * b.dv};
}
inline Jet1 operator+(const Jet1& a, double c) { return {a.v + c, a.du, a.dv}; }
inline Jet1 operator+(double c, const Jet1& a) { return a + c; }
inline Jet1 operator-(const Jet1& a, double c) { return {a.v - c, a.du, a.dv}; }
inline Jet1 operator-(double c, const Jet1& a) { return {c - a.v, -a.du, -a.dv}; }
inline Jet1 operator*(const Jet1& a, double c) { return {a.v * c, a.du * c, a.dv * c}; }
inline Jet1 operator*(double c, const Jet1& a) { return a * c; }
inline Jet1 chain(const Jet1& a, double f, double fp) { return {f, fp * a.du, fp * a.dv}; }
inline Jet1 sqrt(const Jet1& a) {
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s);
}
inline Jet1 reciprocal(const Jet1& a) {
  const double i = 1.0 / a.v;
  return chain(a, i, -i * i);
}
inline Jet1 operator/(const Jet1& a, const Jet1& b) { return a * reciprocal(b); }
inline Jet1 sin(const Jet1& a) { return chain(a, std::sin(a.v), std::cos(a.v)); }
inline Jet1 cos(const Jet1& a) { return chain(a, std::cos(a.v), -std::sin(a.v)); }

using Jet1Vec3 = std::array<Jet1, 3>;

inline Jet1 dot(const Jet1Vec3& a, const Jet1Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace cfoie
