#pragma once

#include <complex>

namespace baf {

using cpx = std::complex<double>;

inline double cross(cpx u, cpx v) { return u.real() * v.imag() - u.imag() * v.real(); }
inline double dot(cpx u, cpx v) { return u.real() * v.real() + u.imag() * v.imag(); }

/// Signed angle from u to v, in (-pi, pi].
inline double signed_angle(cpx u, cpx v) { return std::atan2(cross(u, v), dot(u, v)); }

/// Complex-affine map z -> a*z + b with a != 0. Chart changes of a branched
/// affine structure, gluing maps, placements of developed triangles and loop
/// holonomies are all values of this type.
struct Transition {
  cpx a{1.0, 0.0};
  cpx b{0.0, 0.0};

  cpx operator()(cpx z) const { return a * z + b; }

  /// this after other: (f.compose(g))(z) == f(g(z)).
  Transition compose(const Transition& g) const { return {a * g.a, a * g.b + b}; }

  Transition inverse() const { return {1.0 / a, -b / a}; }

  bool is_identity(double tol = 1e-12) const {
    return std::abs(a - cpx(1.0)) <= tol && std::abs(b) <= tol;
  }

  /// Fixed point b/(1-a); only meaningful when a != 1.
  cpx fixed_point() const { return b / (cpx(1.0) - a); }
};

/// The unique affine map sending p0 -> q0 and p1 -> q1 (p0 != p1).
inline Transition affine_through(cpx p0, cpx p1, cpx q0, cpx q1) {
  cpx a = (q1 - q0) / (p1 - p0);
  return {a, q0 - a * p0};
}

}  // namespace baf
