#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "adsvol/rational.hpp"

// Exact model of sl(2, R) in the ordered basis (H, E, F):
//   H = diag(1, -1),  E = [[0, 1], [0, 0]],  F = [[0, 0], [1, 0]].
namespace adsvol::lie {

struct LieElement {
  std::array<Rational, 3> coords{};  // (H, E, F)

  static LieElement H() { return {{1, 0, 0}}; }
  static LieElement E() { return {{0, 1, 0}}; }
  static LieElement F() { return {{0, 0, 1}}; }
  static LieElement basis(std::size_t i);

  const Rational &h() const { return coords[0]; }
  const Rational &e() const { return coords[1]; }
  const Rational &f() const { return coords[2]; }
  bool is_zero() const;

  LieElement &operator+=(const LieElement &o);
  LieElement &operator-=(const LieElement &o);
  LieElement &operator*=(const Rational &s);
  friend LieElement operator+(LieElement a, const LieElement &b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement &b) { return a -= b; }
  friend LieElement operator*(const Rational &s, LieElement a) { return a *= s; }
  friend LieElement operator-(LieElement a) { return a *= Rational(-1); }
  friend bool operator==(const LieElement &, const LieElement &) = default;
};

/// Dense 3x3 rational matrix; used for ad_X and for End(E)-valued form coefficients.
struct Matrix3 {
  std::array<std::array<Rational, 3>, 3> m{};

  static Matrix3 zero() { return {}; }
  static Matrix3 identity();

  Rational &operator()(std::size_t r, std::size_t c) { return m[r][c]; }
  const Rational &operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
  Rational trace() const;
  Rational determinant() const;
  Matrix3 transpose() const;
  bool is_zero() const;

  Matrix3 &operator+=(const Matrix3 &o);
  Matrix3 &operator-=(const Matrix3 &o);
  Matrix3 &operator*=(const Rational &s);
  friend Matrix3 operator+(Matrix3 a, const Matrix3 &b) { return a += b; }
  friend Matrix3 operator-(Matrix3 a, const Matrix3 &b) { return a -= b; }
  friend Matrix3 operator*(const Rational &s, Matrix3 a) { return a *= s; }
  friend Matrix3 operator*(const Matrix3 &a, const Matrix3 &b);
  friend bool operator==(const Matrix3 &, const Matrix3 &) = default;
};

/// AB - BA
Matrix3 commutator(const Matrix3 &a, const Matrix3 &b);

/// Matrix commutator XY - YX, in (H, E, F) coordinates.
LieElement bracket(const LieElement &x, const LieElement &y);

/// Matrix of ad_X = [X, .] acting on (H, E, F) coordinates; column j is [X, basis_j].
Matrix3 adjoint(const LieElement &x);

/// trace(XY) of the 2x2 matrices.
Rational trace2(const LieElement &x, const LieElement &y);

/// Killing form trace(ad_X ad_Y); equals 4 * trace2(X, Y).
Rational killing(const LieElement &x, const LieElement &y);

/// Normalization of the bi-invariant metric, metric = lambda * trace2.
///
/// The value is fixed by requiring that PSL(2,R) -> H^2 (curvature -1) is a
/// Riemannian submersion: exp(tH) acts on the upper half plane by z -> e^{2t} z,
/// which moves i at hyperbolic speed 2, so |H| = 2 and lambda * trace2(H, H) = 4.
/// With trace2(H, H) = 2 this forces lambda = 2.
Rational calibrated_lambda();

class MetricTensor {
public:
  /// Throws ContractViolation unless lambda > 0.
  explicit MetricTensor(Rational lambda);
  static MetricTensor calibrated() { return MetricTensor(calibrated_lambda()); }

  const Rational &normalization() const { return lambda_; }
  /// Gram matrix in the (H, E, F) basis.
  const Matrix3 &gram() const { return gram_; }
  Rational operator()(const LieElement &x, const LieElement &y) const;

private:
  Rational lambda_;
  Matrix3 gram_;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature &, const Signature &) = default;
};

/// Sylvester signature of a symmetric rational matrix, by exact congruence diagonalization.
/// `diagonal` (optional) receives the diagonal entries in elimination order.
Signature signature(const Matrix3 &symmetric, std::array<Rational, 3> *diagonal = nullptr);

/// Ordered triple (spacelike, spacelike, timelike), orthonormal for a metric.
class OrientedFrame {
public:
  /// Validates orthonormality (+1, +1, -1) against `g` and positive orientation
  /// relative to the reference frame. Throws ContractViolation otherwise.
  OrientedFrame(const LieElement &v1, const LieElement &v2, const LieElement &v3,
                const MetricTensor &g = MetricTensor::calibrated());

  /// Builds a frame without checks; used for deliberately reversed frames.
  static OrientedFrame unchecked(const LieElement &v1, const LieElement &v2, const LieElement &v3);

  const LieElement &operator[](std::size_t i) const { return v_[i]; }
  const std::array<LieElement, 3> &vectors() const { return v_; }

private:
  OrientedFrame() = default;
  std::array<LieElement, 3> v_;
};

/// (u1, u2, u3) = (H/2, (E+F)/2, (E-F)/2), declared positively oriented.
const OrientedFrame &reference_frame();

/// Omega(X, Y, Z) = trace(ad_X ad_[Y,Z]) on the adjoint representation.
Rational omega(const LieElement &x, const LieElement &y, const LieElement &z);

/// Coordinates of X in the reference frame, c_i = eps_i g(X, u_i) with eps = (+1, +1, -1).
std::array<Rational, 3> frame_coordinates(const LieElement &x,
                                          const MetricTensor &g = MetricTensor::calibrated());

/// Lorentzian volume form: determinant of frame coordinates, volume_form(u1, u2, u3) = 1.
Rational volume_form(const LieElement &x, const LieElement &y, const LieElement &z,
                     const MetricTensor &g = MetricTensor::calibrated());

/// The constant c0 with omega = c0 * volume_form.
Rational omega_volume_ratio(const MetricTensor &g = MetricTensor::calibrated());

std::string to_string(const LieElement &x);

} // namespace adsvol::lie
