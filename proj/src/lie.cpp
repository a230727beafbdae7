#include "adsvol/lie.hpp"

#include <sstream>
#include <utility>

#include "adsvol/errors.hpp"

namespace adsvol::lie {

LieElement LieElement::basis(std::size_t i) {
  LieElement x;
  x.coords.at(i) = 1;
  return x;
}

bool LieElement::is_zero() const {
  return coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero();
}

LieElement &LieElement::operator+=(const LieElement &o) {
  for (std::size_t i = 0; i < 3; ++i) coords[i] += o.coords[i];
  return *this;
}

LieElement &LieElement::operator-=(const LieElement &o) {
  for (std::size_t i = 0; i < 3; ++i) coords[i] -= o.coords[i];
  return *this;
}

LieElement &LieElement::operator*=(const Rational &s) {
  for (auto &c : coords) c *= s;
  return *this;
}

Matrix3 Matrix3::identity() {
  Matrix3 r;
  for (std::size_t i = 0; i < 3; ++i) r.m[i][i] = 1;
  return r;
}

Rational Matrix3::trace() const { return m[0][0] + m[1][1] + m[2][2]; }

Rational Matrix3::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 Matrix3::transpose() const {
  Matrix3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
  return t;
}

bool Matrix3::is_zero() const {
  for (const auto &row : m)
    for (const auto &v : row)
      if (!v.is_zero()) return false;
  return true;
}

Matrix3 &Matrix3::operator+=(const Matrix3 &o) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] += o.m[i][j];
  return *this;
}

Matrix3 &Matrix3::operator-=(const Matrix3 &o) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] -= o.m[i][j];
  return *this;
}

Matrix3 &Matrix3::operator*=(const Rational &s) {
  for (auto &row : m)
    for (auto &v : row) v *= s;
  return *this;
}

Matrix3 operator*(const Matrix3 &a, const Matrix3 &b) {
  Matrix3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational acc;
      for (std::size_t k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
      r.m[i][j] = std::move(acc);
    }
  return r;
}

Matrix3 commutator(const Matrix3 &a, const Matrix3 &b) { return a * b - b * a; }

LieElement bracket(const LieElement &x, const LieElement &y) {
  // [H,E] = 2E, [H,F] = -2F, [E,F] = H
  return {{x.e() * y.f() - x.f() * y.e(),
           Rational(2) * (x.h() * y.e() - x.e() * y.h()),
           Rational(-2) * (x.h() * y.f() - x.f() * y.h())}};
}

Matrix3 adjoint(const LieElement &x) {
  Matrix3 ad;
  for (std::size_t j = 0; j < 3; ++j) {
    const LieElement col = bracket(x, LieElement::basis(j));
    for (std::size_t i = 0; i < 3; ++i) ad.m[i][j] = col.coords[i];
  }
  return ad;
}

Rational trace2(const LieElement &x, const LieElement &y) {
  return Rational(2) * x.h() * y.h() + x.e() * y.f() + x.f() * y.e();
}

Rational killing(const LieElement &x, const LieElement &y) {
  return (adjoint(x) * adjoint(y)).trace();
}

Rational calibrated_lambda() {
#ifdef ADSVOL_FAULT_LAMBDA
  return Rational(1);
#else
  return Rational(2);
#endif
}

MetricTensor::MetricTensor(Rational lambda) : lambda_(std::move(lambda)) {
  if (lambda_.sign() <= 0) throw ContractViolation("metric normalization must be positive");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      gram_.m[i][j] = lambda_ * trace2(LieElement::basis(i), LieElement::basis(j));
}

Rational MetricTensor::operator()(const LieElement &x, const LieElement &y) const {
  return lambda_ * trace2(x, y);
}

Signature signature(const Matrix3 &symmetric, std::array<Rational, 3> *diagonal) {
  if (!(symmetric == symmetric.transpose())) throw ContractViolation("signature: matrix is not symmetric");
  Matrix3 a = symmetric;
  auto swap_index = [&a](std::size_t i, std::size_t j) {
    std::swap(a.m[i], a.m[j]);
    for (auto &row : a.m) std::swap(row[i], row[j]);
  };
  // row/col i += row/col j
  auto add_index = [&a](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < 3; ++c) a.m[i][c] += a.m[j][c];
    for (std::size_t r = 0; r < 3; ++r) a.m[r][i] += a.m[r][j];
  };

  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t pivot = 3;
    for (std::size_t i = k; i < 3 && pivot == 3; ++i)
      if (!a.m[i][i].is_zero()) pivot = i;
    if (pivot == 3) {
      for (std::size_t i = k; i < 3 && pivot == 3; ++i)
        for (std::size_t j = i + 1; j < 3 && pivot == 3; ++j)
          if (!a.m[i][j].is_zero()) {
            add_index(i, j);
            pivot = i;
          }
    }
    if (pivot == 3) break;
    if (pivot != k) swap_index(pivot, k);
    for (std::size_t r = k + 1; r < 3; ++r) {
      if (a.m[r][k].is_zero()) continue;
      const Rational factor = a.m[r][k] / a.m[k][k];
      for (std::size_t c = 0; c < 3; ++c) a.m[r][c] -= factor * a.m[k][c];
      for (std::size_t c = 0; c < 3; ++c) a.m[c][r] -= factor * a.m[c][k];
    }
  }

  Signature s;
  for (std::size_t i = 0; i < 3; ++i) {
    const int sg = a.m[i][i].sign();
    (sg > 0 ? s.positive : sg < 0 ? s.negative : s.zero) += 1;
    if (diagonal) (*diagonal)[i] = a.m[i][i];
  }
  return s;
}

namespace {

constexpr std::array<int, 3> kFrameSigns{1, 1, -1};

std::array<LieElement, 3> reference_vectors() {
  const Rational half(1, 2);
  return {half * LieElement::H(), half * (LieElement::E() + LieElement::F()),
          half * (LieElement::E() - LieElement::F())};
}

} // namespace

OrientedFrame::OrientedFrame(const LieElement &v1, const LieElement &v2, const LieElement &v3,
                             const MetricTensor &g)
    : v_{v1, v2, v3} {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const Rational expected = i == j ? Rational(kFrameSigns[i]) : Rational(0);
      if (g(v_[i], v_[j]) != expected)
        throw ContractViolation("frame is not orthonormal with causal types (+, +, -)");
    }
  if (volume_form(v1, v2, v3, g).sign() <= 0)
    throw ContractViolation("frame is not positively oriented");
}

OrientedFrame OrientedFrame::unchecked(const LieElement &v1, const LieElement &v2,
                                       const LieElement &v3) {
  OrientedFrame f;
  f.v_ = {v1, v2, v3};
  return f;
}

const OrientedFrame &reference_frame() {
  static const OrientedFrame frame = [] {
    const auto u = reference_vectors();
    return OrientedFrame::unchecked(u[0], u[1], u[2]);
  }();
  return frame;
}

Rational omega(const LieElement &x, const LieElement &y, const LieElement &z) {
  return (adjoint(x) * adjoint(bracket(y, z))).trace();
}

std::array<Rational, 3> frame_coordinates(const LieElement &x, const MetricTensor &g) {
  const auto u = reference_vectors();
  std::array<Rational, 3> c;
  for (std::size_t i = 0; i < 3; ++i) c[i] = Rational(kFrameSigns[i]) * g(x, u[i]);
  return c;
}

Rational volume_form(const LieElement &x, const LieElement &y, const LieElement &z,
                     const MetricTensor &g) {
  Matrix3 m;
  const std::array<std::array<Rational, 3>, 3> cols{frame_coordinates(x, g), frame_coordinates(y, g),
                                                    frame_coordinates(z, g)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.m[i][j] = cols[j][i];
  return m.determinant();
}

Rational omega_volume_ratio(const MetricTensor &g) {
  const auto &u = reference_frame();
  return omega(u[0], u[1], u[2]) / volume_form(u[0], u[1], u[2], g);
}

std::string to_string(const LieElement &x) {
  std::ostringstream os;
  os << "(" << x.h() << ")H + (" << x.e() << ")E + (" << x.f() << ")F";
  return os.str();
}

} // namespace adsvol::lie
