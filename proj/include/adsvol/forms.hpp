#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "adsvol/lie.hpp"
#include "adsvol/rational.hpp"

// Constant-coefficient (left-invariant) alternating forms on sl(2, R).
//
// A k-form is stored by its values on increasing index tuples of the reference
// frame (u1, u2, u3); evaluation on arbitrary vectors expands them in that
// frame and extends by multilinearity and antisymmetry.
namespace adsvol::forms {

using lie::LieElement;
using lie::Matrix3;

/// Coordinates (c1, c2, c3) with X = c1 u1 + c2 u2 + c3 u3.
std::array<Rational, 3> reference_coordinates(const LieElement &x);

/// Increasing index tuples of size `degree` over {0, 1, 2}, in lexicographic order.
const std::vector<std::vector<std::size_t>> &index_tuples(int degree);

template <class Value>
class AlternatingForm {
public:
  /// Throws ContractViolation unless 0 <= degree <= 3.
  static AlternatingForm zero(int degree);
  /// `values` must have C(3, degree) entries, ordered as index_tuples(degree).
  static AlternatingForm from_values(int degree, std::vector<Value> values);

  int degree() const { return degree_; }
  const std::vector<Value> &values() const { return values_; }
  /// Stored value on an increasing index tuple.
  const Value &component(std::span<const std::size_t> increasing) const;
  Value &component(std::span<const std::size_t> increasing);

  /// Evaluates on `args.size() == degree()` vectors.
  Value evaluate(std::span<const LieElement> args) const;
  Value operator()(const LieElement &x) const { return evaluate(std::span(&x, 1)); }
  Value operator()(const LieElement &x, const LieElement &y) const {
    const std::array<LieElement, 2> a{x, y};
    return evaluate(a);
  }
  Value operator()(const LieElement &x, const LieElement &y, const LieElement &z) const {
    const std::array<LieElement, 3> a{x, y, z};
    return evaluate(a);
  }

  bool is_zero() const;

  AlternatingForm &operator+=(const AlternatingForm &o);
  AlternatingForm &operator-=(const AlternatingForm &o);
  AlternatingForm &operator*=(const Rational &s);
  friend AlternatingForm operator+(AlternatingForm a, const AlternatingForm &b) { return a += b; }
  friend AlternatingForm operator-(AlternatingForm a, const AlternatingForm &b) { return a -= b; }
  friend AlternatingForm operator*(const Rational &s, AlternatingForm a) { return a *= s; }
  friend bool operator==(const AlternatingForm &, const AlternatingForm &) = default;

private:
  int degree_ = 0;
  std::vector<Value> values_;
};

using EndValuedForm = AlternatingForm<Matrix3>;
using ScalarForm = AlternatingForm<Rational>;

extern template class AlternatingForm<Matrix3>;
extern template class AlternatingForm<Rational>;

/// A(X) = ad_X, the difference of the left and right invariant connections.
EndValuedForm canonical_maurer_cartan();

/// (X, Y) -> [A(X), B(Y)] - [A(Y), B(X)] for 1-forms A, B.
EndValuedForm bracket_wedge(const EndValuedForm &a, const EndValuedForm &b);

/// Cartan formula for invariant 1-forms: dA(X, Y) = -A([X, Y]).
EndValuedForm invariant_d(const EndValuedForm &a);

/// dA + 1/2 [A ^ A]; vanishes for the canonical form.
EndValuedForm maurer_cartan_residual(const EndValuedForm &a);

/// The affine path t -> nabla_R + t A between the right (t = 0) and left (t = 1)
/// invariant connections, A the canonical Maurer-Cartan form.
class ConnectionPath {
public:
  /// Throws InputError unless 0 <= t <= 1.
  explicit ConnectionPath(Rational t);
  const Rational &t() const { return t_; }
  const EndValuedForm &base() const;

private:
  Rational t_;
};

/// R(t) = t dA + (t^2 / 2) [A ^ A].
EndValuedForm curvature_at(const ConnectionPath &path);

/// trace((1/6) sum_{s in S3} sign(s) A(X_s1) R(X_s2, X_s3)), a scalar 3-form.
ScalarForm wedge_trace(const EndValuedForm &a, const EndValuedForm &r);

enum class Orientation { standard, reversed };

/// kappa = trace(A ^ [A ^ A]) / vol, evaluated on `frame`.
/// Frame-independent; flips sign with the declared orientation.
Rational cs_density(const EndValuedForm &a, const lie::OrientedFrame &frame = lie::reference_frame(),
                    Orientation orientation = Orientation::standard);

/// Scalar c with r = c * b, if one exists (b nonzero).
std::optional<Rational> proportionality(const EndValuedForm &r, const EndValuedForm &b);

/// int_0^1 c(t) dt where curvature_at(t) = c(t) [A ^ A]. The curvature is
/// quadratic in t, so Simpson's rule on {0, 1/2, 1} is exact.
/// Throws ContractViolation if the curvature is not proportional to [A ^ A].
Rational path_integral_coefficient();

} // namespace adsvol::forms
