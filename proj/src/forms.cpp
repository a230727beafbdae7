#include "adsvol/forms.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "adsvol/errors.hpp"

namespace adsvol::forms {

std::array<Rational, 3> reference_coordinates(const LieElement &x) {
  // u1 = H/2, u2 = (E+F)/2, u3 = (E-F)/2
  return {Rational(2) * x.h(), x.e() + x.f(), x.e() - x.f()};
}

const std::vector<std::vector<std::size_t>> &index_tuples(int degree) {
  static const std::array<std::vector<std::vector<std::size_t>>, 4> tuples{{
      {{}},
      {{0}, {1}, {2}},
      {{0, 1}, {0, 2}, {1, 2}},
      {{0, 1, 2}},
  }};
  if (degree < 0 || degree > 3)
    throw ContractViolation("form degree must be in 0..3, got " + std::to_string(degree));
  return tuples[static_cast<std::size_t>(degree)];
}

namespace {

Rational minor_determinant(const std::vector<std::array<Rational, 3>> &coords,
                           const std::vector<std::size_t> &rows) {
  const std::size_t k = rows.size();
  switch (k) {
  case 0:
    return Rational(1);
  case 1:
    return coords[0][rows[0]];
  case 2:
    return coords[0][rows[0]] * coords[1][rows[1]] - coords[1][rows[0]] * coords[0][rows[1]];
  default: {
    Matrix3 m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = coords[j][rows[i]];
    return m.determinant();
  }
  }
}

void require_degree(const EndValuedForm &f, int degree, const char *what) {
  if (f.degree() != degree)
    throw ContractViolation(std::string(what) + ": expected a " + std::to_string(degree) +
                            "-form, got degree " + std::to_string(f.degree()));
}

} // namespace

template <class Value>
AlternatingForm<Value> AlternatingForm<Value>::zero(int degree) {
  AlternatingForm f;
  f.degree_ = degree;
  f.values_.assign(index_tuples(degree).size(), Value{});
  return f;
}

template <class Value>
AlternatingForm<Value> AlternatingForm<Value>::from_values(int degree, std::vector<Value> values) {
  if (values.size() != index_tuples(degree).size())
    throw ContractViolation("wrong number of stored values for a " + std::to_string(degree) + "-form");
  AlternatingForm f;
  f.degree_ = degree;
  f.values_ = std::move(values);
  return f;
}

template <class Value>
const Value &AlternatingForm<Value>::component(std::span<const std::size_t> increasing) const {
  const auto &tuples = index_tuples(degree_);
  for (std::size_t i = 0; i < tuples.size(); ++i)
    if (std::ranges::equal(tuples[i], increasing)) return values_[i];
  throw ContractViolation("component index is not an increasing tuple of the form's degree");
}

template <class Value>
Value &AlternatingForm<Value>::component(std::span<const std::size_t> increasing) {
  return const_cast<Value &>(std::as_const(*this).component(increasing));
}

template <class Value>
Value AlternatingForm<Value>::evaluate(std::span<const LieElement> args) const {
  if (args.size() != static_cast<std::size_t>(degree_))
    throw ContractViolation("form of degree " + std::to_string(degree_) + " evaluated on " +
                            std::to_string(args.size()) + " vectors");
  std::vector<std::array<Rational, 3>> coords;
  coords.reserve(args.size());
  for (const auto &x : args) coords.push_back(reference_coordinates(x));

  const auto &tuples = index_tuples(degree_);
  Value out{};
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const Rational d = minor_determinant(coords, tuples[i]);
    if (d.is_zero()) continue;
    Value term = values_[i];
    term *= d;
    out += term;
  }
  return out;
}

template <class Value>
bool AlternatingForm<Value>::is_zero() const {
  return std::ranges::all_of(values_, [](const Value &v) { return v == Value{}; });
}

template <class Value>
AlternatingForm<Value> &AlternatingForm<Value>::operator+=(const AlternatingForm &o) {
  if (o.degree_ != degree_) throw ContractViolation("adding forms of different degree");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

template <class Value>
AlternatingForm<Value> &AlternatingForm<Value>::operator-=(const AlternatingForm &o) {
  if (o.degree_ != degree_) throw ContractViolation("subtracting forms of different degree");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

template <class Value>
AlternatingForm<Value> &AlternatingForm<Value>::operator*=(const Rational &s) {
  for (auto &v : values_) v *= s;
  return *this;
}

template class AlternatingForm<Matrix3>;
template class AlternatingForm<Rational>;

EndValuedForm canonical_maurer_cartan() {
  const auto &u = lie::reference_frame();
  return EndValuedForm::from_values(1, {lie::adjoint(u[0]), lie::adjoint(u[1]), lie::adjoint(u[2])});
}

EndValuedForm bracket_wedge(const EndValuedForm &a, const EndValuedForm &b) {
  require_degree(a, 1, "bracket_wedge");
  require_degree(b, 1, "bracket_wedge");
  const auto &av = a.values();
  const auto &bv = b.values();
  std::vector<Matrix3> out;
  for (const auto &ij : index_tuples(2)) {
    const auto i = ij[0], j = ij[1];
    out.push_back(lie::commutator(av[i], bv[j]) - lie::commutator(av[j], bv[i]));
  }
  return EndValuedForm::from_values(2, std::move(out));
}

EndValuedForm invariant_d(const EndValuedForm &a) {
  require_degree(a, 1, "invariant_d");
  const auto &u = lie::reference_frame();
  std::vector<Matrix3> out;
  for (const auto &ij : index_tuples(2)) out.push_back(Rational(-1) * a(lie::bracket(u[ij[0]], u[ij[1]])));
  return EndValuedForm::from_values(2, std::move(out));
}

EndValuedForm maurer_cartan_residual(const EndValuedForm &a) {
  return invariant_d(a) + Rational(1, 2) * bracket_wedge(a, a);
}

ConnectionPath::ConnectionPath(Rational t) : t_(std::move(t)) {
  if (t_ < Rational(0) || t_ > Rational(1))
    throw InputError("path parameter must lie in [0, 1], got " + t_.str());
}

const EndValuedForm &ConnectionPath::base() const {
  static const EndValuedForm a = canonical_maurer_cartan();
  return a;
}

EndValuedForm curvature_at(const ConnectionPath &path) {
  const auto &a = path.base();
  const Rational &t = path.t();
#ifdef ADSVOL_FAULT_CURVATURE_SIGN
  const Rational quadratic = Rational(-1, 2) * t * t;
#else
  const Rational quadratic = Rational(1, 2) * t * t;
#endif
  return t * invariant_d(a) + quadratic * bracket_wedge(a, a);
}

ScalarForm wedge_trace(const EndValuedForm &a, const EndValuedForm &r) {
  require_degree(a, 1, "wedge_trace");
  require_degree(r, 2, "wedge_trace");
  static constexpr std::array<std::array<std::size_t, 3>, 6> perms{
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  static constexpr std::array<int, 6> signs{1, 1, 1, -1, -1, -1};

  const auto &u = lie::reference_frame();
  Matrix3 sum;
  for (std::size_t p = 0; p < perms.size(); ++p) {
    const auto &s = perms[p];
    sum += Rational(signs[p]) * (a(u[s[0]]) * r(u[s[1]], u[s[2]]));
  }
  return ScalarForm::from_values(3, {Rational(1, 6) * sum.trace()});
}

Rational cs_density(const EndValuedForm &a, const lie::OrientedFrame &frame, Orientation orientation) {
  const ScalarForm integrand = wedge_trace(a, bracket_wedge(a, a));
  Rational vol = lie::volume_form(frame[0], frame[1], frame[2]);
  if (orientation == Orientation::reversed) vol = -vol;
  return integrand(frame[0], frame[1], frame[2]) / vol;
}

std::optional<Rational> proportionality(const EndValuedForm &r, const EndValuedForm &b) {
  if (r.degree() != b.degree() || b.is_zero()) return std::nullopt;
  std::optional<Rational> c;
  for (std::size_t k = 0; k < b.values().size(); ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const Rational &bij = b.values()[k](i, j);
        if (!bij.is_zero() && !c) c = r.values()[k](i, j) / bij;
      }
  if (!(r == *c * b)) return std::nullopt;
  return c;
}

Rational path_integral_coefficient() {
  const EndValuedForm a = canonical_maurer_cartan();
  const EndValuedForm aa = bracket_wedge(a, a);
  auto coefficient = [&](const Rational &t) {
    const auto c = proportionality(curvature_at(ConnectionPath(t)), aa);
    if (!c) throw ContractViolation("curvature along the path is not a multiple of [A ^ A]");
    return *c;
  };
  return (coefficient(Rational(0)) + Rational(4) * coefficient(Rational(1, 2)) + coefficient(Rational(1))) /
         Rational(6);
}

} // namespace adsvol::forms
