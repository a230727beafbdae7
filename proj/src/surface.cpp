#include "adsvol/surface.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "adsvol/errors.hpp"

namespace adsvol::surface {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kLiftPanels = 64;

double positive_mod(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  return r;
}

// Angle in [0, pi) of the line spanned by m (cos x, sin x).
double line_angle(const Moebius &m, double x) {
  const double cx = std::cos(x), sx = std::sin(x);
  const double vx = m.a() * cx + m.b() * sx;
  const double vy = m.c() * cx + m.d() * sx;
  return positive_mod(std::atan2(vy, vx), kPi);
}

} // namespace

Moebius Moebius::from_entries(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
    throw InputError("matrix entry is not finite");
  const double det = a * d - b * c;
  if (!(det > 0)) throw InputError("matrix does not have positive determinant");
  const double s = 1.0 / std::sqrt(det);
  return sign_normalized({a * s, b * s, c * s, d * s});
}

Moebius Moebius::sign_normalized(std::array<double, 4> m) {
  const double tr = m[0] + m[3];
  bool flip = tr < 0;
  if (tr == 0) {
    for (double v : m)
      if (v != 0) {
        flip = v < 0;
        break;
      }
  }
  if (flip)
    for (double &v : m) v = -v;
  return Moebius(m);
}

Moebius Moebius::identity() { return Moebius(std::array<double, 4>{1, 0, 0, 1}); }

Moebius Moebius::rotation(double alpha) {
  return from_entries(std::cos(alpha), -std::sin(alpha), std::sin(alpha), std::cos(alpha));
}

Moebius Moebius::axis_translation(double length) {
  return from_entries(std::exp(length / 2), 0, 0, std::exp(-length / 2));
}

Moebius Moebius::inverse() const { return sign_normalized({m_[3], -m_[1], -m_[2], m_[0]}); }

double Moebius::distance(const Moebius &o) const {
  double plus = 0, minus = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    plus += (m_[i] - o.m_[i]) * (m_[i] - o.m_[i]);
    minus += (m_[i] + o.m_[i]) * (m_[i] + o.m_[i]);
  }
  return std::sqrt(std::min(plus, minus));
}

Moebius operator*(const Moebius &x, const Moebius &y) {
  return Moebius::sign_normalized({x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
                                   x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d()});
}

Word::Word(std::vector<int> letters) {
  for (int l : letters) {
    if (l == 0) throw InputError("word letters must be nonzero");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int &l : inv) l = -l;
  return Word(std::move(inv));
}

Word operator*(const Word &x, const Word &y) {
  std::vector<int> all = x.letters_;
  all.insert(all.end(), y.letters_.begin(), y.letters_.end());
  return Word(std::move(all));
}

Word surface_relator(int genus) {
  std::vector<int> letters;
  for (int j = 1; j <= genus; ++j) {
    const int a = 2 * j - 1, b = 2 * j;
    letters.insert(letters.end(), {a, b, -a, -b});
  }
  return Word(std::move(letters));
}

SurfaceGroup SurfaceGroup::make(int genus) {
  if (genus < 2) throw InputError("genus must be at least 2, got " + std::to_string(genus));
  return SurfaceGroup{genus};
}

Representation::Representation(SurfaceGroup group, std::vector<Moebius> images)
    : group_(SurfaceGroup::make(group.genus)), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(group_.generator_count()))
    throw InputError("genus " + std::to_string(group_.genus) + " needs " +
                     std::to_string(group_.generator_count()) + " generators, got " +
                     std::to_string(images_.size()));
}

Representation Representation::trivial(int genus) {
  const auto group = SurfaceGroup::make(genus);
  return Representation(group, std::vector<Moebius>(static_cast<std::size_t>(group.generator_count())));
}

Moebius Representation::letter(int l) const {
  const int n = group_.generator_count();
  if (l == 0 || l > n || l < -n)
    throw InputError("letter " + std::to_string(l) + " out of range for genus " + std::to_string(genus()));
  const Moebius &m = images_[static_cast<std::size_t>(std::abs(l) - 1)];
  return l > 0 ? m : m.inverse();
}

Representation Representation::conjugated(const Moebius &g) const {
  const Moebius gi = g.inverse();
  std::vector<Moebius> out;
  out.reserve(images_.size());
  for (const auto &m : images_) out.push_back(g * m * gi);
  return Representation(group_, std::move(out));
}

Representation Representation::mirrored() const {
  std::vector<Moebius> out;
  out.reserve(images_.size());
  for (const auto &m : images_) out.push_back(Moebius::from_entries(m.a(), -m.b(), -m.c(), m.d()));
  return Representation(group_, std::move(out));
}

bool Representation::is_exact(double tol) const { return relator_residual(*this) < tol; }

Moebius evaluate(const Representation &rep, const Word &w) {
  Moebius out = Moebius::identity();
  for (int l : w.letters()) out = out * rep.letter(l);
  return out;
}

double relator_residual(const Representation &rep) {
  return evaluate(rep, surface_relator(rep.genus())).distance(Moebius::identity());
}

Representation fuchsian_regular_polygon(int genus) {
  const auto group = SurfaceGroup::make(genus);
  const double sides = 4.0 * genus;
  const double step = 2 * kPi / sides;
  const double inradius = std::acosh(1.0 / std::tan(kPi / sides));
  // Rotating direction vectors by phi rotates H^2 about i by 2 phi.
  auto turn = [](double angle) { return Moebius::rotation(angle / 2); };
  const Moebius pairing = Moebius::axis_translation(2 * inradius) * turn(kPi - kPi / genus);

  auto conjugate = [&](double theta) {
    const Moebius r = turn(theta);
    return r * pairing * r.inverse();
  };
  std::vector<Moebius> images;
  for (int j = 0; j < genus; ++j) {
    const double theta = 4 * j * step;
    images.push_back(conjugate(theta));
    images.push_back(conjugate(theta + step).inverse());
  }
  return Representation(group, std::move(images));
}

ElementType elem_type(const Moebius &m, double tol) {
  const double tr = std::abs(m.trace());
  if (tr < 2 - tol) return ElementType::elliptic;
  if (tr > 2 + tol) return ElementType::hyperbolic;
  return m.distance(Moebius::identity()) <= tol ? ElementType::identity : ElementType::parabolic;
}

std::string to_string(ElementType t) {
  switch (t) {
  case ElementType::identity:
    return "identity";
  case ElementType::elliptic:
    return "elliptic";
  case ElementType::parabolic:
    return "parabolic";
  case ElementType::hyperbolic:
    return "hyperbolic";
  }
  return "unknown";
}

double translation_length(const Moebius &m) {
  const double tr = std::abs(m.trace());
  return tr > 2 ? 2 * std::acosh(tr / 2) : 0.0;
}

LiftedCircleMap::LiftedCircleMap(const Moebius &base) : base_(base) {}

// Unwraps the angle over [0, x0] in panels. Moebius maps preserve the cyclic
// order of RP^1, so every panel increment lies in [0, pi).
double LiftedCircleMap::canonical(double x0) const {
  double prev = line_angle(base_, 0.0);
  double acc = prev;
  for (int i = 1; i <= kLiftPanels; ++i) {
    const double next = line_angle(base_, x0 * i / kLiftPanels);
    double inc = positive_mod(next - prev, kPi);
    if (inc > kPi - 1e-12) inc = 0;  // rounding noise on a stationary panel
    acc += inc;
    prev = next;
  }
  return acc;
}

double LiftedCircleMap::operator()(double x) const {
  const double turns = std::floor(x / kPi);
  double x0 = x - turns * kPi;
  double extra = turns;
  if (x0 >= kPi) {
    x0 -= kPi;
    extra += 1;
  }
  return canonical(x0) + (extra + static_cast<double>(shift_)) * kPi;
}

LiftedCircleMap LiftedCircleMap::inverse() const {
  LiftedCircleMap inv(base_.inverse());
  const double back = (*this)(inv(0.0));
  inv.shift_ = -static_cast<std::int64_t>(std::llround(back / kPi));
  return inv;
}

LiftedCircleMap circle_lift(const Moebius &m) { return LiftedCircleMap(m); }

double lifted_relator_displacement(const Representation &rep) {
  std::vector<LiftedCircleMap> maps;
  for (int j = 0; j < rep.genus(); ++j) {
    const LiftedCircleMap a(rep.images()[static_cast<std::size_t>(2 * j)]);
    const LiftedCircleMap b(rep.images()[static_cast<std::size_t>(2 * j + 1)]);
    maps.insert(maps.end(), {a, b, a.inverse(), b.inverse()});
  }
  // The word is read left to right as a matrix product, so the rightmost map acts first.
  double x = 0.0;
  for (auto it = maps.rbegin(); it != maps.rend(); ++it) x = (*it)(x);
  return x / kPi;
}

EulerClass euler_class(const Representation &rep) {
  const double turns = lifted_relator_displacement(rep);
  const double rounded = std::round(turns);
  const EulerClass out{static_cast<int>(rounded), std::abs(turns - rounded)};
  if (out.residual > kEulerIntegralityTolerance)
    throw IntegralityError("lifted relator is " + std::to_string(turns) +
                           " deck translations, not within tolerance of an integer (residual " +
                           std::to_string(out.residual) + ")");
  return out;
}

Moebius random_moebius(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    const double det = a * d - b * c;
    if (det > 0.1) return Moebius::from_entries(a, b, c, d);
    if (det < -0.1) return Moebius::from_entries(b, a, d, c);
  }
}

Moebius random_elliptic(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> angle(0.1, kPi - 0.1);
  const Moebius g = random_moebius(rng);
  return g * Moebius::rotation(angle(rng)) * g.inverse();
}

Representation random_elliptic_representation(int genus, std::mt19937_64 &rng) {
  const auto group = SurfaceGroup::make(genus);
  std::vector<Moebius> images;
  for (int i = 0; i < group.generator_count(); ++i) images.push_back(random_elliptic(rng));
  return Representation(group, std::move(images));
}

Representation random_elliptic_relator_representation(int genus, std::mt19937_64 &rng) {
  const auto group = SurfaceGroup::make(genus);
  std::vector<Moebius> images;
  int handle = 0;
  for (; handle + 1 < genus; handle += 2) {
    const Moebius a = random_elliptic(rng), b = random_elliptic(rng);
    images.insert(images.end(), {a, b, b, a});
  }
  if (handle < genus) {
    std::uniform_real_distribution<double> angle(0.1, kPi - 0.1);
    const Moebius g = random_moebius(rng);
    images.push_back(g * Moebius::rotation(angle(rng)) * g.inverse());
    images.push_back(g * Moebius::rotation(angle(rng)) * g.inverse());
  }
  return Representation(group, std::move(images));
}

} // namespace adsvol::surface
