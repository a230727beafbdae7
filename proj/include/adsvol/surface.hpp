#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Surface-group representations into PSL(2, R), in double precision.
namespace adsvol::surface {

/// Element of PSL(2, R): a row-major 2x2 matrix with determinant 1, stored
/// with nonnegative trace (or, for trace 0, first nonzero entry positive).
class Moebius {
public:
  Moebius() : Moebius(identity()) {}
  /// Rescales to determinant 1 and picks the sign representative.
  /// Throws InputError if det <= 0 or an entry is not finite.
  static Moebius from_entries(double a, double b, double c, double d);
  static Moebius identity();
  /// Rotates direction vectors by `alpha`; acts on line angles by theta -> theta + alpha.
  static Moebius rotation(double alpha);
  /// diag(e^{l/2}, e^{-l/2}): translation by l along the geodesic through i.
  static Moebius axis_translation(double length);

  double a() const { return m_[0]; }
  double b() const { return m_[1]; }
  double c() const { return m_[2]; }
  double d() const { return m_[3]; }
  const std::array<double, 4> &entries() const { return m_; }
  double trace() const { return m_[0] + m_[3]; }
  double determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  Moebius inverse() const;
  /// Frobenius distance to `o`, minimized over the sign ambiguity.
  double distance(const Moebius &o) const;

  friend Moebius operator*(const Moebius &x, const Moebius &y);

private:
  explicit Moebius(std::array<double, 4> m) : m_(m) {}
  /// Picks the sign representative without rescaling.
  static Moebius sign_normalized(std::array<double, 4> m);
  std::array<double, 4> m_;
};

/// Freely reduced word in a_1, b_1, ..., a_g, b_g. Letter i in {1..2g} is the
/// i-th generator (a_j = 2j - 1, b_j = 2j), -i its inverse.
class Word {
public:
  Word() = default;
  /// Cancels adjacent inverse pairs. Throws InputError on a zero letter.
  explicit Word(std::vector<int> letters);
  const std::vector<int> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Word inverse() const;
  friend Word operator*(const Word &x, const Word &y);
  friend bool operator==(const Word &, const Word &) = default;

private:
  std::vector<int> letters_;
};

/// prod_j [a_j, b_j] for genus g.
Word surface_relator(int genus);

struct SurfaceGroup {
  int genus;
  /// Throws InputError for genus < 2.
  static SurfaceGroup make(int genus);
  int euler_characteristic() const { return 2 - 2 * genus; }
  int generator_count() const { return 2 * genus; }
};

class Representation {
public:
  /// `images` holds a_1, b_1, ..., a_g, b_g. Throws InputError unless there are 2g of them.
  Representation(SurfaceGroup group, std::vector<Moebius> images);
  static Representation trivial(int genus);

  const SurfaceGroup &group() const { return group_; }
  int genus() const { return group_.genus; }
  const std::vector<Moebius> &images() const { return images_; }
  /// Image of a nonzero letter. Throws InputError if out of range.
  Moebius letter(int l) const;

  /// g rho g^{-1}
  Representation conjugated(const Moebius &g) const;
  /// Conjugation by diag(1, -1): orientation-reversing, negates the Euler class.
  Representation mirrored() const;
  /// relator_residual below `tol`.
  bool is_exact(double tol = 1e-9) const;

private:
  SurfaceGroup group_;
  std::vector<Moebius> images_;
};

Moebius evaluate(const Representation &rep, const Word &w);

/// Frobenius distance (mod sign) from the image of the surface relator to the identity.
double relator_residual(const Representation &rep);

/// Holonomy of the regular hyperbolic 4g-gon with angle sum 2 pi.
///
/// Side m of the polygon has its midpoint in direction 2 pi m / 4g from the
/// center i. a_j pairs side 4j+2 with side 4j and b_j^{-1} pairs side 4j+3
/// with side 4j+1; each pairing is R_theta X R_theta^{-1} for the fixed side
/// pairing X = T R_{pi - pi/g}, T the translation by twice the inradius
/// (cosh r = cot(pi / 4g)). With these labels prod [a_j, b_j] = 1 and the
/// Euler class is +(2g - 2) = -chi(S).
/// Throws InputError for genus < 2.
Representation fuchsian_regular_polygon(int genus);

enum class ElementType { identity, elliptic, parabolic, hyperbolic };
ElementType elem_type(const Moebius &m, double tol = 1e-9);
std::string to_string(ElementType t);

/// 2 arccosh(|tr| / 2) for hyperbolic elements, 0 otherwise.
double translation_length(const Moebius &m);

/// Lift to R of the action of a Moebius map on RP^1 = R / pi Z, where a line
/// is parametrized by its angle theta. The lift commutes with x -> x + pi.
class LiftedCircleMap {
public:
  /// Canonical lift with lift(0) in [0, pi).
  explicit LiftedCircleMap(const Moebius &base);
  const Moebius &base() const { return base_; }
  /// Integer multiple of pi added to the canonical lift.
  std::int64_t deck_shift() const { return shift_; }
  double operator()(double x) const;
  /// The exact inverse of this lift (not merely some lift of base^{-1}).
  LiftedCircleMap inverse() const;

private:
  LiftedCircleMap(const Moebius &base, std::int64_t shift) : base_(base), shift_(shift) {}
  double canonical(double x0) const;
  Moebius base_;
  std::int64_t shift_ = 0;
};

LiftedCircleMap circle_lift(const Moebius &m);

struct EulerClass {
  int value;
  /// |displacement / pi - value| for the lifted relator at 0.
  double residual;
};

/// Maximum residual accepted by euler_class.
inline constexpr double kEulerIntegralityTolerance = 1e-6;

/// Lifted relator prod [lift(a_j), lift(b_j)] evaluated at 0, in units of pi.
double lifted_relator_displacement(const Representation &rep);

/// Rounds the lifted relator displacement. Throws IntegralityError when the
/// residual exceeds kEulerIntegralityTolerance.
EulerClass euler_class(const Representation &rep);

/// g R_theta g^{-1} with theta uniform in [0.1, pi - 0.1] and g from random_moebius.
Moebius random_elliptic(std::mt19937_64 &rng);
/// Random element with entries of moderate size (det normalized).
Moebius random_moebius(std::mt19937_64 &rng);

/// All generators elliptic and unconstrained; generally fails the relator.
Representation random_elliptic_representation(int genus, std::mt19937_64 &rng);
/// All generators elliptic with the surface relator satisfied exactly: handles
/// are paired as (a, b), (b, a); an unpaired last handle uses two rotations
/// about one common fixed point.
Representation random_elliptic_relator_representation(int genus, std::mt19937_64 &rng);

} // namespace adsvol::surface
