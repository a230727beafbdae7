#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adsvol/forms.hpp"
#include "adsvol/rational.hpp"

// Volumes of closed AdS 3-manifolds M(S, k) and Chern-Simons invariants of
// pairs of flat connections, as exact rationals.
namespace adsvol::volume_cs {

/// coeff * pi^2
struct PiSquaredScalar {
  Rational coeff;
  friend bool operator==(const PiSquaredScalar &, const PiSquaredScalar &) = default;
};

struct CsValue {
  Rational value;
  CsValue operator-() const { return {-value}; }
  friend bool operator==(const CsValue &, const CsValue &) = default;
};

/// Euler classes e of rho and f of sigma, bundle Euler number k.
class AdSDescriptor {
public:
  /// Throws InputError if k = 0, or if a genus is given and |e| or |f| exceeds 2g - 2.
  AdSDescriptor(long e, long f, long k, std::optional<int> genus = std::nullopt);

  long e() const { return e_; }
  long f() const { return f_; }
  long k() const { return k_; }
  const std::optional<int> &genus() const { return genus_; }
  /// Non-fatal observations, e.g. f = +-e (sigma cannot be non-Fuchsian).
  std::vector<std::string> warnings() const;

private:
  long e_, f_, k_;
  std::optional<int> genus_;
};

struct Volume {
  PiSquaredScalar signed_value;  // 4 (e^2 - f^2) / k
  PiSquaredScalar magnitude;
};

Volume volume(const AdSDescriptor &d);

/// 4 e pi^2, the volume of the unit tangent bundle. Throws InputError for e = 0.
PiSquaredScalar unit_tangent_volume(long e);

/// CS(rho, Id) = -f^2 / (6k) on M(S, k). Throws InputError for k = 0.
CsValue cs_rho_id(long f, long k);

/// CS(rho, sigma) = CS(rho, Id) - CS(sigma, Id) = (f^2 - e^2) / (6k).
CsValue cs_pair(const AdSDescriptor &d);

/// Pullback under a degree-d map multiplies the invariant by d.
CsValue cs_scale(long degree, const CsValue &v);

/// Vol = -24 pi^2 CS(nabla_L, nabla_R).
PiSquaredScalar vol_from_cs(const CsValue &v);

/// CS(1, 2) = CS(1, 3) + CS(3, 2).
CsValue chasles(const CsValue &ab, const CsValue &bc);

/// Ratio of the Chern-Simons invariant predicted by the invariant calculus,
///   (1 / 8 pi^2) * path_integral_coefficient() * kappa * Vol,
/// to cs_pair on the unit tangent bundle descriptor (e, 0, e), with Vol taken
/// from volume(e, 0, e). A value of 1 means the forms-level constants agree
/// with the closed formulas; anything else is the convention factor.
/// Throws InputError for e = 0.
Rational geometry_calibration(long e = -2, forms::Orientation orientation = forms::Orientation::standard);

/// {"e", "f", "k", "volume_signed_pi2", "volume_pi2", "cs"}; rationals as "p/q".
nlohmann::json to_json(const AdSDescriptor &d);

} // namespace adsvol::volume_cs
