#include "adsvol/volume_cs.hpp"

#include <cstdlib>

#include "adsvol/errors.hpp"

namespace adsvol::volume_cs {

AdSDescriptor::AdSDescriptor(long e, long f, long k, std::optional<int> genus)
    : e_(e), f_(f), k_(k), genus_(genus) {
  if (k_ == 0) throw InputError("bundle Euler number k must be nonzero");
  if (genus_) {
    if (*genus_ < 2) throw InputError("genus must be at least 2");
    const long bound = 2L * *genus_ - 2;
    if (std::labs(e_) > bound || std::labs(f_) > bound)
      throw InputError("Euler classes violate the Milnor-Wood bound |e|, |f| <= " + std::to_string(bound));
  }
}

std::vector<std::string> AdSDescriptor::warnings() const {
  std::vector<std::string> w;
  if (std::labs(f_) == std::labs(e_))
    w.push_back("f = +-e: sigma has the Euler class of a Fuchsian representation, so the pair is not admissible");
  return w;
}

Volume volume(const AdSDescriptor &d) {
  const Rational e(d.e()), f(d.f());
  const Rational v = Rational(4) * (e * e - f * f) / Rational(d.k());
  return {{v}, {v.abs()}};
}

PiSquaredScalar unit_tangent_volume(long e) {
  if (e == 0) throw InputError("unit tangent bundle volume needs nonzero e");
  return {Rational(4) * Rational(e)};
}

CsValue cs_rho_id(long f, long k) {
  if (k == 0) throw InputError("bundle Euler number k must be nonzero");
  const Rational fr(f);
  return {-(fr * fr) / (Rational(6) * Rational(k))};
}

CsValue cs_pair(const AdSDescriptor &d) { return chasles(cs_rho_id(d.e(), d.k()), -cs_rho_id(d.f(), d.k())); }

CsValue cs_scale(long degree, const CsValue &v) { return {Rational(degree) * v.value}; }

PiSquaredScalar vol_from_cs(const CsValue &v) { return {Rational(-24) * v.value}; }

CsValue chasles(const CsValue &ab, const CsValue &bc) { return {ab.value + bc.value}; }

Rational geometry_calibration(long e, forms::Orientation orientation) {
  if (e == 0) throw InputError("calibration descriptor needs nonzero e");
  const AdSDescriptor unit_tangent(e, 0, e);
  const Rational kappa = forms::cs_density(forms::canonical_maurer_cartan(), lie::reference_frame(), orientation);
  // CS = (1 / 8 pi^2) int_gamma omega^CS, and int_gamma omega^CS = coefficient * kappa * Vol.
  const Rational geometric =
      forms::path_integral_coefficient() * kappa * volume(unit_tangent).signed_value.coeff / Rational(8);
  return geometric / cs_pair(unit_tangent).value;
}

nlohmann::json to_json(const AdSDescriptor &d) {
  const Volume v = volume(d);
  return {{"e", d.e()},
          {"f", d.f()},
          {"k", d.k()},
          {"volume_signed_pi2", v.signed_value.coeff.str()},
          {"volume_pi2", v.magnitude.coeff.str()},
          {"cs", cs_pair(d).value.str()}};
}

} // namespace adsvol::volume_cs
