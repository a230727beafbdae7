#include "adsvol/verify.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>

#include "adsvol/errors.hpp"
#include "adsvol/forms.hpp"
#include "adsvol/lie.hpp"
#include "adsvol/surface.hpp"
#include "adsvol/volume_cs.hpp"

namespace adsvol::verify {

using lie::LieElement;

Rational golden_omega_ratio() { return Rational(-2); }
Rational golden_kappa() { return Rational(-4); }
Rational golden_path_coefficient() { return Rational(-1, 12); }
Rational golden_calibration() { return Rational(-1); }

double upper_half_plane_distance(double x1, double y1, double x2, double y2) {
  const double dx = x1 - x2, dy = y1 - y2;
  return std::acosh(1 + (dx * dx + dy * dy) / (2 * y1 * y2));
}

Rational lambda_from_submersion() {
  // exp(tH) = diag(e^t, e^-t) sends i to e^{2t} i.
  const double t = 0.25;
  const double speed = upper_half_plane_distance(0, 1, 0, std::exp(2 * t)) / t;
  const long speed_squared = std::lround(speed * speed);
  return Rational(speed_squared) / lie::trace2(LieElement::H(), LieElement::H());
}

namespace {

LieElement random_element(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  return {{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))}};
}

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string &name, const std::function<std::string()> &body) {
    CheckResult r{name, false, {}};
    try {
      r.detail = body();
      r.pass = r.detail.empty();
      if (r.pass) r.detail = "ok";
    } catch (const std::exception &e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

std::string lie_identities(std::mt19937_64 &rng) {
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
    const Rational s(i + 1, 7);
    if (!lie::bracket(x, x).is_zero()) return "bracket(X, X) != 0";
    if (!(lie::bracket(x, y) == -lie::bracket(y, x))) return "antisymmetry";
    if (!(lie::bracket(s * x + y, z) == s * lie::bracket(x, z) + lie::bracket(y, z))) return "bilinearity";
    const auto jac = lie::bracket(x, lie::bracket(y, z)) + lie::bracket(y, lie::bracket(z, x)) +
                     lie::bracket(z, lie::bracket(x, y));
    if (!jac.is_zero()) return "Jacobi identity";
  }
  return {};
}

std::string adjoint_homomorphism(std::mt19937_64 &rng) {
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(rng), y = random_element(rng);
    if (!(lie::adjoint(lie::bracket(x, y)) == lie::commutator(lie::adjoint(x), lie::adjoint(y))))
      return "ad([X, Y]) != [ad X, ad Y]";
  }
  return {};
}

std::string killing_trace(std::mt19937_64 &rng) {
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(rng), y = random_element(rng);
    if (lie::killing(x, y) != Rational(4) * lie::trace2(x, y)) return "killing != 4 trace2";
  }
  return {};
}

std::string metric_signature() {
  const auto sig = lie::signature(lie::MetricTensor::calibrated().gram());
  if (!(sig == lie::Signature{2, 1, 0})) return "metric signature is not (2, 1)";
  return {};
}

std::string metric_calibration() {
  const Rational oracle = lambda_from_submersion();
  if (oracle != lie::calibrated_lambda())
    return "lambda " + lie::calibrated_lambda().str() + " disagrees with submersion oracle " + oracle.str();
  const auto g = lie::MetricTensor::calibrated();
  const auto &u = lie::reference_frame();
  const std::array<int, 3> signs{1, 1, -1};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (g(u[i], u[j]) != Rational(i == j ? signs[i] : 0)) return "reference frame is not orthonormal";
  return {};
}

std::string omega_volume(std::mt19937_64 &rng) {
  const Rational c0 = lie::omega_volume_ratio();
  if (c0 != golden_omega_ratio()) return "omega / vol = " + c0.str() + ", frozen " + golden_omega_ratio().str();
  for (int i = 0; i < 50; ++i) {
    const auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
    if (lie::omega(x, y, z) != c0 * lie::volume_form(x, y, z)) return "omega is not proportional to vol";
    if (!lie::omega(x, x, z).is_zero()) return "omega is not alternating";
  }
  return {};
}

std::string maurer_cartan() {
  if (!forms::maurer_cartan_residual(forms::canonical_maurer_cartan()).is_zero())
    return "dA + 1/2 [A ^ A] != 0";
  return {};
}

std::string curvature_path() {
  const auto a = forms::canonical_maurer_cartan();
  const auto aa = forms::bracket_wedge(a, a);
  for (int i = 0; i <= 10; ++i) {
    const Rational t(i, 10);
    const Rational expected = (t * t - t) / Rational(2);
    if (!(forms::curvature_at(forms::ConnectionPath(t)) == expected * aa))
      return "R(t) != ((t^2 - t) / 2) [A ^ A] at t = " + t.str();
  }
  if (!(forms::curvature_at(forms::ConnectionPath(Rational(1, 2))) == Rational(-1, 8) * aa))
    return "R(1/2) != -1/8 [A ^ A]";
  if (!forms::curvature_at(forms::ConnectionPath(Rational(0))).is_zero() ||
      !forms::curvature_at(forms::ConnectionPath(Rational(1))).is_zero())
    return "endpoints of the path are not flat";
  const Rational coeff = forms::path_integral_coefficient();
  if (coeff != golden_path_coefficient()) return "path coefficient " + coeff.str() + " != -1/12";
  return {};
}

std::string cs_density() {
  const auto a = forms::canonical_maurer_cartan();
  const Rational kappa = forms::cs_density(a);
  if (kappa != golden_kappa()) return "kappa = " + kappa.str() + ", frozen " + golden_kappa().str();
  const auto &u = lie::reference_frame();
  // (u2, -u1, u3) and a boost in the (u2, u3) plane with cosh = 5/4, sinh = 3/4.
  const Rational c(5, 4), s(3, 4);
  const std::vector<lie::OrientedFrame> frames{
      lie::OrientedFrame(u[1], -u[0], u[2]),
      lie::OrientedFrame(u[0], c * u[1] + s * u[2], s * u[1] + c * u[2]),
  };
  for (const auto &f : frames)
    if (forms::cs_density(a, f) != kappa) return "kappa depends on the frame";
  if (forms::cs_density(a, u, forms::Orientation::reversed) != -kappa) return "kappa does not flip with orientation";
  if (forms::cs_density(Rational(2) * a) != Rational(8) * kappa) return "kappa is not cubic";
  return {};
}

std::string vol_cs_consistency() {
  std::mt19937_64 rng(20150401);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int i = 0; i < 10000; ++i) {
    long k = 0;
    while (k == 0) k = dist(rng);
    const volume_cs::AdSDescriptor d(dist(rng), dist(rng), k);
    if (!(volume_cs::vol_from_cs(volume_cs::cs_pair(d)) == volume_cs::volume(d).signed_value))
      return "Vol != -24 pi^2 CS at (" + std::to_string(d.e()) + ", " + std::to_string(d.f()) + ", " +
             std::to_string(d.k()) + ")";
  }
  return {};
}

std::string unit_tangent() {
  for (long e = -50; e <= -2; ++e) {
    if (!(volume_cs::unit_tangent_volume(e) == volume_cs::volume({e, 0, e}).signed_value))
      return "Vol(US_e) != volume(e, 0, e) at e = " + std::to_string(e);
    if (volume_cs::cs_rho_id(e, e).value != Rational(-e, 6)) return "CS(rho_e, Id) != -e/6 on M(S_e, e)";
  }
  return {};
}

std::string chasles() {
  for (long e = -6; e <= 6; ++e)
    for (long f = -6; f <= 6; ++f)
      for (long k : {-3L, -1L, 2L, 5L}) {
        const volume_cs::AdSDescriptor d(e, f, k);
        if (!(volume_cs::cs_pair(d) ==
              volume_cs::chasles(volume_cs::cs_rho_id(e, k), -volume_cs::cs_rho_id(f, k))))
          return "Chasles decomposition";
        const auto x = volume_cs::cs_rho_id(e, k);
        if (!volume_cs::chasles(x, -x).value.is_zero()) return "CS(1, 2) + CS(2, 1) != 0";
      }
  return {};
}

std::string degree_lemma() {
  for (long e = -8; e <= -2; e += 2) {
    // pullback under the degree-e map M(S_e, 1) -> M(S_e, e)
    if (!(volume_cs::cs_scale(e, volume_cs::cs_rho_id(e, e)) == volume_cs::cs_rho_id(e, 1)))
      return "degree-e pullback of CS on M(S_e, e)";
    for (long k : {-4L, -1L, 3L, 7L})
      if (!(volume_cs::cs_scale(k, volume_cs::cs_rho_id(e, k)) == volume_cs::cs_rho_id(e, 1)))
        return "degree-k pullback from M(S, k) to M(S, 1)";
  }
  const volume_cs::CsValue v{Rational(5, 7)};
  for (long d1 = -3; d1 <= 3; ++d1)
    for (long d2 = -3; d2 <= 3; ++d2)
      if (!(volume_cs::cs_scale(d1 * d2, v) == volume_cs::cs_scale(d1, volume_cs::cs_scale(d2, v))))
        return "degree functoriality";
  return {};
}

std::string euler_fuchsian() {
  if (surface::euler_class(surface::Representation::trivial(2)).value != 0) return "trivial representation";
  for (int g = 2; g <= 4; ++g) {
    const auto rho = surface::fuchsian_regular_polygon(g);
    if (surface::relator_residual(rho) >= 1e-9) return "relator residual at genus " + std::to_string(g);
    const auto eu = surface::euler_class(rho);
    if (std::abs(eu.value) != 2 * g - 2) return "|euler| != 2g - 2 at genus " + std::to_string(g);
  }
  return {};
}

std::string milnor_wood() {
  std::mt19937_64 rng(8675309);
  int passed_gate = 0;
  for (int i = 0; i < 200; ++i) {
    const int g = 2 + i % 3;
    const auto rep = i % 2 == 0 ? surface::random_elliptic_relator_representation(g, rng)
                                : surface::random_elliptic_representation(g, rng);
    try {
      const auto eu = surface::euler_class(rep);
      ++passed_gate;
      if (std::abs(eu.value) > 2 * g - 2) return "Milnor-Wood violated";
    } catch (const IntegralityError &) {
    }
  }
  for (int g = 2; g <= 4; ++g) {
    const auto rho = surface::fuchsian_regular_polygon(g).conjugated(surface::random_moebius(rng));
    if (std::abs(surface::euler_class(rho).value) > 2 * g - 2) return "Milnor-Wood violated (Fuchsian)";
  }
  if (passed_gate < 100) return "too few representations passed the integrality gate";
  return {};
}

std::string geometry_calibration() {
  for (long e : {-2L, -4L}) {
    const Rational c = volume_cs::geometry_calibration(e);
    if (c != golden_calibration()) return "calibration " + c.str() + ", frozen " + golden_calibration().str();
  }
  if (volume_cs::geometry_calibration(-2, forms::Orientation::reversed) != -golden_calibration())
    return "calibration does not flip with orientation";
  return {};
}

} // namespace

std::vector<CheckResult> run_verification() {
  Suite s;
  std::mt19937_64 rng(1974);
  s.check("jacobi", [&] { return lie_identities(rng); });
  s.check("adjoint-homomorphism", [&] { return adjoint_homomorphism(rng); });
  s.check("killing-trace", [&] { return killing_trace(rng); });
  s.check("metric-signature", metric_signature);
  s.check("metric-calibration", metric_calibration);
  s.check("omega-volume", [&] { return omega_volume(rng); });
  s.check("maurer-cartan", maurer_cartan);
  s.check("curvature-path", curvature_path);
  s.check("cs-density", cs_density);
  s.check("vol-cs-consistency", vol_cs_consistency);
  s.check("unit-tangent", unit_tangent);
  s.check("chasles", chasles);
  s.check("degree-lemma", degree_lemma);
  s.check("euler-fuchsian", euler_fuchsian);
  s.check("milnor-wood", milnor_wood);
  s.check("geometry-calibration", geometry_calibration);
  return s.results;
}

nlohmann::json to_json(const std::vector<CheckResult> &results) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  for (const auto &r : results) {
    checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  return {{"checks", checks}, {"all_pass", all}};
}

} // namespace adsvol::verify
