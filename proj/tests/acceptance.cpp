#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "adsvol/admissibility.hpp"
#include "adsvol/errors.hpp"
#include "adsvol/forms.hpp"
#include "adsvol/lie.hpp"
#include "adsvol/rep_json.hpp"
#include "adsvol/surface.hpp"
#include "adsvol/verify.hpp"
#include "adsvol/volume_cs.hpp"
#include "process.hpp"
#include "sl2_oracle.hpp"

using namespace adsvol;
using lie::LieElement;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure reasons for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;
  void require(bool ok, const std::string &what) {
    if (!ok) failures.push_back(what);
  }
};

Rational q(long n, long d = 1) { return Rational(n, d); }

Outcome ac1_vol_cs_consistency() {
  Outcome o;
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  const auto start = Clock::now();
  int mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const long e = coord(rng), f = coord(rng);
    long k = 0;
    while (k == 0) k = coord(rng);
    const volume_cs::AdSDescriptor d(e, f, k);
    if (!(volume_cs::vol_from_cs(volume_cs::cs_pair(d)) == volume_cs::volume(d).signed_value)) ++mismatches;
  }
  const double t = seconds_since(start);
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatching triples");
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  o.summary = "10000 triples, " + std::to_string(mismatches) + " mismatches, " + std::to_string(t) + " s";
  return o;
}

Outcome ac2_unit_tangent() {
  Outcome o;
  for (long e = -50; e <= -2; ++e) {
    o.require(volume_cs::unit_tangent_volume(e) == volume_cs::volume(volume_cs::AdSDescriptor(e, 0, e)).signed_value,
              "unit tangent volume mismatch at e=" + std::to_string(e));
    o.require(volume_cs::cs_rho_id(e, e).value == q(-e, 6), "cs_rho_id(e, e) != -e/6 at e=" + std::to_string(e));
  }
  o.summary = "e in [-50, -2]";
  return o;
}

Outcome ac3_worked_numbers() {
  Outcome o;
  const auto v = volume_cs::volume(volume_cs::AdSDescriptor(-2, 0, -2));
  o.require(v.magnitude.coeff == q(8), "|volume(-2,0,-2)| = " + v.magnitude.coeff.str());
  const auto cs = volume_cs::cs_pair(volume_cs::AdSDescriptor(-2, 0, -2)).value;
  o.require(cs == q(1, 3), "cs_pair(-2,0,-2) = " + cs.str());
  o.require(volume_cs::cs_rho_id(2, 1).value == q(-2, 3), "cs_rho_id(2,1) = " + volume_cs::cs_rho_id(2, 1).value.str());
  o.require(volume_cs::cs_rho_id(2, 4).value == q(-1, 6), "cs_rho_id(2,4) = " + volume_cs::cs_rho_id(2, 4).value.str());
  o.summary = "8 pi^2, 1/3, -2/3, -1/6";
  return o;
}

Outcome ac4_maurer_cartan_and_curvature() {
  Outcome o;
  const auto a = forms::canonical_maurer_cartan();
  const auto residual = forms::maurer_cartan_residual(a);
  for (std::size_t i = 0; i < forms::index_tuples(2).size(); ++i)
    o.require(residual.values()[i] == lie::Matrix3::zero(), "Maurer-Cartan residual nonzero on pair " + std::to_string(i));
  const auto aa = forms::bracket_wedge(a, a);
  o.require(!aa.is_zero(), "[A ^ A] vanishes");
  for (long n = 0; n <= 10; ++n) {
    const Rational t = q(n, 10);
    const auto expected = ((t * t - t) / Rational(2)) * aa;
    o.require(forms::curvature_at(forms::ConnectionPath(t)) == expected, "curvature mismatch at t=" + t.str());
  }
  o.require(forms::curvature_at(forms::ConnectionPath(q(0))).is_zero(), "t=0 not flat");
  o.require(forms::curvature_at(forms::ConnectionPath(q(1))).is_zero(), "t=1 not flat");
  o.summary = "3 index pairs, 11 values of t";
  return o;
}

Outcome ac5_lie_identities() {
  Outcome o;
  std::mt19937_64 rng(1005);
  const auto start = Clock::now();
  for (int i = 0; i < 100; ++i) {
    const auto x = oracle::random_element(rng), y = oracle::random_element(rng), z = oracle::random_element(rng);
    const auto jac = lie::bracket(x, lie::bracket(y, z)) + lie::bracket(y, lie::bracket(z, x)) +
                     lie::bracket(z, lie::bracket(x, y));
    o.require(jac == LieElement{}, "Jacobi fails");
    o.require(lie::bracket(x, y) == -lie::bracket(y, x), "antisymmetry fails");
    o.require(lie::bracket(x, y) == oracle::bracket(x, y), "bracket disagrees with the 2x2 matrix oracle");
    o.require(lie::adjoint(lie::bracket(x, y)) == lie::commutator(lie::adjoint(x), lie::adjoint(y)),
              "adjoint is not a homomorphism");
    o.require(lie::killing(x, y) == Rational(4) * lie::trace2(x, y), "Killing != 4 trace2");
    o.require(lie::killing(x, y) == oracle::killing(x, y), "Killing disagrees with trace(ad ad) oracle");
  }
  const auto sig = lie::signature(lie::MetricTensor::calibrated().gram());
  o.require(sig == lie::Signature{2, 1, 0}, "metric signature is not (+,+,-)");
  const double t = seconds_since(start);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  o.summary = "100 random rational inputs per identity, signature (+,+,-), " + std::to_string(t) + " s";
  return o;
}

Outcome ac6_golden_constants() {
  Outcome o;
  const auto a = forms::canonical_maurer_cartan();
  const Rational kappa = forms::cs_density(a);
  const Rational c = volume_cs::geometry_calibration();
  o.require(!kappa.is_zero() && !c.is_zero(), "kappa or calibration is zero");
  o.require(kappa == verify::golden_kappa(), "kappa " + kappa.str() + " != golden " + verify::golden_kappa().str());
  o.require(c == verify::golden_calibration(), "calibration " + c.str() + " != golden " + verify::golden_calibration().str());
  std::mt19937_64 rng(1006);
  for (int i = 0; i < 5; ++i) {
    const auto v = oracle::random_frame(rng);
    const lie::OrientedFrame frame(v[0], v[1], v[2]);
    o.require(forms::cs_density(a, frame) == kappa, "kappa depends on the frame");
    o.require(forms::cs_density(a, frame, forms::Orientation::reversed) == -kappa, "kappa does not flip on a random frame");
  }
  o.require(forms::cs_density(a, lie::reference_frame(), forms::Orientation::reversed) == -kappa,
            "kappa does not flip under orientation reversal");
  o.require(volume_cs::geometry_calibration(-2, forms::Orientation::reversed) == -c,
            "calibration does not flip under orientation reversal");
  o.require(volume_cs::geometry_calibration(-4) == c, "calibration depends on the descriptor");
  o.require(forms::cs_density(forms::canonical_maurer_cartan()) == kappa && volume_cs::geometry_calibration() == c,
            "recomputation is not stable");
  o.summary = "kappa = " + kappa.str() + ", calibration = " + c.str() + ", 5 random frames";
  return o;
}

Outcome ac7_euler_classes() {
  Outcome o;
  o.require(surface::euler_class(surface::Representation::trivial(2)).value == 0, "trivial representation euler != 0");
  std::mt19937_64 rng(1007);
  std::ostringstream summary;
  for (int g = 2; g <= 4; ++g) {
    const auto start = Clock::now();
    const auto rho = surface::fuchsian_regular_polygon(g);
    const auto eu = surface::euler_class(rho);
    const double t = seconds_since(start);
    o.require(std::abs(eu.value) == 2 * g - 2, "genus " + std::to_string(g) + " euler " + std::to_string(eu.value));
    o.require(eu.residual < 1e-6, "genus " + std::to_string(g) + " residual " + std::to_string(eu.residual));
    o.require(t < 1.0, "genus " + std::to_string(g) + " runtime " + std::to_string(t) + " s");
    for (int i = 0; i < 3; ++i)
      o.require(surface::euler_class(rho.conjugated(surface::random_moebius(rng))).value == eu.value,
                "conjugation changes the euler class at genus " + std::to_string(g));
    summary << "g=" << g << ": " << eu.value << " (" << t << " s); ";
  }
  int gate_failures = 0, passed = 0, violations = 0;
  for (int i = 0; i < 200; ++i) {
    const int g = 2 + i % 2;
    const auto rep = i % 4 < 2 ? surface::random_elliptic_representation(g, rng)
                               : surface::random_elliptic_relator_representation(g, rng);
    try {
      const auto eu = surface::euler_class(rep);
      ++passed;
      if (std::abs(eu.value) > 2 * g - 2) ++violations;
    } catch (const IntegralityError &) {
      ++gate_failures;
    }
  }
  o.require(violations == 0, std::to_string(violations) + " Milnor-Wood violations");
  o.require(passed > 0, "no randomized representation passed the gate");
  summary << "Milnor-Wood: 200 reps, " << passed << " gated in, " << gate_failures << " gate failures, " << violations
          << " violations";
  o.summary = summary.str();
  return o;
}

Outcome ac8_admissibility() {
  Outcome o;
  using namespace admissibility;
  const auto rho = surface::fuchsian_regular_polygon(2);
  const auto self = admissibility_report(rho, rho, 4);
  o.require(std::abs(self.lipschitz.lower_bound - 1) < 1e-10, "sigma = rho bound " + std::to_string(self.lipschitz.lower_bound));
  o.require(self.verdict == Verdict::refuted, "sigma = rho not refuted");
  const auto trivial = admissibility_report(rho, Representation::trivial(2), 4);
  o.require(trivial.lipschitz.lower_bound == 0, "trivial sigma bound nonzero");
  o.require(trivial.verdict == Verdict::not_refuted, "trivial sigma refuted");

  std::mt19937_64 rng(1008);
  const auto sigma = surface::random_elliptic_relator_representation(2, rng);
  double previous = 0;
  for (int n = 2; n <= 6; ++n) {
    const double bound = lipschitz_lower_bound(rho, sigma, n).lower_bound;
    o.require(bound >= previous, "bound decreases at N=" + std::to_string(n));
    previous = bound;
  }

  const auto start = Clock::now();
  const auto serial = lipschitz_lower_bound(rho, sigma, 6);
  const double t = seconds_since(start);
  o.require(t < 10.0, "genus 2, N=6 runtime " + std::to_string(t) + " s");
  for (unsigned threads : {2u, 4u, 7u}) {
    Options opts;
    opts.threads = threads;
    const auto parallel = lipschitz_lower_bound(rho, sigma, 6, opts);
    o.require(parallel.lower_bound == serial.lower_bound && parallel.witness == serial.witness &&
                  parallel.words_scanned == serial.words_scanned,
              "result differs with " + std::to_string(threads) + " threads");
  }
  o.summary = "N=6 bound " + std::to_string(serial.lower_bound) + " over " + std::to_string(serial.words_scanned) +
              " words in " + std::to_string(t) + " s";
  return o;
}

Outcome ac9_cli() {
  Outcome o;
  using nlohmann::json;
  const std::string cli = ADSVOL_CLI;
  auto parsed = [&](const testproc::Result &r, const std::string &what) {
    o.require(r.exit_code == 0, what + " exit " + std::to_string(r.exit_code));
    if (!json::accept(r.out)) {
      o.require(false, what + " stdout is not JSON");
      return json::object();
    }
    return json::parse(r.out);
  };

  const auto vol = parsed(testproc::run(cli, "volume --e -2 --f 0 --k -2"), "volume");
  o.require(vol.value("volume_pi2", "") == "8/1", "volume_pi2 is not \"8/1\"");
  const auto cs = parsed(testproc::run(cli, "cs --e -2 --f 0 --k -2"), "cs");
  o.require(cs.value("cs", "") == "1/3", "cs is not \"1/3\"");

  const auto rep = (testproc::scratch_dir("acceptance") / "rho.json").string();
  parsed(testproc::run(cli, "rep --genus 2 --out " + testproc::quote(rep)), "rep");
  const auto eu = parsed(testproc::run(cli, "euler --rep " + testproc::quote(rep)), "euler");
  o.require(std::abs(eu.value("euler", 0)) == 2, "euler is not +-2");
  o.require(eu.value("residual", 1.0) < 1e-6, "euler residual too large");
  const auto lip = parsed(testproc::run(cli, "lipschitz --rho " + testproc::quote(rep) + " --sigma " +
                                                 testproc::quote(rep) + " --max-word-len 4"),
                          "lipschitz");
  o.require(std::abs(lip.value("lipschitz_lower_bound", 0.0) - 1) < 1e-10, "lipschitz bound is not 1");
  o.require(lip.value("verdict", "") == "refuted", "lipschitz verdict is not refuted");

  const int clean = testproc::run(cli, "verify").exit_code;
  const int lambda_fault = testproc::run(ADSVOL_FAULT_LAMBDA_CLI, "verify").exit_code;
  const int curvature_fault = testproc::run(ADSVOL_FAULT_CURVATURE_CLI, "verify").exit_code;
  o.require(clean == 0, "verify exit " + std::to_string(clean) + " on the clean build");
  o.require(lambda_fault == 1, "verify exit " + std::to_string(lambda_fault) + " with lambda = 1");
  o.require(curvature_fault == 1, "verify exit " + std::to_string(curvature_fault) + " with flipped curvature sign");
  o.summary = "verify exits: clean " + std::to_string(clean) + ", lambda fault " + std::to_string(lambda_fault) +
              ", curvature fault " + std::to_string(curvature_fault);
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 exact volume / Chern-Simons consistency", ac1_vol_cs_consistency},
      {"AC2 unit tangent bundle special case", ac2_unit_tangent},
      {"AC3 worked numbers", ac3_worked_numbers},
      {"AC4 Maurer-Cartan residual and curvature path", ac4_maurer_cartan_and_curvature},
      {"AC5 Lie algebra identities and metric signature", ac5_lie_identities},
      {"AC6 golden constants kappa and calibration", ac6_golden_constants},
      {"AC7 Euler classes", ac7_euler_classes},
      {"AC8 admissibility estimator", ac8_admissibility},
      {"AC9 CLI contract", ac9_cli},
  };
  int failed = 0;
  for (const auto &[name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception &e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    if (o.failures.empty()) {
      std::printf("PASS %s: %s\n", name.c_str(), o.summary.c_str());
    } else {
      ++failed;
      std::string detail;
      for (const auto &f : o.failures) detail += (detail.empty() ? "" : "; ") + f;
      std::printf("FAIL %s: %s\n", name.c_str(), detail.c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
