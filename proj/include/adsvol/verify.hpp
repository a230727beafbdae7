#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "adsvol/rational.hpp"

namespace adsvol::verify {

// Frozen values, all relative to the reference frame (u1, u2, u3) with the
// calibrated metric (lambda = 2) and the standard orientation.
//
//   omega / vol:  [u2, u3] = -u1, so omega(u1, u2, u3) = -killing(u1, u1) = -4 trace2(u1, u1) = -2.
//   kappa:        [A ^ A](X, Y) = 2 ad_[X,Y], so every permutation term of
//                 trace(A ^ [A ^ A]) equals 2 omega(u1, u2, u3) = -4 and the
//                 1/6-weighted sum over S3 is -4.
//   path:         R(t) = ((t^2 - t) / 2) [A ^ A], and int_0^1 (t^2 - t) / 2 dt = -1/12.
//   calibration:  on (e, 0, e), Vol = 4e pi^2 gives (1 / 8 pi^2)(-1/12)(-4)(4e pi^2) = e/6,
//                 while cs_pair(e, 0, e) = -e/6; the ratio is -1.
Rational golden_omega_ratio();
Rational golden_kappa();
Rational golden_path_coefficient();
Rational golden_calibration();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs every identity check. Deterministic (fixed seeds).
std::vector<CheckResult> run_verification();

/// Hyperbolic distance in the upper half plane (curvature -1).
double upper_half_plane_distance(double x1, double y1, double x2, double y2);

/// lambda recovered from the metric-submersion condition: the hyperbolic speed
/// of t -> exp(tH) i is measured numerically, squared, and divided by trace2(H, H).
Rational lambda_from_submersion();

nlohmann::json to_json(const std::vector<CheckResult> &results);

} // namespace adsvol::verify
