#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adsvol/surface.hpp"

// Lower bounds for the best Lipschitz constant of a (rho, sigma)-equivariant
// map H^2 -> H^2, from translation-length ratios over reduced words.
namespace adsvol::admissibility {

using surface::Representation;
using surface::Word;

struct LipschitzEstimate {
  /// sup over scanned words of l(sigma(w)) / l(rho(w)); 0 if no word clears the floor.
  double lower_bound = 0;
  Word witness;
  std::uint64_t words_scanned = 0;
  int max_word_length = 0;
  double denominator_floor = 0;
};

enum class Verdict { refuted, not_refuted };
std::string to_string(Verdict v);

struct AdmissibilityReport {
  int euler_rho = 0;
  int euler_sigma = 0;
  LipschitzEstimate lipschitz;
  /// `not_refuted` does not certify admissibility; the bound is one-sided.
  Verdict verdict = Verdict::not_refuted;
};

struct Options {
  double denominator_floor = 1e-6;
  /// Worker threads; the result does not depend on this.
  unsigned threads = 1;
  /// Refuse enumerations larger than this many words.
  std::uint64_t max_words = 10'000'000;
};

/// Letters in shortlex order: 1, -1, 2, -2, ..., 2g, -2g.
std::vector<int> letter_order(int genus);
/// Shortlex comparison under letter_order.
bool shortlex_less(const Word &x, const Word &y);

/// 4g (4g - 1)^{L - 1}, summed for L = 1..max_length.
std::uint64_t reduced_word_count(int genus, int max_length);

/// Calls `visit` once for every reduced word of length 1..max_length, in shortlex order.
/// Throws InputError for genus < 2 or max_length < 1.
void enumerate_reduced_words(int genus, int max_length, const std::function<void(const Word &)> &visit);

/// Throws InputError on genus mismatch, max_length < 1, floor <= 0, or an
/// enumeration larger than options.max_words.
LipschitzEstimate lipschitz_lower_bound(const Representation &rho, const Representation &sigma,
                                        int max_length, const Options &options = {});

/// Requires rho to pass the Euler integrality gate with |euler| = 2g - 2
/// (InputError otherwise); integrality failures of either side propagate.
/// The verdict is `refuted` iff the lower bound is >= 1 or |euler(sigma)| = 2g - 2.
AdmissibilityReport admissibility_report(const Representation &rho, const Representation &sigma,
                                         int max_length, const Options &options = {});

nlohmann::json to_json(const AdmissibilityReport &report);

} // namespace adsvol::admissibility
