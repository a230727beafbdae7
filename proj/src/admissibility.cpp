#include "adsvol/admissibility.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <limits>
#include <string>

#include "adsvol/errors.hpp"

namespace adsvol::admissibility {

using surface::Moebius;

std::string to_string(Verdict v) { return v == Verdict::refuted ? "refuted" : "not_refuted"; }

std::vector<int> letter_order(int genus) {
  std::vector<int> order;
  for (int i = 1; i <= 2 * genus; ++i) order.insert(order.end(), {i, -i});
  return order;
}

namespace {

int letter_rank(int l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

struct Best {
  bool found = false;
  double ratio = 0;
  std::vector<int> witness;
  std::uint64_t scanned = 0;

  // Max ratio; ties go to the shortlex-first word, so merge order is irrelevant.
  void offer(double r, const std::vector<int> &w) {
    if (!found || r > ratio || (r == ratio && shortlex_less(Word(w), Word(witness)))) {
      found = true;
      ratio = r;
      witness = w;
    }
  }
  void merge(const Best &o) {
    scanned += o.scanned;
    if (o.found) offer(o.ratio, o.witness);
  }
};

// Depth-first scan of the subtree of reduced words beginning with `first`.
class SubtreeScan {
public:
  SubtreeScan(const Representation &rho, const Representation &sigma, int max_length, double floor)
      : rho_(rho), sigma_(sigma), max_length_(max_length), floor_(floor) {}

  Best run(int first) {
    word_.assign(1, first);
    visit(rho_.letter(first), sigma_.letter(first));
    return best_;
  }

private:
  void visit(const Moebius &r, const Moebius &s) {
    ++best_.scanned;
    const double lr = surface::translation_length(r);
    if (lr > floor_) best_.offer(surface::translation_length(s) / lr, word_);
    if (static_cast<int>(word_.size()) == max_length_) return;
    const int last = word_.back();
    for (int l : letter_order(rho_.genus())) {
      if (l == -last) continue;
      word_.push_back(l);
      visit(r * rho_.letter(l), s * sigma_.letter(l));
      word_.pop_back();
    }
  }

  const Representation &rho_;
  const Representation &sigma_;
  int max_length_;
  double floor_;
  std::vector<int> word_;
  Best best_;
};

} // namespace

bool shortlex_less(const Word &x, const Word &y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return std::ranges::lexicographical_compare(x.letters(), y.letters(), [](int a, int b) {
    return letter_rank(a) < letter_rank(b);
  });
}

std::uint64_t reduced_word_count(int genus, int max_length) {
  const std::uint64_t n = 4 * static_cast<std::uint64_t>(genus);
  std::uint64_t total = 0, level = n;
  for (int len = 1; len <= max_length; ++len) {
    total += level;
    if (len < max_length) {
      if (level > std::numeric_limits<std::uint64_t>::max() / (n - 1))
        return std::numeric_limits<std::uint64_t>::max();
      level *= n - 1;
    }
  }
  return total;
}

void enumerate_reduced_words(int genus, int max_length, const std::function<void(const Word &)> &visit) {
  surface::SurfaceGroup::make(genus);
  if (max_length < 1) throw InputError("maximum word length must be at least 1");
  const auto order = letter_order(genus);
  std::vector<std::vector<int>> level{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto &w : level)
      for (int l : order) {
        if (!w.empty() && w.back() == -l) continue;
        auto e = w;
        e.push_back(l);
        visit(Word(e));
        next.push_back(std::move(e));
      }
    level = std::move(next);
  }
}

LipschitzEstimate lipschitz_lower_bound(const Representation &rho, const Representation &sigma,
                                        int max_length, const Options &options) {
  if (rho.genus() != sigma.genus())
    throw InputError("genus mismatch: rho has genus " + std::to_string(rho.genus()) + ", sigma " +
                     std::to_string(sigma.genus()));
  if (max_length < 1) throw InputError("maximum word length must be at least 1");
  if (!(options.denominator_floor > 0)) throw InputError("denominator floor must be positive");
  const std::uint64_t count = reduced_word_count(rho.genus(), max_length);
  if (count > options.max_words)
    throw InputError("enumeration of " + std::to_string(count) + " words exceeds the cap of " +
                     std::to_string(options.max_words));

  const auto firsts = letter_order(rho.genus());
  std::vector<Best> parts(firsts.size());
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < firsts.size(); ++i)
      parts[i] = SubtreeScan(rho, sigma, max_length, options.denominator_floor).run(firsts[i]);
  } else {
    // Round-robin the leading letters over the workers.
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < firsts.size(); i += threads)
          parts[i] = SubtreeScan(rho, sigma, max_length, options.denominator_floor).run(firsts[i]);
      }));
    for (auto &w : workers) w.get();
  }

  Best total;
  for (const auto &p : parts) total.merge(p);

  LipschitzEstimate est;
  est.lower_bound = total.ratio;
  est.witness = Word(total.witness);
  est.words_scanned = total.scanned;
  est.max_word_length = max_length;
  est.denominator_floor = options.denominator_floor;
  return est;
}

AdmissibilityReport admissibility_report(const Representation &rho, const Representation &sigma,
                                         int max_length, const Options &options) {
  AdmissibilityReport report;
  const int maximal = -rho.group().euler_characteristic();
  report.euler_rho = surface::euler_class(rho).value;
  if (std::abs(report.euler_rho) != maximal)
    throw InputError("rho is not Fuchsian: Euler class " + std::to_string(report.euler_rho) +
                     ", expected magnitude " + std::to_string(maximal));
  report.euler_sigma = surface::euler_class(sigma).value;
  report.lipschitz = lipschitz_lower_bound(rho, sigma, max_length, options);
  const bool refuted = report.lipschitz.lower_bound >= 1 || std::abs(report.euler_sigma) == maximal;
  report.verdict = refuted ? Verdict::refuted : Verdict::not_refuted;
  return report;
}

nlohmann::json to_json(const AdmissibilityReport &report) {
  return {{"euler_rho", report.euler_rho},
          {"euler_sigma", report.euler_sigma},
          {"lipschitz_lower_bound", report.lipschitz.lower_bound},
          {"witness", report.lipschitz.witness.letters()},
          {"max_word_length", report.lipschitz.max_word_length},
          {"verdict", to_string(report.verdict)}};
}

} // namespace adsvol::admissibility
