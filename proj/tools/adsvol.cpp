// adsvol: exact volumes and Chern-Simons invariants of closed AdS 3-manifolds,
// Euler classes and admissibility estimates for surface-group representations.
//
// stdout carries JSON only; diagnostics go to stderr.
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 I/O error,
// 4 Euler class integrality failure.

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "adsvol/admissibility.hpp"
#include "adsvol/errors.hpp"
#include "adsvol/rep_json.hpp"
#include "adsvol/surface.hpp"
#include "adsvol/verify.hpp"
#include "adsvol/volume_cs.hpp"

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kIoError = 3, kIntegrality = 4 };

using nlohmann::json;
using namespace adsvol;

void emit(const json &j) { std::cout << j.dump() << '\n'; }

std::uint64_t max_words_from_env() {
  const char *raw = std::getenv("ADSVOL_MAX_WORDS");
  if (!raw) return 10'000'000;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v <= 0) throw std::invalid_argument(raw);
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception &) {
    throw InputError("ADSVOL_MAX_WORDS must be a positive integer, got '" + std::string(raw) + "'");
  }
}

int run_rep(int genus, const std::string &out) {
  const auto rho = surface::fuchsian_regular_polygon(genus);
  surface::write_representation(rho, out);
  const double residual = surface::relator_residual(rho);
  const auto eu = surface::euler_class(rho);
  std::cerr << "genus " << genus << ": relator residual " << residual << ", euler class " << eu.value << '\n';
  emit({{"genus", genus}, {"out", out}, {"relator_residual", residual}, {"euler", eu.value}});
  return kOk;
}

int run_euler(const std::string &path) {
  const auto rep = surface::read_representation(path);
  const auto eu = surface::euler_class(rep);
  emit({{"genus", rep.genus()},
        {"euler", eu.value},
        {"magnitude", std::abs(eu.value)},
        {"residual", eu.residual},
        {"relator_residual", surface::relator_residual(rep)}});
  return kOk;
}

int run_lipschitz(const std::string &rho_path, const std::string &sigma_path, int max_len) {
  const auto rho = surface::read_representation(rho_path);
  const auto sigma = surface::read_representation(sigma_path);
  admissibility::Options opts;
  opts.max_words = max_words_from_env();
  opts.threads = std::max(1u, std::thread::hardware_concurrency());
  const auto report = admissibility::admissibility_report(rho, sigma, max_len, opts);
  std::cerr << report.lipschitz.words_scanned << " words scanned; verdict "
            << admissibility::to_string(report.verdict) << " (not_refuted is not a certificate)\n";
  emit(admissibility::to_json(report));
  return kOk;
}

int run_volume_cs(long e, long f, long k) {
  const volume_cs::AdSDescriptor d(e, f, k);
  for (const auto &w : d.warnings()) std::cerr << "warning: " << w << '\n';
  emit(volume_cs::to_json(d));
  return kOk;
}

int run_verify() {
  const auto results = verify::run_verification();
  bool all = true;
  for (const auto &r : results) {
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.pass) std::cerr << ": " << r.detail;
    std::cerr << '\n';
    all = all && r.pass;
  }
  emit(verify::to_json(results));
  return all ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact Chern-Simons and volume computations for closed AdS 3-manifolds"};
  app.require_subcommand(1);

  int genus = 0;
  std::string out, rep_path, rho_path, sigma_path;
  long e = 0, f = 0, k = 0;
  int max_len = 6;

  auto *rep = app.add_subcommand("rep", "Write the regular-polygon Fuchsian representation");
  rep->add_option("--genus", genus, "Surface genus (>= 2)")->required();
  rep->add_option("--out", out, "Output JSON path")->required();

  auto *euler = app.add_subcommand("euler", "Euler class of a representation file");
  euler->add_option("--rep", rep_path, "Representation JSON")->required();

  auto *lip = app.add_subcommand("lipschitz", "Translation-length ratio bound and admissibility verdict");
  lip->add_option("--rho", rho_path, "Fuchsian representation JSON")->required();
  lip->add_option("--sigma", sigma_path, "Second representation JSON")->required();
  lip->add_option("--max-word-len", max_len, "Maximum reduced word length")->capture_default_str();

  auto add_efk = [&](CLI::App *cmd) {
    cmd->add_option("--e", e, "Euler class of rho")->required();
    cmd->add_option("--f", f, "Euler class of sigma")->required();
    cmd->add_option("--k", k, "Euler number of the circle bundle (nonzero)")->required();
  };
  auto *vol = app.add_subcommand("volume", "Volume 4 (e^2 - f^2) / k in units of pi^2");
  add_efk(vol);
  auto *cs = app.add_subcommand("cs", "Chern-Simons invariant (f^2 - e^2) / 6k");
  add_efk(cs);

  auto *ver = app.add_subcommand("verify", "Run the identity verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &s) {
    return app.exit(s);
  } catch (const CLI::ParseError &err) {
    app.exit(err);
    return kInputError;
  }

  try {
    if (rep->parsed()) return run_rep(genus, out);
    if (euler->parsed()) return run_euler(rep_path);
    if (lip->parsed()) return run_lipschitz(rho_path, sigma_path, max_len);
    if (vol->parsed() || cs->parsed()) return run_volume_cs(e, f, k);
    if (ver->parsed()) return run_verify();
  } catch (const InputError &err) {
    std::cerr << "input error: " << err.what() << '\n';
    return kInputError;
  } catch (const IoError &err) {
    std::cerr << "I/O error: " << err.what() << '\n';
    return kIoError;
  } catch (const IntegralityError &err) {
    std::cerr << "integrality failure: " << err.what() << '\n';
    return kIntegrality;
  }
  return kInputError;
}
