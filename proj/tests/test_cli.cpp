#include <doctest.h>

#include <cmath>
#include <random>

#include <json.hpp>

#include "adsvol/errors.hpp"
#include "adsvol/rep_json.hpp"
#include "process.hpp"

using nlohmann::json;
using testproc::quote;
using testproc::run;

namespace {

const std::string kCli = ADSVOL_CLI;
const auto kDir = testproc::scratch_dir("cli");

std::string path(const std::string &name) { return (kDir / name).string(); }

json parse_stdout(const testproc::Result &r) {
  REQUIRE(json::accept(r.out));
  return json::parse(r.out);
}

std::string genus2_rep() {
  static const std::string p = [] {
    const auto file = path("rho2.json");
    REQUIRE(run(kCli, "rep --genus 2 --out " + quote(file)).exit_code == 0);
    return file;
  }();
  return p;
}

} // namespace

TEST_CASE("rep") {
  const auto file = path("rep_test.json");
  const auto r = run(kCli, "rep --genus 2 --out " + quote(file));
  CHECK(r.exit_code == 0);
  const auto out = parse_stdout(r);
  CHECK(out["relator_residual"].get<double>() < 1e-9);
  CHECK(std::abs(out["euler"].get<int>()) == 2);
  const auto written = adsvol::surface::read_representation(file);
  CHECK(written.images().size() == 4);
  CHECK(written.genus() == 2);

  CHECK(run(kCli, "rep --genus 1 --out " + quote(path("g1.json"))).exit_code == 2);
  CHECK(run(kCli, "rep --genus 1").exit_code == 2);
  CHECK(run(kCli, "rep --genus 2 --out /nonexistent/x").exit_code == 3);
}

TEST_CASE("volume and cs") {
  auto r = run(kCli, "volume --e -2 --f 0 --k -2");
  CHECK(r.exit_code == 0);
  auto out = parse_stdout(r);
  CHECK(out["volume_pi2"] == "8/1");
  CHECK(out["volume_signed_pi2"] == "-8/1");

  r = run(kCli, "volume --e 3 --f 3 --k 7");
  CHECK(r.exit_code == 0);
  CHECK(parse_stdout(r)["volume_pi2"] == "0/1");
  CHECK(r.err.find("warning") != std::string::npos);

  r = run(kCli, "volume --e 1 --f 0 --k 0");
  CHECK(r.exit_code == 2);
  CHECK_FALSE(r.err.empty());

  r = run(kCli, "cs --e -2 --f 0 --k -2");
  CHECK(r.exit_code == 0);
  CHECK(parse_stdout(r)["cs"] == "1/3");
  CHECK(run(kCli, "cs --e -4 --f 2 --k 3").out.find("\"-2/3\"") != std::string::npos);
}

TEST_CASE("euler") {
  const auto r = run(kCli, "euler --rep " + quote(genus2_rep()));
  CHECK(r.exit_code == 0);
  const auto out = parse_stdout(r);
  CHECK(std::abs(out["euler"].get<int>()) == 2);
  CHECK(out["residual"].get<double>() < 1e-6);

  CHECK(run(kCli, "euler --rep " + quote(path("missing.json"))).exit_code == 3);

  const auto bad_json = path("bad.json");
  std::ofstream(bad_json) << "{not json";
  CHECK(run(kCli, "euler --rep " + quote(bad_json)).exit_code == 2);

  // A generic representation misses the relator, so its lifted displacement is not integral.
  std::mt19937_64 rng(61);
  std::vector<adsvol::surface::Moebius> images;
  for (int i = 0; i < 4; ++i) images.push_back(adsvol::surface::random_moebius(rng));
  const adsvol::surface::Representation generic(adsvol::surface::SurfaceGroup::make(2), images);
  REQUIRE_THROWS_AS(adsvol::surface::euler_class(generic), adsvol::IntegralityError);
  const auto generic_path = path("generic.json");
  adsvol::surface::write_representation(generic, generic_path);
  CHECK(run(kCli, "euler --rep " + quote(generic_path)).exit_code == 4);
}

TEST_CASE("lipschitz") {
  const auto rho = genus2_rep();
  auto r = run(kCli, "lipschitz --rho " + quote(rho) + " --sigma " + quote(rho) + " --max-word-len 4");
  CHECK(r.exit_code == 0);
  auto out = parse_stdout(r);
  CHECK(std::abs(out["lipschitz_lower_bound"].get<double>() - 1) < 1e-10);
  CHECK(out["verdict"] == "refuted");
  CHECK(out["max_word_length"] == 4);

  const auto trivial = path("trivial.json");
  adsvol::surface::write_representation(adsvol::surface::Representation::trivial(2), trivial);
  r = run(kCli, "lipschitz --rho " + quote(rho) + " --sigma " + quote(trivial) + " --max-word-len 3");
  CHECK(r.exit_code == 0);
  out = parse_stdout(r);
  CHECK(out["lipschitz_lower_bound"].get<double>() == 0);
  CHECK(out["verdict"] == "not_refuted");

  CHECK(run(kCli, "lipschitz --rho " + quote(trivial) + " --sigma " + quote(rho) + " --max-word-len 3").exit_code == 2);
  CHECK(run(kCli, "lipschitz --rho " + quote(rho) + " --sigma " + quote(rho) + " --max-word-len 0").exit_code == 2);
  CHECK(run(kCli, "lipschitz --rho " + quote(rho) + " --sigma " + quote(rho) + " --max-word-len 4",
            "ADSVOL_MAX_WORDS=100")
            .exit_code == 2);
  CHECK(run(kCli, "lipschitz --rho " + quote(rho) + " --sigma " + quote(rho) + " --max-word-len 2",
            "ADSVOL_MAX_WORDS=bogus")
            .exit_code == 2);
}

TEST_CASE("argument errors") {
  CHECK(run(kCli, "volume --e 1 --f 0 --k 1 --bogus 3").exit_code == 2);
  CHECK(run(kCli, "frobnicate").exit_code == 2);
  CHECK(run(kCli, "").exit_code == 2);
  CHECK(run(kCli, "volume --e x --f 0 --k 1").exit_code == 2);
  CHECK(run(kCli, "--help").exit_code == 0);
}

TEST_CASE("verify") {
  auto r = run(kCli, "verify");
  CHECK(r.exit_code == 0);
  auto out = parse_stdout(r);
  CHECK(out["all_pass"] == true);
  CHECK(out["checks"].size() >= 9);

  r = run(ADSVOL_FAULT_LAMBDA_CLI, "verify");
  CHECK(r.exit_code == 1);
  CHECK(parse_stdout(r)["all_pass"] == false);
  CHECK(r.err.find("FAIL metric-calibration") != std::string::npos);
  CHECK(r.err.find("FAIL geometry-calibration") != std::string::npos);

  r = run(ADSVOL_FAULT_CURVATURE_CLI, "verify");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("FAIL curvature-path") != std::string::npos);
  CHECK(r.err.find("PASS jacobi") != std::string::npos);
}
