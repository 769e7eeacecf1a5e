// One line per acceptance criterion.  Tolerances are pinned here rather
// than taken from the suite defaults.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nfp/suites.hpp"

using namespace nfp;

namespace {

using Reports = std::vector<VerificationReport>;

struct Criterion {
  int id;
  std::string title;
  std::string suite;
  std::optional<double> tol_rel;  // nullopt: exact checks
  std::set<std::string> hard;      // checks whose failure fails the criterion
  std::size_t min_hard;            // minimum number of hard checks that must run
};

Reports only(const Reports& all, const std::set<std::string>& names) {
  Reports out;
  for (const auto& r : all)
    if (names.contains(r.check)) out.push_back(r);
  return out;
}

bool run(const Criterion& c) {
  suites::RunConfig cfg;
  cfg.tol_rel = c.tol_rel;
  cfg.tol_abs = c.tol_rel ? std::optional<double>(1e-14) : std::nullopt;
  const auto t0 = std::chrono::steady_clock::now();
  Reports all;
  std::string error;
  try {
    all = suites::run(c.suite, cfg);
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const Reports hard = only(all, c.hard);
  const std::size_t fails = suites::count(hard, Status::fail);
  const std::size_t hard_soft = suites::count(hard, Status::soft_discrepancy);
  const std::size_t soft = suites::count(all, Status::soft_discrepancy) - hard_soft;
  const std::size_t rejected = suites::count(all, Status::rejected_input);
  const bool ok = error.empty() && fails == 0 && hard_soft == 0 && hard.size() >= c.min_hard;
  std::printf("criterion %d: %s  %s  [%zu hard checks, %zu fail, %zu soft, %zu rejected-input, %.1fs]%s%s\n", c.id,
              ok ? "PASS" : "FAIL", c.title.c_str(), hard.size(), fails, soft, rejected, secs,
              error.empty() ? "" : "  error: ", error.c_str());
  for (const auto& r : all) {
    if (r.status == Status::soft_discrepancy || (r.status == Status::fail && c.hard.contains(r.check))) {
      std::printf("    %s %s %s", to_string(r.status).c_str(), r.check.c_str(), r.params.dump().c_str());
      if (r.discrepancy_factor)
        std::printf(" factor=%.12g%+.3gi", r.discrepancy_factor->real(), r.discrepancy_factor->imag());
      else
        std::printf(" rel_err=%.3g", r.rel_err);
      std::printf("%s%s\n", r.note.empty() ? "" : " ", r.note.c_str());
    }
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Macdonald identity, depth 60, rel 1e-9", "macdonald", 1e-9, {"macdonald"}, 20},
      {2, "beta truncated = closed, rel 1e-8", "beta", 1e-8, {"beta"}, 90},
      {3, "lambda identity n<=2 rel 1e-8; n=3 ratio spread 1e-7", "lambda", 1e-8,
       {"lambda", "lambda-spherical", "lambda-ratio-spread"}, 21},
      {4, "theta ratio parameter-independent for k in {2,3}", "theta", 1e-8, {"theta-ratio-spread"}, 2},
      {5, "Asai cancellation, rel 1e-10", "asai-cancel", 1e-10, {"asai-cancel"}, 40},
      {6, "c1 expressions agree exactly", "c1", std::nullopt, {"c1"}, 100},
      {7, "J_main = L(1,eta) c1 I_closed and I_assembled = I_closed, rel 1e-9", "main-theorem", 1e-9,
       {"main-theorem", "i-assembled", "i-assembled-truncated", "j-real-positive", "main-theorem-parity"}, 20},
      {8, "rank-1 fundamental lemma, exact", "fl-rank1", std::nullopt, {"fl-rank1", "fl-rank1-group"}, 1},
      {9, "matrix identities, exact", "matrix-identities", std::nullopt,
       {"det-stack", "cayley", "cayley-lattice", "omega-iota", "r-map"}, 600},
      {10, "volume sanity, exact", "volumes", std::nullopt,
       {"vol-gl1", "vol-u1", "vol-positive", "vol-dual-lattice", "vol-gl-finite-group", "vol-u-finite-group",
        "vol-UV-from-K0"},
       1},
      {11, "Satake symmetry and 1e-3 perturbations", "satake", 1e-10, {"satake-selfdual", "satake-perturbed"}, 40},
  };
  int failed = 0;
  for (const auto& c : criteria)
    if (!run(c)) ++failed;
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
