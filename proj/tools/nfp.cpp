#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "nfp/assembly.hpp"
#include "nfp/lfactors.hpp"
#include "nfp/parse.hpp"
#include "nfp/suites.hpp"
#include "nfp/volumes.hpp"
#include "nfp/whittaker.hpp"

namespace {

using namespace nfp;

constexpr int kUsageError = 2;

struct Options {
  std::optional<long> qf, p, u, n, c;
  std::optional<int> eps;
  std::string satake, tau, lambda, segments, segments_file, asai, json_out;
  std::optional<long> depth;
  std::optional<double> tol_rel, tol_abs;
  std::uint64_t seed = suites::RunConfig{}.seed;
  long vmax = 4;
  std::size_t draws = 0;
  double s = 1.0;
};

std::string fmt(CNum z) {
  std::ostringstream os;
  os << std::setprecision(15) << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::optional<reps::GenericRep> load_rep(const Options& o) {
  if (!o.segments.empty() && !o.segments_file.empty())
    throw std::invalid_argument("give either --segments or --segments-file");
  nlohmann::json j;
  if (!o.segments_file.empty()) {
    std::ifstream in(o.segments_file);
    if (!in) throw std::invalid_argument("cannot read " + o.segments_file);
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("bad segment JSON: " + std::string(e.what()));
    }
  } else if (!o.segments.empty()) {
    try {
      j = nlohmann::json::parse(o.segments);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("bad segment JSON: " + std::string(e.what()));
    }
  } else {
    return std::nullopt;
  }
  try {
    return reps::rep_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("bad segment JSON: " + std::string(e.what()));
  }
}

suites::RunConfig run_config(const Options& o) {
  suites::RunConfig cfg;
  cfg.qf = o.qf;
  cfg.p = o.p;
  cfg.u = o.u;
  cfg.n = o.n;
  cfg.c = o.c;
  cfg.eps = o.eps;
  if (!o.satake.empty()) cfg.satake = parse::complex_list(o.satake);
  cfg.rep = load_rep(o);
  if (o.depth) cfg.depth = *o.depth;
  cfg.tol_rel = o.tol_rel;
  cfg.tol_abs = o.tol_abs;
  cfg.seed = o.seed;
  cfg.vmax = o.vmax;
  cfg.draws = o.draws;
  return cfg;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void print_volume_table(long q, long n, long c) {
  using namespace nfp::volumes;
  const Rat qf(q);
  const Rat qe = qf * qf;
  const auto [c1_quotient, c1_product] = volumes::c1(n, c, qf);
  const std::vector<std::pair<std::string, Rat>> rows = {
      {"vol(GL_n(O_F))", vol_gl(n, qf)},
      {"vol(GL_n(O_E))", vol_gl(n, qe)},
      {"vol(K'^c)", vol_kprime_c(n, c, qe)},
      {"vol(bmK^c cap GL_{n+1}(F))", vol_bmK_glF(n, c, qf)},
      {"vol(U(W)(O_F))", vol_unitary_w(n, qf)},
      {"vol(U(V))", vol_unitary_v(n, c, qf)},
      {"vol(u(V) lattice)", vol_lie_uV(n, c, qf)},
      {"vol(k_0)", vol_k0_lie(n, c, qf)},
      {"vol(K_0)", vol_K0(n, c, qf)},
      {"L(1,eta)", l_eta(qf)},
      {"c1", c1_quotient},
      {"c1 (zeta form)", c1_product},
      {"C", constant_C(n, c, qf)},
  };
  std::cout << "q_F = " << q << ", n = " << n << ", c = " << c << "\n";
  for (const auto& [name, value] : rows) std::cout << "  " << std::left << std::setw(28) << name << value << "\n";
}

int cmd_verify(const std::string& suite, const Options& o) {
  const suites::RunConfig cfg = run_config(o);
  const auto reports = suites::run(suite, cfg);
  if (suite == "volumes" && o.n && o.c) print_volume_table(o.qf.value_or(3), *o.n, *o.c);

  std::map<std::string, std::map<Status, std::size_t>> by_check;
  for (const auto& r : reports) ++by_check[r.check][r.status];
  for (const auto& [check, counts] : by_check) {
    std::cout << std::left << std::setw(24) << check;
    for (Status s : {Status::pass, Status::fail, Status::soft_discrepancy, Status::rejected_input}) {
      auto it = counts.find(s);
      if (it != counts.end()) std::cout << "  " << to_string(s) << "=" << it->second;
    }
    std::cout << "\n";
  }
  for (const auto& r : reports) {
    if (r.status != Status::fail && r.status != Status::soft_discrepancy) continue;
    std::cout << to_string(r.status) << " " << r.check << " rel_err=" << r.rel_err;
    if (r.discrepancy_factor) std::cout << " factor=" << fmt(*r.discrepancy_factor);
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << "\n";
  }
  std::cout << reports.size() << " checks: " << suites::count(reports, Status::pass) << " pass, "
            << suites::count(reports, Status::fail) << " fail, "
            << suites::count(reports, Status::soft_discrepancy) << " soft-discrepancy, "
            << suites::count(reports, Status::rejected_input) << " rejected-input\n";

  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  write_json(o.json_out, arr);
  return suites::exit_code(reports);
}

reps::SatakeSet required_satake(const Options& o) {
  if (o.satake.empty()) throw std::invalid_argument("--satake is required");
  return reps::SatakeSet(parse::complex_list(o.satake));
}

int cmd_compute(const std::string& target, const Options& o) {
  const long q = o.qf.value_or(3);
  volumes::check_residue_size(q);
  const Rat qf(q);
  const Rat qe = qf * qf;
  nlohmann::json out;
  if (target == "lfactor") {
    const reps::SatakeSet sigma = required_satake(o);
    std::optional<lfactors::LocalLFactor> L;
    if (!o.asai.empty()) {
      if (o.asai != "+" && o.asai != "-") throw std::invalid_argument("--asai must be + or -");
      L = lfactors::asai_lfactor(sigma, o.asai == "+" ? 1 : -1, qf);
    } else if (!o.tau.empty()) {
      L = lfactors::rs_lfactor(sigma, reps::SatakeSet(parse::complex_list(o.tau)), qe);
    } else {
      L = lfactors::pair_dual_lfactor(sigma, qe);
    }
    const CNum v = lfactors::eval(*L, o.s);
    std::cout << "L(" << o.s << ") = " << fmt(v) << "\n";
    out = {{"factor", lfactors::to_json(*L)}, {"s", o.s}, {"value", cnum_json(v)}};
  } else if (target == "whittaker") {
    if (o.lambda.empty()) throw std::invalid_argument("--lambda is required");
    const std::vector<long> lam = parse::integer_list(o.lambda);
    CNum v;
    if (auto rep = load_rep(o)) {
      v = whittaker::essential_value(*rep, lam, qe);
    } else {
      const reps::SatakeSet alpha = required_satake(o);
      if (lam.size() != alpha.rank()) throw std::invalid_argument("--lambda length must equal the rank");
      v = whittaker::spherical_value(alpha, lam, qe);
    }
    std::cout << "W = " << fmt(v) << "\n";
    out = {{"lambda", lam}, {"qf", q}, {"value", cnum_json(v)}};
  } else if (target == "j-main" || target == "i-closed") {
    const auto rep = load_rep(o);
    if (!rep) throw std::invalid_argument("--segments or --segments-file is required");
    const reps::SatakeSet sigma = required_satake(o);
    const long c = reps::conductor(*rep);
    const assembly::PairData pd(sigma, *rep, o.eps.value_or(static_cast<int>(c % 2)), q);
    const auto lv = assembly::l_values(pd);
    const Rat C = volumes::constant_C(pd.n(), pd.c(), qf);
    out = pd.to_json();
    out["C"] = C.str();
    out["L_half_rs"] = cnum_json(lv.rs_half);
    out["L_as_n"] = cnum_json(lv.as_n_main);
    out["L_as_u"] = cnum_json(lv.as_u_main);
    std::cout << "n = " << pd.n() << ", c = " << pd.c() << ", eps = " << pd.eps() << ", q_F = " << q << "\n"
              << "C = " << C << "\n"
              << "L(1/2, sigma_n x sigma_u) = " << fmt(lv.rs_half) << "\n"
              << "L(1, sigma_n, As) = " << fmt(lv.as_n_main) << "\n"
              << "L(1, sigma_u, As) = " << fmt(lv.as_u_main) << "\n";
    const CNum v = target == "j-main" ? assembly::J_main(pd) : assembly::I_closed(pd);
    std::cout << (target == "j-main" ? "J = " : "I = ") << fmt(v) << "\n";
    out["value"] = cnum_json(v);
  } else {
    throw std::invalid_argument("unknown compute target '" + target + "'");
  }
  write_json(o.json_out, out);
  return 0;
}

int cmd_volumes(const Options& o) {
  const long q = o.qf.value_or(3);
  volumes::check_residue_size(q);
  const long n = o.n.value_or(1);
  const long c = o.c.value_or(1);
  if (n < 0) throw std::invalid_argument("--n must be >= 0");
  if (c < 1) throw RejectedInput("conductor c must be >= 1");
  print_volume_table(q, n, c);
  return 0;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--qf", o.qf, "residue field size of F");
  app->add_option("--p", o.p, "residue characteristic");
  app->add_option("--u", o.u, "non-square with E = F(sqrt u)");
  app->add_option("--n", o.n, "rank n");
  app->add_option("--c", o.c, "conductor");
  app->add_option("--eps", o.eps, "0 or 1");
  app->add_option("--satake", o.satake, "comma list: a, a+bi, bi, @theta");
  app->add_option("--segments", o.segments, "segment JSON");
  app->add_option("--segments-file", o.segments_file, "file with segment JSON");
  app->add_option("--depth", o.depth, "truncation depth");
  app->add_option("--tol-rel", o.tol_rel, "relative tolerance override");
  app->add_option("--tol-abs", o.tol_abs, "absolute tolerance override");
  app->add_option("--seed", o.seed, "RNG seed");
  app->add_option("--json", o.json_out, "write JSON here ('-' for stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local period identities: computation and verification"};
  app.set_config("--config", "", "flat key = value file; flags override it");
  app.require_subcommand(1);
  Options o;
  std::string suite, target;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  add_common(verify, o);
  verify->add_option("--vmax", o.vmax, "max valuation on the rank-one grid");
  verify->add_option("--draws", o.draws, "override random draw counts");

  auto* compute = app.add_subcommand("compute", "evaluate one quantity");
  compute->add_option("target", target, "lfactor | whittaker | j-main | i-closed")->required();
  add_common(compute, o);
  compute->add_option("--asai", o.asai, "Asai sign, + or -");
  compute->add_option("--tau", o.tau, "second Satake list for a Rankin-Selberg factor");
  compute->add_option("--lambda", o.lambda, "comma list of exponents");
  compute->add_option("--s", o.s, "evaluation point (real)");

  auto* vols = app.add_subcommand("volumes", "print the volume constants");
  add_common(vols, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*verify) return cmd_verify(suite, o);
    if (*compute) return cmd_compute(target, o);
    return cmd_volumes(o);
  } catch (const lfactors::PoleError& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return 1;
  } catch (const RejectedInput& e) {
    std::cerr << "rejected input: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
