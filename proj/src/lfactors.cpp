#include "nfp/lfactors.hpp"

#include <cmath>
#include <sstream>

namespace nfp::lfactors {

namespace {

std::string pole_message(const Factor& f, CNum s) {
  std::ostringstream os;
  os << "L-factor pole at s=" << s << " from inverse root " << f.gamma << " of degree " << f.degree;
  return os.str();
}

nlohmann::json satake_json(const reps::SatakeSet& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const CNum& a : s.params()) j.push_back(cnum_json(a));
  return j;
}

}  // namespace

PoleError::PoleError(Factor f, CNum s) : std::domain_error(pole_message(f, s)), factor_(f), s_(s) {}

LocalLFactor::LocalLFactor(Rat base, std::vector<Factor> factors) : base_(std::move(base)) {
  if (base_ <= Rat(1)) throw std::invalid_argument("LocalLFactor: base must exceed 1");
  for (const Factor& f : factors) {
    if (f.degree < 1) throw std::invalid_argument("LocalLFactor: degree must be >= 1");
    if (f.gamma != CNum(0.0)) factors_.push_back(f);
  }
}

LocalLFactor LocalLFactor::operator*(const LocalLFactor& other) const {
  if (base_ != other.base_) throw std::invalid_argument("LocalLFactor: mismatched bases");
  std::vector<Factor> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return LocalLFactor(base_, std::move(all));
}

CNum eval(const LocalLFactor& L, CNum s) {
  const double log_q = std::log(L.base().to_double());
  CNum value(1.0, 0.0);
  for (const Factor& f : L.factors()) {
    CNum t = std::exp(-static_cast<double>(f.degree) * s * log_q);
    CNum denom = 1.0 - f.gamma * t;
    if (std::abs(denom) < kPoleTolerance) throw PoleError(f, s);
    value /= denom;
  }
  return value;
}

LocalLFactor rs_lfactor(const reps::SatakeSet& sigma, const reps::SatakeSet& tau, const Rat& q_e) {
  std::vector<Factor> fs;
  for (const CNum& a : sigma.params())
    for (const CNum& b : tau.params()) fs.push_back({a * b, 1});
  return LocalLFactor(q_e, std::move(fs));
}

LocalLFactor asai_lfactor(const reps::SatakeSet& sigma, int sign, const Rat& q_f) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("asai_lfactor: sign must be +1 or -1");
  const auto& a = sigma.params();
  std::vector<Factor> fs;
  for (const CNum& x : a) fs.push_back({static_cast<double>(sign) * x, 1});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) fs.push_back({a[i] * a[j], 2});
  return LocalLFactor(q_f, std::move(fs));
}

LocalLFactor pair_dual_lfactor(const reps::SatakeSet& sigma, const Rat& q_e) {
  return rs_lfactor(sigma, sigma.conj(), q_e);
}

VerificationReport asai_cancellation_check(const reps::SatakeSet& sigma, int n_parity,
                                           const Rat& q_f, const ToleranceCfg& cfg) {
  const std::string name = "asai-cancel";
  nlohmann::json params{{"satake", satake_json(sigma)}, {"n_parity", n_parity % 2}, {"qf", q_f.str()}};
  if (!sigma.on_unit_circle(1e-9) || !reps::is_conjugate_selfdual(sigma, cfg))
    return rejected(name, params, "Satake set is not conjugate-self-dual on the unit circle");
  const Rat q_e = q_f * q_f;
  const int sign_n = parity_sign(n_parity);
  CNum lhs = std::conj(eval(asai_lfactor(sigma, -sign_n, q_f), 1.0)) /
             eval(pair_dual_lfactor(sigma, q_e), 1.0);
  CNum rhs = 1.0 / eval(asai_lfactor(sigma, sign_n, q_f), 1.0);
  return compare(name, std::move(params), lhs, rhs, cfg);
}

nlohmann::json to_json(const LocalLFactor& L) {
  nlohmann::json fs = nlohmann::json::array();
  for (const Factor& f : L.factors()) fs.push_back({f.gamma.real(), f.gamma.imag(), f.degree});
  return nlohmann::json{{"base", L.base().str()}, {"factors", fs}};
}

LocalLFactor lfactor_from_json(const nlohmann::json& j) {
  const auto& b = j.at("base");
  Rat base = b.is_string() ? Rat::parse(b.get<std::string>()) : Rat(b.get<long>());
  std::vector<Factor> fs;
  for (const auto& f : j.at("factors")) {
    if (!f.is_array() || f.size() != 3) throw std::invalid_argument("L-factor JSON: factor must be [re, im, d]");
    fs.push_back({CNum(f[0].get<double>(), f[1].get<double>()), f[2].get<int>()});
  }
  return LocalLFactor(std::move(base), std::move(fs));
}

}  // namespace nfp::lfactors
