#include "nfp/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nfp {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::soft_discrepancy: return "soft-discrepancy";
    case Status::rejected_input: return "rejected-input";
  }
  return "unknown";
}

namespace {

double effective_tol(const ToleranceCfg& cfg, double tail) { return std::max(cfg.rel, tail); }

}  // namespace

VerificationReport compare(std::string check, nlohmann::json params, CNum lhs, CNum rhs,
                           const ToleranceCfg& cfg, double tail_estimate) {
  VerificationReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.rel_err = rel_error(lhs, rhs);
  r.tail_estimate = tail_estimate;
  bool ok = std::abs(lhs - rhs) <= cfg.abs ||
            r.rel_err <= effective_tol(cfg, tail_estimate);
  r.status = ok ? Status::pass : Status::fail;
  return r;
}

VerificationReport compare_soft(std::string check, nlohmann::json params, CNum lhs, CNum rhs,
                                const ToleranceCfg& cfg, double tail_estimate) {
  VerificationReport r = compare(std::move(check), std::move(params), lhs, rhs, cfg, tail_estimate);
  if (r.status == Status::fail) {
    r.status = Status::soft_discrepancy;
    r.discrepancy_factor = rhs == CNum(0.0) ? CNum(NAN, NAN) : lhs / rhs;
  }
  return r;
}

VerificationReport rejected(std::string check, nlohmann::json params, std::string reason) {
  VerificationReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.status = Status::rejected_input;
  r.rel_err = 0.0;
  r.note = std::move(reason);
  return r;
}

nlohmann::json cnum_json(CNum z) { return nlohmann::json::array({z.real(), z.imag()}); }

CNum cnum_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["lhs"] = cnum_json(r.lhs);
  j["rhs"] = cnum_json(r.rhs);
  j["rel_err"] = r.rel_err;
  j["status"] = to_string(r.status);
  if (r.discrepancy_factor) j["discrepancy_factor"] = cnum_json(*r.discrepancy_factor);
  j["tail_estimate"] = r.tail_estimate;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace nfp
