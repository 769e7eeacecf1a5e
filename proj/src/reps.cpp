#include "nfp/reps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "nfp/report.hpp"

namespace nfp::reps {

SatakeSet::SatakeSet(std::vector<CNum> params) : params_(std::move(params)) {
  for (const CNum& a : params_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("SatakeSet: non-finite parameter");
    if (a == CNum(0.0)) throw std::invalid_argument("SatakeSet: zero parameter");
  }
}

SatakeSet SatakeSet::conj() const {
  std::vector<CNum> v;
  v.reserve(params_.size());
  for (const CNum& a : params_) v.push_back(std::conj(a));
  return SatakeSet(std::move(v));
}

SatakeSet SatakeSet::inverse() const {
  std::vector<CNum> v;
  v.reserve(params_.size());
  for (const CNum& a : params_) v.push_back(1.0 / a);
  return SatakeSet(std::move(v));
}

CNum SatakeSet::product() const {
  CNum p(1.0, 0.0);
  for (const CNum& a : params_) p *= a;
  return p;
}

bool SatakeSet::on_unit_circle(double tol) const {
  return std::all_of(params_.begin(), params_.end(),
                     [tol](const CNum& a) { return std::abs(std::abs(a) - 1.0) <= tol; });
}

GenericRep::GenericRep(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw std::invalid_argument("GenericRep: no segments");
  for (const Segment& s : segments_) {
    if (s.length < 1) throw std::invalid_argument("GenericRep: segment length must be >= 1");
    if (const auto* u = std::get_if<UnramChar>(&s.base)) {
      if (u->alpha == CNum(0.0)) throw std::invalid_argument("GenericRep: zero Satake parameter");
      rank_ += s.length;
    } else {
      const auto& c = std::get<RamCusp>(s.base);
      if (c.dim < 1) throw std::invalid_argument("GenericRep: cuspidal degree must be >= 1");
      if (c.cond < 1) throw std::invalid_argument("GenericRep: ramified cuspidal needs conductor >= 1");
      rank_ += s.length * c.dim;
    }
  }
}

bool GenericRep::is_tempered(double tol) const {
  for (const Segment& s : segments_)
    if (const auto* u = std::get_if<UnramChar>(&s.base))
      if (std::abs(std::abs(u->alpha) - 1.0) > tol) return false;
  return true;
}

GenericRep GenericRep::unramified(const SatakeSet& s) {
  std::vector<Segment> segs;
  for (const CNum& a : s.params()) segs.push_back({UnramChar{a}, 1});
  return GenericRep(std::move(segs));
}

int conductor(const GenericRep& rep) {
  int total = 0;
  for (const Segment& s : rep.segments()) {
    if (std::holds_alternative<UnramChar>(s.base)) {
      total += s.length - 1;
    } else {
      total += s.length * std::get<RamCusp>(s.base).cond;
    }
  }
  return total;
}

UnramifiedPart unramified_part(const GenericRep& rep) {
  std::vector<CNum> alphas;
  for (const Segment& s : rep.segments())
    if (const auto* u = std::get_if<UnramChar>(&s.base)) alphas.push_back(u->alpha);
  // Re(t) = -log|alpha| / log q_E, so decreasing Re(t) is increasing |alpha|.
  std::stable_sort(alphas.begin(), alphas.end(), [](const CNum& x, const CNum& y) {
    double ax = std::abs(x), ay = std::abs(y);
    if (ax != ay) return ax < ay;
    return std::arg(x) < std::arg(y);
  });
  UnramifiedPart out;
  out.r = static_cast<int>(alphas.size());
  out.satake = SatakeSet(std::move(alphas));
  return out;
}

bool multiset_approx_equal(const std::vector<CNum>& a, const std::vector<CNum>& b,
                           const ToleranceCfg& cfg) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<int> match_b(n, -1);
  // Kuhn's augmenting paths on the tolerance graph.
  std::function<bool(std::size_t, std::vector<bool>&)> augment =
      [&](std::size_t i, std::vector<bool>& seen) -> bool {
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || !approx_eq(a[i], b[j], cfg)) continue;
      seen[j] = true;
      if (match_b[j] < 0 || augment(static_cast<std::size_t>(match_b[j]), seen)) {
        match_b[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    if (!augment(i, seen)) return false;
  }
  return true;
}

bool is_conjugate_selfdual(const SatakeSet& s, const ToleranceCfg& cfg) {
  return multiset_approx_equal(s.params(), s.inverse().params(), cfg);
}

nlohmann::json to_json(const GenericRep& rep) {
  nlohmann::json segs = nlohmann::json::array();
  for (const Segment& s : rep.segments()) {
    nlohmann::json j;
    if (const auto* u = std::get_if<UnramChar>(&s.base)) {
      j["type"] = "unram";
      j["alpha"] = cnum_json(u->alpha);
    } else {
      const auto& c = std::get<RamCusp>(s.base);
      j["type"] = "ram";
      j["dim"] = c.dim;
      j["cond"] = c.cond;
      if (!c.label.empty()) j["label"] = c.label;
    }
    j["k"] = s.length;
    segs.push_back(std::move(j));
  }
  return nlohmann::json{{"segments", segs}};
}

GenericRep rep_from_json(const nlohmann::json& j) {
  if (!j.contains("segments") || !j["segments"].is_array())
    throw std::invalid_argument("GenericRep JSON: missing 'segments' array");
  std::vector<Segment> segs;
  for (const auto& s : j["segments"]) {
    Segment seg;
    seg.length = s.value("k", 1);
    const std::string type = s.at("type").get<std::string>();
    if (type == "unram") {
      seg.base = UnramChar{cnum_from_json(s.at("alpha"))};
    } else if (type == "ram") {
      seg.base = RamCusp{s.value("dim", 1), s.at("cond").get<int>(), s.value("label", std::string())};
    } else {
      throw std::invalid_argument("GenericRep JSON: unknown segment type '" + type + "'");
    }
    segs.push_back(std::move(seg));
  }
  return GenericRep(std::move(segs));
}

}  // namespace nfp::reps
