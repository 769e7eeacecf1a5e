#pragma once

// Generic representations of GL_m(E) described by Zelevinsky segments.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "nfp/numerics.hpp"

namespace nfp::reps {

/// Multiset of nonzero Satake parameters of an unramified representation.
class SatakeSet {
 public:
  SatakeSet() = default;
  /// Throws std::invalid_argument if a parameter is zero or non-finite.
  explicit SatakeSet(std::vector<CNum> params);

  const std::vector<CNum>& params() const { return params_; }
  std::size_t rank() const { return params_.size(); }
  bool empty() const { return params_.empty(); }
  SatakeSet conj() const;
  SatakeSet inverse() const;
  CNum product() const;
  bool on_unit_circle(double tol = 1e-12) const;

 private:
  std::vector<CNum> params_;
};

/// Unramified character chi of E^x, recorded by alpha = chi(varpi).
struct UnramChar {
  CNum alpha;
};

/// Ramified cuspidal representation; only its degree and conductor enter
/// any formula, the label is for bookkeeping.
struct RamCusp {
  int dim = 1;
  int cond = 1;
  std::string label;
};

using CuspSupport = std::variant<UnramChar, RamCusp>;

/// Segment [nu^{-(k-1)} rho, rho].
struct Segment {
  CuspSupport base;
  int length = 1;
};

/// Generic representation Delta_1 x ... x Delta_t of GL_m(E).
class GenericRep {
 public:
  /// Validates segment data; throws std::invalid_argument on bad input.
  explicit GenericRep(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  int rank() const { return rank_; }
  /// True iff every unramified support has |alpha| = 1.
  bool is_tempered(double tol = 1e-12) const;

  static GenericRep unramified(const SatakeSet& s);

 private:
  std::vector<Segment> segments_;
  int rank_ = 0;
};

/// Sum over segments of k * a(rho) + (k - 1) * dim(rho^I).
int conductor(const GenericRep& rep);

struct UnramifiedPart {
  int r = 0;
  SatakeSet satake;
};

/// Unramified characters among the cuspidal supports, ordered by
/// decreasing Re(t) where alpha = q_E^{-t} (ties broken by argument).
UnramifiedPart unramified_part(const GenericRep& rep);

/// True iff the multiset equals the multiset of inverses, by
/// tolerance-matched bipartite pairing.
bool is_conjugate_selfdual(const SatakeSet& s, const ToleranceCfg& cfg);

/// True iff there is a perfect matching between a and b pairing elements
/// that are approx_eq under cfg.
bool multiset_approx_equal(const std::vector<CNum>& a, const std::vector<CNum>& b,
                           const ToleranceCfg& cfg);

nlohmann::json to_json(const GenericRep& rep);
/// {"segments":[{"type":"unram","alpha":[re,im],"k":1}, {"type":"ram","dim":1,"cond":2,"k":1}]}
GenericRep rep_from_json(const nlohmann::json& j);

}  // namespace nfp::reps
