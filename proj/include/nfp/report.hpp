#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nfp/numerics.hpp"

namespace nfp {

/// Input outside the domain where a formula was derived (e.g. conductor 0).
class RejectedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Status { pass, fail, soft_discrepancy, rejected_input };

std::string to_string(Status s);

/// Outcome of one identity check.
///
/// status == pass implies rel_err <= the tolerance the check was run with;
/// discrepancy_factor is set exactly when status == soft_discrepancy and
/// holds lhs / rhs.
struct VerificationReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  CNum lhs{0.0, 0.0};
  CNum rhs{0.0, 0.0};
  double rel_err = 0.0;
  Status status = Status::pass;
  std::optional<CNum> discrepancy_factor;
  double tail_estimate = 0.0;
  std::string note;

  bool hard_failure() const { return status == Status::fail; }
};

/// Builds a report comparing lhs against rhs under cfg.
VerificationReport compare(std::string check, nlohmann::json params, CNum lhs, CNum rhs,
                           const ToleranceCfg& cfg, double tail_estimate = 0.0);

/// Like compare(), but a mismatch is recorded as a soft discrepancy with
/// discrepancy_factor = lhs / rhs instead of a failure.
VerificationReport compare_soft(std::string check, nlohmann::json params, CNum lhs, CNum rhs,
                                const ToleranceCfg& cfg, double tail_estimate = 0.0);

VerificationReport rejected(std::string check, nlohmann::json params, std::string reason);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json cnum_json(CNum z);
CNum cnum_from_json(const nlohmann::json& j);

}  // namespace nfp
