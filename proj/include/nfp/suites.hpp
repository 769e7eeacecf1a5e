#pragma once

// Batch verification suites shared by the CLI and the acceptance runner.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfp/random.hpp"
#include "nfp/report.hpp"
#include "nfp/reps.hpp"

namespace nfp::suites {

struct RunConfig {
  std::optional<long> qf;
  std::optional<long> p;
  std::optional<long> u;
  std::optional<long> n;
  std::optional<long> c;
  std::optional<int> eps;
  std::vector<CNum> satake;
  std::optional<reps::GenericRep> rep;
  long depth = 40;
  std::optional<double> tol_rel;
  std::optional<double> tol_abs;
  std::uint64_t seed = 20240617;
  long vmax = 4;
  std::size_t draws = 0;  ///< 0 keeps each suite's own draw count
};

/// Throws std::invalid_argument (or RejectedInput) when the configuration
/// violates a hypothesis of the named suite.
void validate(const std::string& suite, const RunConfig& cfg);

const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite).  Throws std::invalid_argument
/// for an unknown name.
std::vector<VerificationReport> run(const std::string& suite, const RunConfig& cfg);

std::vector<VerificationReport> macdonald(const RunConfig& cfg);
std::vector<VerificationReport> beta(const RunConfig& cfg);
std::vector<VerificationReport> lambda(const RunConfig& cfg);
std::vector<VerificationReport> theta(const RunConfig& cfg);
std::vector<VerificationReport> asai_cancel(const RunConfig& cfg);
std::vector<VerificationReport> volumes(const RunConfig& cfg);
std::vector<VerificationReport> c1(const RunConfig& cfg);
std::vector<VerificationReport> main_theorem(const RunConfig& cfg);
std::vector<VerificationReport> fl_rank1(const RunConfig& cfg);
std::vector<VerificationReport> matrix_identities(const RunConfig& cfg);
std::vector<VerificationReport> satake(const RunConfig& cfg);

/// Stable order by (check, params.dump()).
void sort_reports(std::vector<VerificationReport>& reports);

/// Number of reports with the given status.
std::size_t count(const std::vector<VerificationReport>& reports, Status s);

/// 1 if any report is a hard failure, else 0.
int exit_code(const std::vector<VerificationReport>& reports);

/// Draws a conjugate-self-dual multiset on the unit circle of size m.
std::vector<CNum> selfdual_unit_multiset(std::size_t m, rnd::Engine& g);

}  // namespace nfp::suites
