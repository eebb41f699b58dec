#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qv/registry.hpp"
#include "qv/sampler.hpp"

namespace qv {

enum class Status { Pass, Fail, SkipConstraint, SkipPole, Discrepant };

const char* status_name(Status s);
Status status_from_name(const std::string& name);

struct VerificationRecord {
  std::string identity_id;
  long n = 0;
  long ell = 0;
  long m = 0;
  int point_index = 0;
  std::optional<ParamPoint> point;  // absent on skipped points
  std::optional<ExactScalar> lhs;
  std::optional<ExactScalar> rhs_closed;
  std::optional<ExactScalar> rhs_derived;
  bool derived_skipped = false;  // derived route rejected its transformed point
  Status status = Status::Pass;
  int resamples = 0;
  std::int64_t elapsed_micros = 0;  // informational; zeroed under stable output
};

struct SummaryCounts {
  long pass = 0;
  long fail = 0;
  long skip_constraint = 0;
  long skip_pole = 0;
  long discrepant = 0;

  long total() const { return pass + fail + skip_constraint + skip_pole + discrepant; }
};

struct RunConfig {
  std::vector<std::string> ids;
  long n_min = 0;
  long n_max = 8;
  long ell_max = 2;
  long m_max = 2;
  int points_per_cell = 1;
  SampleConfig sample;
  int jobs = 1;
  bool fail_fast = false;
  bool stable_output = false;
};

struct Report {
  RunConfig config;
  // Sorted by (identity_id, n, ell, m, point_index) regardless of how many
  // workers produced them.
  std::vector<VerificationRecord> records;
  SummaryCounts summary;
  std::map<std::string, SummaryCounts> per_identity;

  bool has_failures() const { return summary.fail > 0 || summary.discrepant > 0; }
};

// Evaluates every route of one entry at a prepared point and classifies the
// outcome. The caller is responsible for constraint filtering.
VerificationRecord compare_cell(const IdentitySpec& spec, const ParamPoint& p);

Report run_grid(const RunConfig& cfg);

}  // namespace qv
