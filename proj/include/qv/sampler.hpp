#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qv/registry.hpp"

namespace qv {

struct SamplingExhausted : std::runtime_error {
  explicit SamplingExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct SampleConfig {
  std::uint64_t seed = 0;
  // Candidates for rho, alpha, gamma. Empty means default_pool(). Candidates
  // with |value| = 1 are never used for rho (q = 1 kills every (q;q)_k).
  std::vector<ExactScalar> pool;
  int max_resamples = 100;
};

std::vector<ExactScalar> default_pool();

// Deterministic candidate stream for one grid cell. Draws are a pure function
// of (seed, identity id, n, ell, m, attempt); the attempt cursor keeps
// advancing across successive points of the same cell so they never coincide.
class CellSampler {
 public:
  CellSampler(const SampleConfig& cfg, const IdentitySpec& spec, long n, long ell, long m);

  // Returns a point at which the entry's left side, closed right side, and
  // derived right side (when present) all evaluate without PoleError. Sets
  // `resamples` to the number of rejected candidates. Throws
  // SamplingExhausted once a single draw burns through max_resamples
  // candidates.
  ParamPoint next(int& resamples);

 private:
  ParamPoint candidate();
  bool survives_trial(const ParamPoint& p) const;

  const IdentitySpec& spec_;
  std::vector<ExactScalar> pool_;
  std::vector<ExactScalar> rho_pool_;
  int max_resamples_;
  long n_, ell_, m_;
  std::uint64_t stream_;
  std::uint64_t attempt_ = 0;
};

// Single-shot convenience wrapper over CellSampler.
ParamPoint draw_point(const SampleConfig& cfg, long n, long ell, long m,
                      const IdentitySpec& spec);

}  // namespace qv
