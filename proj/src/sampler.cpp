#include "qv/sampler.hpp"

namespace qv {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t mix_in(std::uint64_t state, std::uint64_t value) {
  state ^= value + 0x9e3779b97f4a7c15ull + (state << 6) + (state >> 2);
  std::uint64_t s = state;
  return splitmix64(s);
}

std::uint64_t hash_string(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

bool unit_magnitude(const ExactScalar& x) {
  return x == ExactScalar(1) || x == ExactScalar(-1);
}

}  // namespace

std::vector<ExactScalar> default_pool() {
  std::vector<ExactScalar> out;
  for (const char* s : {"1/2", "1/3", "2/3", "2/5", "3/5", "2", "3/2", "5/3"}) {
    ExactScalar v = ExactScalar::parse(s);
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

CellSampler::CellSampler(const SampleConfig& cfg, const IdentitySpec& spec,
                         long n, long ell, long m)
    : spec_(spec),
      pool_(cfg.pool.empty() ? default_pool() : cfg.pool),
      max_resamples_(cfg.max_resamples),
      n_(n),
      ell_(ell),
      m_(m) {
  for (const ExactScalar& v : pool_) {
    if (v.is_zero()) throw std::invalid_argument("sampler pool contains zero");
    if (!unit_magnitude(v)) rho_pool_.push_back(v);
  }
  if (rho_pool_.empty())
    throw std::invalid_argument("sampler pool has no candidate with |value| != 1");
  std::uint64_t s = cfg.seed;
  s = mix_in(s, hash_string(spec.id));
  s = mix_in(s, static_cast<std::uint64_t>(n));
  s = mix_in(s, static_cast<std::uint64_t>(ell));
  s = mix_in(s, static_cast<std::uint64_t>(m));
  stream_ = s;
}

ParamPoint CellSampler::candidate() {
  std::uint64_t state = mix_in(stream_, attempt_);
  ++attempt_;
  ParamPoint p;
  p.rho = rho_pool_[splitmix64(state) % rho_pool_.size()];
  p.alpha = pool_[splitmix64(state) % pool_.size()];
  p.gamma = pool_[splitmix64(state) % pool_.size()];
  p.n = n_;
  p.ell = ell_;
  p.m = m_;
  if (spec_.uses_uv) {
    p.u = spec_.sign_u * ell_;
    p.v = spec_.sign_v * m_;
  }
  return p;
}

bool CellSampler::survives_trial(const ParamPoint& p) const {
  try {
    spec_.lhs(p);
    spec_.rhs_closed(p);
    if (spec_.has_derived()) {
      try {
        spec_.rhs_derived(p);
      } catch (const ConstraintError&) {
        // The derived route refusing a transformed point is not a pole; the
        // harness records it separately.
      }
    }
  } catch (const PoleError&) {
    return false;
  }
  return true;
}

ParamPoint CellSampler::next(int& resamples) {
  for (int tries = 0; tries < max_resamples_; ++tries) {
    ParamPoint p = candidate();
    if (survives_trial(p)) {
      resamples = tries;
      return p;
    }
  }
  resamples = max_resamples_;
  throw SamplingExhausted(spec_.id + ": no pole-free point after " +
                          std::to_string(max_resamples_) + " attempts at n=" +
                          std::to_string(n_) + " ell=" + std::to_string(ell_) +
                          " m=" + std::to_string(m_));
}

ParamPoint draw_point(const SampleConfig& cfg, long n, long ell, long m,
                      const IdentitySpec& spec) {
  CellSampler sampler(cfg, spec, n, ell, m);
  int resamples = 0;
  return sampler.next(resamples);
}

}  // namespace qv
