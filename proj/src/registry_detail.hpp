#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qv/phi.hpp"
#include "qv/registry.hpp"

namespace qv::detail {

// x choose 2. Printed exponents of the form binom(j+1, 2) become ch2(j + 1).
inline long ch2(long x) { return x * (x - 1) / 2; }

inline ParamPoint pt(ExactScalar rho, ExactScalar alpha, ExactScalar gamma,
                     long n, long ell = 0, long m = 0) {
  ParamPoint p;
  p.rho = std::move(rho);
  p.alpha = std::move(alpha);
  p.gamma = std::move(gamma);
  p.n = static_cast<int>(n);
  p.ell = static_cast<int>(ell);
  p.m = static_cast<int>(m);
  return p;
}

// Shorthand layer the entry files are written in. Every formula reduces to
// monomials rho^i alpha^j gamma^k, fraction brackets in base q or q^2, and
// terminating series in base q.
struct Ctx {
  const ParamPoint& p;
  ExactScalar q, qq;  // q and q^2
  long n, ell, m;

  explicit Ctx(const ParamPoint& point)
      : p(point), q(point.q()), qq(point.q2()), n(point.n), ell(point.ell), m(point.m) {}

  // rho^er * alpha^ea * gamma^eg; er counts half powers of q.
  ExactScalar M(long er, long ea = 0, long eg = 0) const {
    return ipow(p.rho, er) * ipow(p.alpha, ea) * ipow(p.gamma, eg);
  }
  ExactScalar Q(long e) const { return ipow(p.rho, 2 * e); }

  ExactScalar br(std::vector<ExactScalar> nums, std::vector<ExactScalar> dens, long count) const {
    return ffnk(nums, dens, q, static_cast<int>(count));
  }
  ExactScalar br2(std::vector<ExactScalar> nums, std::vector<ExactScalar> dens, long count) const {
    return ffnk(nums, dens, qq, static_cast<int>(count));
  }
  ExactScalar poch(const ExactScalar& x, long count) const {
    return qpoch(x, q, static_cast<int>(count));
  }
  ExactScalar poch2(const ExactScalar& x, long count) const {
    return qpoch(x, qq, static_cast<int>(count));
  }

  ExactScalar phi(std::vector<ExactScalar> nums, std::vector<ExactScalar> dens,
                  ExactScalar z, long terms) const {
    PhiSeries s;
    s.numerator_params = std::move(nums);
    s.denominator_params = std::move(dens);
    s.argument = std::move(z);
    s.term_count = static_cast<int>(terms);
    return phi_sum(s, q);
  }
  // Series whose argument column is q itself.
  ExactScalar phiq(std::vector<ExactScalar> nums, std::vector<ExactScalar> dens, long terms) const {
    return phi(std::move(nums), std::move(dens), q, terms);
  }
};

// Look up another entry's closed form. First checks the target's own side
// conditions at p and throws ConstraintError naming both entries when they
// reject the transformed point; throws std::logic_error if id is unknown.
ExactScalar closed_at(const char* id, const ParamPoint& p, const char* requested_by);

// Entry builders, one per source file.
void append_base_entries(std::vector<IdentitySpec>& out);
void append_watson_entries(std::vector<IdentitySpec>& out);
void append_dixon_entries(std::vector<IdentitySpec>& out);
void append_whipple_entries(std::vector<IdentitySpec>& out);

// Deliberately corrupted fixtures reachable through find_identity only.
void append_hidden_fixtures(std::vector<IdentitySpec>& out);

}  // namespace qv::detail
