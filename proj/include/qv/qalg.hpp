#pragma once

#include <vector>

#include "qv/scalar.hpp"

namespace qv {

// Sample point in the half-power basis: rho = sqrt(q), alpha = sqrt(a),
// gamma = sqrt(c), all signed rationals. q, a, c are derived, never stored,
// so every radical the identities use evaluates to an exact rational.
// n is the truncation order; ell and m are the nonnegative shift parameters;
// u and v are the signed variants (registry entries fix u = +/-ell,
// v = +/-m as appropriate).
struct ParamPoint {
  ExactScalar rho, alpha, gamma;
  int n = 0;
  int ell = 0;
  int m = 0;
  int u = 0;
  int v = 0;

  ExactScalar q() const { return rho * rho; }
  ExactScalar a() const { return alpha * alpha; }
  ExactScalar c() const { return gamma * gamma; }
  ExactScalar q2() const { return ipow(rho, 4); }

  // Throws std::invalid_argument unless rho, alpha, gamma are nonzero,
  // rho^2 != 1, and n, ell, m are nonnegative.
  void validate() const;
};

// sign * rho^e_rho * alpha^e_alpha * gamma^e_gamma, i.e. an exact monomial
// in the half-power basis: q^(e_rho/2) a^(e_alpha/2) c^(e_gamma/2). Every
// square root and half-integer power in the registry compiles to one.
struct HalfMonomial {
  int sign = 1;  // +1 or -1
  int e_rho = 0;
  int e_alpha = 0;
  int e_gamma = 0;
};

HalfMonomial operator*(const HalfMonomial& x, const HalfMonomial& y);
HalfMonomial operator-(const HalfMonomial& x);
HalfMonomial hm_pow(const HalfMonomial& x, int e);  // e may be negative

// Parity gate (1 + (-1)^n)/2: 1 for even n, 0 for odd n.
int chi(long long n);

// q-shifted factorial (x;base)_count = prod_{k=0}^{count-1} (1 - x base^k).
// count = 0 gives 1. Zero results are legal values, not errors.
ExactScalar qpoch(const ExactScalar& x, const ExactScalar& base, int count);

// Fraction bracket: prod over numerator entries of (x;base)_count divided by
// the same product over denominator entries. All entries share base and
// count. Throws PoleError naming the denominator entry and the k at which
// its factor vanishes.
ExactScalar ffnk(const std::vector<ExactScalar>& nums,
                 const std::vector<ExactScalar>& dens,
                 const ExactScalar& base, int count);

ExactScalar eval_half_monomial(const HalfMonomial& mon, const ParamPoint& p);

}  // namespace qv
