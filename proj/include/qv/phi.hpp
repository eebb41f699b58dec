#pragma once

#include <vector>

#include "qv/qalg.hpp"

namespace qv {

// One terminating basic hypergeometric sum, fully instantiated at a point.
// term_count (= truncation order + 1) is always supplied explicitly by the
// caller; it is never inferred by scanning the parameters for q^(-n), since
// several identities carry more than one such entry.
struct PhiSeries {
  std::vector<ExactScalar> numerator_params;
  std::vector<ExactScalar> denominator_params;
  ExactScalar argument;
  int term_count = 0;
};

// Sum_{k=0}^{term_count-1} [prod_i (n_i;base)_k / ((base;base)_k
// prod_j (d_j;base)_k)] * argument^k, computed incrementally through the
// term ratio t_{k+1}/t_k. The (base;base)_k factor is implicit; callers
// never list the base among the denominator parameters. Every denominator
// factor with k < term_count is checked, even after the running term hits
// an exact zero, so the pole set matches the naive evaluation exactly.
ExactScalar phi_sum(const PhiSeries& s, const ExactScalar& base);

// Independent brute-force evaluation: each term's Pochhammers are recomputed
// from scratch. Kept as the cross-check oracle for phi_sum.
ExactScalar phi_sum_naive(const PhiSeries& s, const ExactScalar& base);

// Evaluates each monomial at p and records term_count.
PhiSeries build_phi(const std::vector<HalfMonomial>& numerator_monomials,
                    const std::vector<HalfMonomial>& denominator_monomials,
                    const HalfMonomial& argument, int term_count,
                    const ParamPoint& p);

}  // namespace qv
