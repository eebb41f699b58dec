#include "qv/phi.hpp"

namespace qv {

namespace {

[[noreturn]] void pole_at(std::size_t param_index, const ExactScalar& param, int k) {
  throw PoleError("series denominator parameter " + std::to_string(param_index) + " (= " +
                  param.str() + ") vanishes at k=" + std::to_string(k));
}

}  // namespace

ExactScalar phi_sum(const PhiSeries& s, const ExactScalar& base) {
  if (s.term_count <= 0) return ExactScalar(0);
  ExactScalar sum(1), term(1);
  std::vector<ExactScalar> nq = s.numerator_params;
  std::vector<ExactScalar> dq = s.denominator_params;
  ExactScalar bq = base;  // base^{k+1}, the implicit (base;base) factor
  for (int k = 0; k + 1 < s.term_count; ++k) {
    ExactScalar ratio = s.argument;
    for (ExactScalar& x : nq) {
      ratio *= ExactScalar(1) - x;
      x *= base;
    }
    for (std::size_t j = 0; j < dq.size(); ++j) {
      ExactScalar f = ExactScalar(1) - dq[j];
      if (f.is_zero()) pole_at(j, s.denominator_params[j], k);
      ratio /= f;
      dq[j] *= base;
    }
    ExactScalar f = ExactScalar(1) - bq;
    if (f.is_zero()) throw PoleError("series base hits a unit power at k=" + std::to_string(k));
    ratio /= f;
    bq *= base;
    term *= ratio;
    sum += term;
  }
  return sum;
}

ExactScalar phi_sum_naive(const PhiSeries& s, const ExactScalar& base) {
  ExactScalar sum(0);
  for (int k = 0; k < s.term_count; ++k) {
    ExactScalar num = ipow(s.argument, k);
    for (const ExactScalar& x : s.numerator_params) num *= qpoch(x, base, k);
    ExactScalar den = qpoch(base, base, k);
    for (std::size_t j = 0; j < s.denominator_params.size(); ++j) {
      ExactScalar xq = s.denominator_params[j];
      for (int i = 0; i < k; ++i) {
        ExactScalar f = ExactScalar(1) - xq;
        if (f.is_zero()) pole_at(j, s.denominator_params[j], i);
        den *= f;
        xq *= base;
      }
    }
    sum += num / den;
  }
  return sum;
}

PhiSeries build_phi(const std::vector<HalfMonomial>& numerator_monomials,
                    const std::vector<HalfMonomial>& denominator_monomials,
                    const HalfMonomial& argument, int term_count,
                    const ParamPoint& p) {
  PhiSeries s;
  s.numerator_params.reserve(numerator_monomials.size());
  for (const HalfMonomial& m : numerator_monomials)
    s.numerator_params.push_back(eval_half_monomial(m, p));
  s.denominator_params.reserve(denominator_monomials.size());
  for (const HalfMonomial& m : denominator_monomials)
    s.denominator_params.push_back(eval_half_monomial(m, p));
  s.argument = eval_half_monomial(argument, p);
  s.term_count = term_count;
  return s;
}

}  // namespace qv
