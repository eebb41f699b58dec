#include "qv/qalg.hpp"

#include <stdexcept>

namespace qv {

void ParamPoint::validate() const {
  if (rho.is_zero()) throw std::invalid_argument("rho must be nonzero");
  if (alpha.is_zero()) throw std::invalid_argument("alpha must be nonzero");
  if (gamma.is_zero()) throw std::invalid_argument("gamma must be nonzero");
  if (q() == ExactScalar(1)) throw std::invalid_argument("rho^2 = 1 degenerates (q;q)_k");
  if (n < 0 || ell < 0 || m < 0) throw std::invalid_argument("n, ell, m must be nonnegative");
}

HalfMonomial operator*(const HalfMonomial& x, const HalfMonomial& y) {
  return {x.sign * y.sign, x.e_rho + y.e_rho, x.e_alpha + y.e_alpha, x.e_gamma + y.e_gamma};
}

HalfMonomial operator-(const HalfMonomial& x) {
  return {-x.sign, x.e_rho, x.e_alpha, x.e_gamma};
}

HalfMonomial hm_pow(const HalfMonomial& x, int e) {
  int s = (x.sign < 0 && (e % 2 != 0)) ? -1 : 1;
  return {s, x.e_rho * e, x.e_alpha * e, x.e_gamma * e};
}

int chi(long long n) { return (n % 2 == 0) ? 1 : 0; }

ExactScalar qpoch(const ExactScalar& x, const ExactScalar& base, int count) {
  ExactScalar r(1);
  ExactScalar xq = x;
  for (int k = 0; k < count; ++k) {
    r *= ExactScalar(1) - xq;
    xq *= base;
  }
  return r;
}

ExactScalar ffnk(const std::vector<ExactScalar>& nums,
                 const std::vector<ExactScalar>& dens,
                 const ExactScalar& base, int count) {
  ExactScalar num(1), den(1);
  for (const ExactScalar& x : nums) num *= qpoch(x, base, count);
  for (std::size_t i = 0; i < dens.size(); ++i) {
    ExactScalar xq = dens[i];
    for (int k = 0; k < count; ++k) {
      ExactScalar f = ExactScalar(1) - xq;
      if (f.is_zero())
        throw PoleError("bracket denominator entry " + std::to_string(i) + " (= " +
                        dens[i].str() + ") vanishes at factor k=" + std::to_string(k));
      den *= f;
      xq *= base;
    }
  }
  return num / den;
}

ExactScalar eval_half_monomial(const HalfMonomial& mon, const ParamPoint& p) {
  ExactScalar r = ipow(p.rho, mon.e_rho) * ipow(p.alpha, mon.e_alpha) * ipow(p.gamma, mon.e_gamma);
  return mon.sign < 0 ? -r : r;
}

}  // namespace qv
