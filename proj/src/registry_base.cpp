#include <utility>

#include "registry_detail.hpp"

namespace qv {

ExactScalar sear_lhs(const SearPoint& s, const ExactScalar& q) {
  PhiSeries f;
  f.numerator_params = {ipow(q, -s.n), s.a, s.b, s.c};
  f.denominator_params = {s.d, s.e, ipow(q, 1 - s.n) * s.a * s.b * s.c / (s.d * s.e)};
  f.argument = q;
  f.term_count = s.n + 1;
  return phi_sum(f, q);
}

ExactScalar sear_rhs(const SearPoint& s, const ExactScalar& q) {
  ExactScalar de = s.d * s.e;
  ExactScalar bc = s.b * s.c;
  ExactScalar pre = ffnk({s.d / s.a, de / bc}, {s.d, de / (s.a * bc)}, q, s.n);
  PhiSeries f;
  f.numerator_params = {ipow(q, -s.n), s.a, s.e / s.b, s.e / s.c};
  f.denominator_params = {s.e, de / bc, ipow(q, 1 - s.n) * s.a / s.d};
  f.argument = q;
  f.term_count = s.n + 1;
  return pre * phi_sum(f, q);
}

// Pin the five free slots to monomials in the half-power basis so the
// balanced-series transformation can run on the shared grid. The choices keep
// every parameter a nonzero rational and exercise both signs.
SearPoint sear_embed(const ParamPoint& p) {
  detail::Ctx c(p);
  SearPoint s;
  s.a = c.M(0, 2, 0);
  s.b = c.M(0, 0, 2);
  s.c = -c.M(1, 0, 1);
  s.d = c.M(3, 1, 0);
  s.e = -c.M(2, 0, 1);
  s.n = p.n;
  return s;
}

}  // namespace qv

namespace qv::detail {
namespace {

IdentitySpec make(const char* id, const char* citation, Family family) {
  IdentitySpec s;
  s.id = id;
  s.citation = citation;
  s.family = family;
  s.ell_mode = ParamMode::Unused;
  s.m_mode = ParamMode::Unused;
  return s;
}

}  // namespace

void append_base_entries(std::vector<IdentitySpec>& out) {
  {
    auto s = make("sear", "Sears' transformation of a terminating balanced 4phi3", Family::Base);
    s.lhs = [](const ParamPoint& p) { return sear_lhs(sear_embed(p), p.q()); };
    s.rhs_closed = [](const ParamPoint& p) { return sear_rhs(sear_embed(p), p.q()); };
    out.push_back(std::move(s));
  }
  {
    auto s = make("terminating-65",
                  "terminating very well poised 6phi5 summation; the shift index rides n",
                  Family::Base);
    s.lhs = [](const ParamPoint& p) {
      Ctx c(p);
      long mm = c.n;
      return c.phi({c.M(0, 2), c.M(2, 1), -c.M(2, 1), c.M(0, 0, 2), -c.M(1, 0, 1), c.Q(-mm)},
                   {c.M(0, 1), -c.M(0, 1), c.M(2, 2, -2), -c.M(1, 2, -1), c.M(2 + 2 * mm, 2)},
                   -c.M(1 + 2 * mm, 2, -3), mm + 1);
    };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      long mm = c.n;
      return c.br({c.M(2, 2), -c.M(1, 2, -3)}, {c.M(2, 2, -2), -c.M(1, 2, -1)}, mm);
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("andrews-watson", "Andrews' terminating q-Watson summation", Family::Base);
    s.lhs = [](const ParamPoint& p) {
      Ctx c(p);
      return c.phiq({c.Q(-c.n), c.M(2 + 2 * c.n, 2), c.M(0, 0, 1), -c.M(0, 0, 1)},
                    {c.M(2, 1), -c.M(2, 1), c.M(0, 0, 2)}, c.n + 1);
    };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      if (chi(c.n) == 0) return ExactScalar(0);
      return c.M(0, 0, c.n) *
             c.br2({c.Q(1), c.M(4, 2, -2)}, {c.M(4, 2), c.M(2, 0, 2)}, c.n / 2);
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("jain-watson", "Jain's terminating q-Watson summation", Family::Base);
    s.lhs = [](const ParamPoint& p) {
      Ctx c(p);
      return c.phiq({c.M(0, 2), c.M(0, 0, 2), c.Q(-c.n), -c.Q(-c.n)},
                    {c.M(1, 1, 1), -c.M(1, 1, 1), c.Q(-2 * c.n)}, c.n + 1);
    };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return c.br2({c.M(2, 2), c.M(2, 0, 2)}, {c.Q(1), c.M(2, 2, 2)}, c.n);
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("bailey-dixon", "Bailey's terminating q-Dixon summation", Family::Base);
    s.lhs = [](const ParamPoint& p) {
      Ctx c(p);
      return c.phiq({c.Q(-c.n), c.M(0, 2), c.M(0, 0, 2), -c.M(2 - 2 * c.n, -2, -2)},
                    {c.M(2 - 2 * c.n, -2), c.M(2 - 2 * c.n, 0, -2), -c.M(0, 2, 2)}, c.n + 1);
    };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      if (chi(c.n) == 0) return ExactScalar(0);
      return c.br({-c.M(0, 2), c.M(0, 0, 4)}, {-c.M(0, 2, 2), c.M(0, 0, 2)}, c.n) *
             c.br2({c.Q(1), c.M(2 * c.n, 4, 4)}, {c.M(2, 0, 4), c.M(2 * c.n, 4)}, c.n / 2);
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("another-dixon", "companion terminating q-Dixon summation", Family::Base);
    s.lhs = [](const ParamPoint& p) {
      Ctx c(p);
      return c.phiq({c.M(0, 2), c.M(0, 0, 2), c.Q(-c.n), -c.M(2 + 2 * c.n, 2, -2)},
                    {c.M(2, 2, -2), c.M(2 + 2 * c.n, 2), -c.M(-2 * c.n, 0, 2)}, c.n + 1);
    };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return c.br({c.Q(1 + c.n), -c.M(2, 2, -2)}, {c.M(2 + 2 * c.n, 2), -c.M(2, 0, -2)}, c.n) *
             c.br2({c.M(2, 2), c.M(4, 2, -4)}, {c.Q(1), c.M(4, 4, -4)}, c.n);
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("andrews-whipple", "Andrews' terminating q-Whipple summation", Family::Base);
    s.lhs = [](const ParamPoint& p) {
      Ctx c(p);
      return c.phiq({c.Q(-c.n), c.Q(1 + c.n), c.M(1, 1, 1), -c.M(1, 1, 1)},
                    {-c.Q(1), c.M(2, 2), c.M(2, 0, 2)}, c.n + 1);
    };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return c.Q(ch2(c.n + 1)) * c.poch2(c.M(2 - 2 * c.n, 2), c.n) *
             c.poch2(c.M(2 - 2 * c.n, 0, 2), c.n) /
             (c.poch(c.M(2, 2), c.n) * c.poch(c.M(2, 0, 2), c.n));
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("jain-whipple", "Jain's terminating q-Whipple summation", Family::Base);
    s.lhs = [](const ParamPoint& p) {
      Ctx c(p);
      return c.phiq({c.M(0, 2), c.M(2, -2), c.Q(-c.n), -c.Q(-c.n)},
                    {c.M(0, 0, 2), c.M(2 - 4 * c.n, 0, -2), -c.Q(1)}, c.n + 1);
    };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return c.poch2(c.M(0, 2, 2), c.n) * c.poch2(c.M(2, -2, 2), c.n) /
             c.poch(c.M(0, 0, 2), 2 * c.n);
    };
    out.push_back(std::move(s));
  }
}

void append_hidden_fixtures(std::vector<IdentitySpec>& out) {
  // jain-watson with the last denominator entry of the closed form corrupted
  // (q^2 a c instead of q a c). The harness must flag it, so it stays out of
  // the public roster and is reachable by id only.
  auto s = make("x-corrupt-jain-watson",
                "deliberately wrong variant used to prove failures are detected", Family::Base);
  s.lhs = [](const ParamPoint& p) {
    Ctx c(p);
    return c.phiq({c.M(0, 2), c.M(0, 0, 2), c.Q(-c.n), -c.Q(-c.n)},
                  {c.M(1, 1, 1), -c.M(1, 1, 1), c.Q(-2 * c.n)}, c.n + 1);
  };
  s.rhs_closed = [](const ParamPoint& p) {
    Ctx c(p);
    return c.br2({c.M(2, 2), c.M(2, 0, 2)}, {c.Q(1), c.M(4, 2, 2)}, c.n);
  };
  out.push_back(std::move(s));
}

}  // namespace qv::detail
