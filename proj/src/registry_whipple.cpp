#include <utility>

#include "registry_detail.hpp"

namespace qv::detail {
namespace {

IdentitySpec make(const char* id, const char* citation, Family family) {
  IdentitySpec s;
  s.id = id;
  s.citation = citation;
  s.family = family;
  return s;
}

bool m_le_n(const ParamPoint& p) { return p.m <= p.n; }
bool ell_le_n(const ParamPoint& p) { return p.ell <= p.n; }

// First Whipple shape: both shifts act on the q-power slots, keeping the
// sqrt(qac) pair intact.
ExactScalar whipple_a_lhs(const Ctx& c, long u, long v) {
  return c.phiq({c.Q(-c.n), c.Q(1 + c.n + u), c.M(1, 1, 1), -c.M(1 + 2 * v, 1, 1)},
                {-c.Q(1), c.M(2 + 2 * u + 2 * v, 2), c.M(2, 0, 2)}, c.n + 1);
}

// Second Whipple shape: u shifts the q/a slot, v the lower q-power.
ExactScalar whipple_b_lhs(const Ctx& c, long u, long v) {
  return c.phiq({c.M(0, 2), c.M(2 + 2 * u, -2), c.Q(-c.n), -c.Q(v - c.n)},
                {c.M(0, 0, 2), c.M(2 + 2 * u + 2 * v - 4 * c.n, 0, -2), -c.Q(1)},
                c.n + 1);
}

ExactScalar whipple_a_pre(const Ctx& c, long u, long v) {
  return c.br({c.M(1 - 2 * c.n, 1, -1), -c.M(1 + 2 * v - 2 * c.n, 1, -1),
               c.Q(1 + c.n + u)},
              {c.M(2 + 2 * u + 2 * v, 2), c.M(-2 * c.n, 0, -2), -c.Q(1)}, c.n);
}

ExactScalar whipple_b_pre(const Ctx& c, long u, long v) {
  return c.br({c.Q(1 - v + c.n), -c.M(-2 * u, 0, 2)},
              {c.M(2 * c.n - 2 * u - 2 * v, 0, 2), -c.Q(1)}, c.n);
}

// m-length fraction shared by the first-shape closed forms.
ExactScalar whipple_a_m_fraction(const Ctx& c) {
  return c.br({c.M(2 * c.m - 2 * c.n, 2), c.M(1, 1, 1)},
              {c.M(2 * c.m, 2, 2), c.M(1 - 2 * c.n, 1, -1)}, c.m);
}

ExactScalar thm_k_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = whipple_a_pre(c, c.ell, c.m) * whipple_a_m_fraction(c);
  ExactScalar denom = ExactScalar(1) - c.M(4 * c.m, 2, 2);
  ExactScalar total(0);
  for (long j = 0; j <= c.m; ++j) {
    ExactScalar fj = c.br({c.Q(-c.m), c.M(-2 * c.n, 0, -2), c.M(-4 * c.m, -2, -2)},
                          {c.Q(1), c.M(2 - 4 * c.m + 2 * c.n, -2),
                           c.M(2 - 2 * c.m, -2, -2)}, j);
    if (fj.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(4 * c.m - 4 * j, 2, 2)) / denom;
    for (long i = 0; i <= c.ell; ++i) {
      ExactScalar fi =
          c.br({c.Q(-c.ell), c.Q(-c.ell - c.n), -c.Q(-c.ell - c.n),
                c.M(4 * c.m - 2 * c.n - 2 * j, 2), c.M(2 * j - 2 * c.n, 0, -2)},
               {c.Q(1), c.M(2 * c.m - 2 * c.n + 1, 1, -1),
                -c.M(2 * c.m - 2 * c.n + 1, 1, -1), c.Q(-c.ell - 2 * c.n),
                c.Q(i - 2 * c.ell - 2 * c.n - 1)}, i);
      if (fi.is_zero()) continue;
      ExactScalar sign_i = (i % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
      total += sign_i * c.Q(ch2(i + 1) - c.n * i) *
               c.M((2 * c.n + 5) * j, -j, j) * ratio * fi * fj *
               c.br2({c.M(2 + 4 * c.m - 2 * c.n + 2 * i - 2 * j, 2),
                      c.M(2 - 2 * c.n + 2 * i + 2 * j, 0, -2)},
                     {c.Q(1), c.M(2 + 4 * c.m - 4 * c.n + 4 * i, 2, -2)},
                     c.ell + c.n - i);
    }
  }
  return pre * total;
}

ExactScalar thm_l_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = whipple_a_pre(c, -c.ell, c.m) * whipple_a_m_fraction(c);
  ExactScalar denom = ExactScalar(1) - c.M(4 * c.m, 2, 2);
  ExactScalar total(0);
  for (long j = 0; j <= c.m; ++j) {
    ExactScalar fj = c.br({c.Q(-c.m), c.M(-2 * c.n, 0, -2), c.M(-4 * c.m, -2, -2)},
                          {c.Q(1), c.M(2 - 4 * c.m + 2 * c.n, -2),
                           c.M(2 - 2 * c.m, -2, -2)}, j);
    if (fj.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(4 * c.m - 4 * j, 2, 2)) / denom;
    for (long i = 0; i <= c.ell; ++i) {
      ExactScalar fi =
          c.br({c.Q(-c.ell), c.Q(-c.n), -c.Q(-c.n),
                c.M(4 * c.m - 2 * c.n - 2 * j, 2), c.M(2 * j - 2 * c.n, 0, -2)},
               {c.Q(1), c.M(2 * c.m - 2 * c.n + 1, 1, -1),
                -c.M(2 * c.m - 2 * c.n + 1, 1, -1), c.Q(c.ell - 2 * c.n),
                c.Q(i - 2 * c.n - 1)}, i);
      if (fi.is_zero()) continue;
      total += c.Q((c.ell - c.n) * i + ch2(i + 1)) *
               c.M((2 * c.n + 5) * j, -j, j) * ratio * fi * fj *
               c.br2({c.M(2 + 4 * c.m - 2 * c.n + 2 * i - 2 * j, 2),
                      c.M(2 - 2 * c.n + 2 * i + 2 * j, 0, -2)},
                     {c.Q(1), c.M(2 + 4 * c.m - 4 * c.n + 4 * i, 2, -2)},
                     c.n - i);
    }
  }
  return pre * total;
}

ExactScalar thm_m_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(4, -2, -2), -c.M(2, -2)},
                         {c.M(4, -4), -c.M(2, 0, -2)}, c.ell) *
                    whipple_b_pre(c, c.ell, c.m);
  ExactScalar denom = ExactScalar(1) - c.M(2, -4);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(0, -2, 2), c.M(2, -4)},
                          {c.Q(1), c.M(4, -2, -2), c.M(4 + 2 * c.ell, -4)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 + 4 * i, -4)) / denom;
    ExactScalar sign_i = (i % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(-c.n), -c.Q(-c.n),
                             c.M(-2 - 2 * i, 2, 2), c.M(2 * i, -2, 2)},
                            {c.Q(1), c.M(0, 0, 2), -c.M(0, 0, 2),
                             c.Q(c.m - 2 * c.n), c.Q(j - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      total += sign_i * c.Q((c.ell + 1) * i + (c.m - c.n) * j + ch2(j + 1)) *
               c.M(0, 0, -2 * i) * ratio * fi * fj *
               c.br2({c.M(2 * j - 2 * i, 2, 2), c.M(2 + 2 * i + 2 * j, -2, 2)},
                     {c.Q(1), c.M(4 * j, 0, 4)}, c.n - j);
    }
  }
  return pre * total;
}

ExactScalar thm_n_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(4, -2, -2), -c.M(2, -2)},
                         {c.M(4, -4), -c.M(2, 0, -2)}, c.ell) *
                    whipple_b_pre(c, c.ell, -c.m);
  ExactScalar denom = ExactScalar(1) - c.M(2, -4);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(0, -2, 2), c.M(2, -4)},
                          {c.Q(1), c.M(4, -2, -2), c.M(4 + 2 * c.ell, -4)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 + 4 * i, -4)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(-c.m - c.n), -c.Q(-c.m - c.n),
                             c.M(-2 - 2 * i, 2, 2), c.M(2 * i, -2, 2)},
                            {c.Q(1), c.M(0, 0, 2), -c.M(0, 0, 2),
                             c.Q(-c.m - 2 * c.n), c.Q(j - 2 * c.m - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      ExactScalar sign = ((i + j) % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
      total += sign * c.Q((c.ell + 1) * i - c.n * j + ch2(j + 1)) *
               c.M(0, 0, -2 * i) * ratio * fi * fj *
               c.br2({c.M(2 * j - 2 * i, 2, 2), c.M(2 + 2 * i + 2 * j, -2, 2)},
                     {c.Q(1), c.M(4 * j, 0, 4)}, c.m + c.n - j);
    }
  }
  return pre * total;
}

ExactScalar thm_o_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(0, 2), c.M(2 * c.ell - 2, 2, 2)},
                         {c.M(0, 0, 2), c.M(2 * c.ell - 2, 4)}, c.ell) *
                    whipple_b_pre(c, -c.ell, c.m);
  ExactScalar denom = ExactScalar(1) - c.M(2 - 4 * c.ell, -4);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(0, -2, 2), c.M(2 - 4 * c.ell, -4)},
                          {c.Q(1), c.M(4 - 4 * c.ell, -2, -2), c.M(4 - 2 * c.ell, -4)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 - 4 * c.ell + 4 * i, -4)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(-c.n), -c.Q(-c.n),
                             c.M(4 * c.ell - 2 - 2 * i, 2, 2), c.M(2 * i, -2, 2)},
                            {c.Q(1), c.M(2 * c.ell, 0, 2), -c.M(2 * c.ell, 0, 2),
                             c.Q(c.m - 2 * c.n), c.Q(j - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      total += c.Q(i + (c.m - c.n) * j + ch2(j + 1)) * c.M(0, 0, -2 * i) *
               ratio * fi * fj *
               c.br2({c.M(4 * c.ell - 2 * i + 2 * j, 2, 2),
                      c.M(2 + 2 * i + 2 * j, -2, 2)},
                     {c.Q(1), c.M(4 * c.ell + 4 * j, 0, 4)}, c.n - j);
    }
  }
  return pre * total;
}

ExactScalar thm_p_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(0, 2), c.M(2 * c.ell - 2, 2, 2)},
                         {c.M(0, 0, 2), c.M(2 * c.ell - 2, 4)}, c.ell) *
                    whipple_b_pre(c, -c.ell, -c.m);
  ExactScalar denom = ExactScalar(1) - c.M(2 - 4 * c.ell, -4);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(0, -2, 2), c.M(2 - 4 * c.ell, -4)},
                          {c.Q(1), c.M(4 - 4 * c.ell, -2, -2), c.M(4 - 2 * c.ell, -4)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 - 4 * c.ell + 4 * i, -4)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(-c.m - c.n), -c.Q(-c.m - c.n),
                             c.M(4 * c.ell - 2 - 2 * i, 2, 2), c.M(2 * i, -2, 2)},
                            {c.Q(1), c.M(2 * c.ell, 0, 2), -c.M(2 * c.ell, 0, 2),
                             c.Q(-c.m - 2 * c.n), c.Q(j - 2 * c.m - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      ExactScalar sign_j = (j % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
      total += sign_j * c.Q(i - c.n * j + ch2(j + 1)) * c.M(0, 0, -2 * i) *
               ratio * fi * fj *
               c.br2({c.M(4 * c.ell - 2 * i + 2 * j, 2, 2),
                      c.M(2 + 2 * i + 2 * j, -2, 2)},
                     {c.Q(1), c.M(4 * c.ell + 4 * j, 0, 4)}, c.m + c.n - j);
    }
  }
  return pre * total;
}

// The first shape reduces through the Watson-type forms at a point with both
// half-parameters damped by rho^-n; the shift roles swap in the process.
ParamPoint whipple_a_inner_point(const ParamPoint& p) {
  Ctx c(p);
  return pt(p.rho, c.M(-c.n, 1), c.M(-c.n, 0, -1), c.n, c.m, c.ell);
}

// The second shape maps through alpha -> alpha gamma / rho with the a/c ratio
// landing on the gamma slot.
ParamPoint whipple_b_inner_point(const ParamPoint& p) {
  Ctx c(p);
  return pt(p.rho, c.M(-1, 1, 1), c.M(0, -1, 1), c.n, c.ell, c.m);
}

}  // namespace

void append_whipple_entries(std::vector<IdentitySpec>& out) {
  {
    auto s = make("thm-k", "first Whipple-type summation with raising shifts ell and m",
                  Family::Whipple);
    s.uses_uv = true;
    s.lhs = [](const ParamPoint& p) { return whipple_a_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = thm_k_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return whipple_a_pre(c, c.ell, c.m) *
             closed_at("thm-c", whipple_a_inner_point(p), "thm-k");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("whipple-relation-a",
                  "reduction of the shifted first Whipple series to a Watson-type kernel",
                  Family::Relation);
    s.uses_uv = true;
    s.lhs = [](const ParamPoint& p) { return whipple_a_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return whipple_a_pre(c, c.ell, c.m) *
             c.phiq({c.M(2 * c.m - 2 * c.n, 2), c.M(-2 * c.n, 0, -2), c.Q(-c.n),
                     -c.Q(-c.ell - c.n)},
                    {c.M(1 - 2 * c.n, 1, -1), -c.M(1 + 2 * c.m - 2 * c.n, 1, -1),
                     c.Q(-c.ell - 2 * c.n)}, c.n + 1);
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-k-ex-l0m1",
                  "ell = 0, m = 1 case of the raising-shift first Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 0;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return whipple_a_lhs(Ctx(p), 0, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar top = c.Q(ch2(1 + c.n));
      ExactScalar shared = ExactScalar(1) + c.M(1, 1, 1);
      ExactScalar down = c.poch(c.M(4, 2), c.n) * c.poch(c.M(2, 0, 2), c.n);
      return top / (shared * (ExactScalar(1) - c.M(1, 1, -1))) *
                 c.poch2(c.M(2 - 2 * c.n, 2), 1 + c.n) *
                 c.poch2(c.M(2 - 2 * c.n, 0, 2), c.n) / down +
             top / (shared * (ExactScalar(1) - c.M(-1, -1, 1))) *
                 c.poch2(c.M(4 - 2 * c.n, 2), c.n) *
                 c.poch2(c.M(-2 * c.n, 0, 2), 1 + c.n) / down;
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-k", pt(p.rho, p.alpha, p.gamma, p.n, 0, 1), "thm-k-ex-l0m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-k-ex-l1m0",
                  "ell = 1, m = 0 case of the raising-shift first Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 0;
    s.lhs = [](const ParamPoint& p) { return whipple_a_lhs(Ctx(p), 1, 0); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar coeff = c.Q(ch2(2 + c.n)) /
                          ((c.M(2, 2) - c.M(0, 0, 2)) * (ExactScalar(1) - c.Q(1 + c.n)));
      return coeff *
             (c.poch2(c.M(2 - 2 * c.n, 2), 1 + c.n) *
                  c.poch2(c.M(-2 - 2 * c.n, 0, 2), 1 + c.n) -
              c.poch2(c.M(-2 * c.n, 2), 1 + c.n) *
                  c.poch2(c.M(-2 * c.n, 0, 2), 1 + c.n)) /
             (c.poch(c.M(4, 2), c.n) * c.poch(c.M(2, 0, 2), c.n));
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-k", pt(p.rho, p.alpha, p.gamma, p.n, 1, 0), "thm-k-ex-l1m0");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-k-ex-l1m1",
                  "ell = 1, m = 1 case of the raising-shift first Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return whipple_a_lhs(Ctx(p), 1, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar top = c.Q(ch2(2 + c.n));
      ExactScalar shared = (c.M(1, 1) - c.M(0, 0, 1)) * (c.M(3, 1) - c.M(0, 0, 1)) *
                           (ExactScalar(1) + c.M(1, 1, 1)) *
                           (ExactScalar(1) - c.Q(1 + c.n));
      ExactScalar down = c.poch(c.M(6, 2), c.n) * c.poch(c.M(2, 0, 2), c.n);
      return top * (ExactScalar(1) - c.M(-1 - 2 * c.n, 1, 1)) / shared *
                 c.poch2(c.M(4 - 2 * c.n, 2), 1 + c.n) *
                 c.poch2(c.M(-2 * c.n, 0, 2), 1 + c.n) / down -
             top * (ExactScalar(1) - c.M(3 + 2 * c.n, 1, 1)) / shared *
                 c.poch2(c.M(2 - 2 * c.n, 2), 1 + c.n) *
                 c.poch2(c.M(-2 - 2 * c.n, 0, 2), 1 + c.n) / down;
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-k", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-k-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-l", "first Whipple-type summation with lowering ell and raising m",
                  Family::Whipple);
    s.uses_uv = true;
    s.sign_u = -1;
    s.constraint_text = "ell <= n";
    s.constraints = ell_le_n;
    s.lhs = [](const ParamPoint& p) { return whipple_a_lhs(Ctx(p), -p.ell, p.m); };
    s.rhs_closed = thm_l_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return whipple_a_pre(c, -c.ell, c.m) *
             closed_at("thm-b", whipple_a_inner_point(p), "thm-l");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-l-ex-l1m0",
                  "ell = 1, m = 0 case of the ell-lowering first Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 0;
    s.lhs = [](const ParamPoint& p) { return whipple_a_lhs(Ctx(p), -1, 0); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return c.Q(ch2(1 + c.n)) / (ExactScalar(1) + c.Q(c.n)) *
             (c.poch2(c.M(2 - 2 * c.n, 2), c.n) * c.poch2(c.M(2 - 2 * c.n, 0, 2), c.n) +
              c.poch2(c.M(-2 * c.n, 2), c.n) * c.poch2(c.M(4 - 2 * c.n, 0, 2), c.n)) /
             (c.poch(c.M(0, 2), c.n) * c.poch(c.M(2, 0, 2), c.n));
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-l", pt(p.rho, p.alpha, p.gamma, p.n, 1, 0), "thm-l-ex-l1m0");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-l-ex-l1m1",
                  "ell = 1, m = 1 case of the ell-lowering first Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return whipple_a_lhs(Ctx(p), -1, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar top = c.Q(ch2(1 + c.n));
      ExactScalar shared = (ExactScalar(1) + c.Q(c.n)) * (ExactScalar(1) + c.M(1, 1, 1));
      ExactScalar down = c.poch(c.M(2, 2), c.n) * c.poch(c.M(2, 0, 2), c.n);
      return top * (ExactScalar(1) + c.M(1 + 2 * c.n, 1, 1)) / shared *
                 c.poch2(c.M(2 - 2 * c.n, 2), c.n) *
                 c.poch2(c.M(2 - 2 * c.n, 0, 2), c.n) / down +
             top * (ExactScalar(1) + c.M(1 - 2 * c.n, 1, 1)) / shared *
                 c.poch2(c.M(4 - 2 * c.n, 2), c.n) *
                 c.poch2(c.M(4 - 2 * c.n, 0, 2), c.n) / down;
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-l", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-l-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-m", "second Whipple-type summation with raising shifts ell and m",
                  Family::Whipple);
    s.uses_uv = true;
    s.constraint_text = "m <= n";
    s.constraints = m_le_n;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = thm_m_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return whipple_b_pre(c, c.ell, c.m) *
             closed_at("equivalence-e", whipple_b_inner_point(p), "thm-m");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("whipple-relation-b",
                  "reduction of the shifted second Whipple series to a Watson-type kernel",
                  Family::Relation);
    s.uses_uv = true;
    s.constraint_text = "m <= n";
    s.constraints = m_le_n;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return whipple_b_pre(c, c.ell, c.m) *
             c.phiq({c.M(-2 * c.ell - 2, 2, 2), c.M(0, -2, 2), c.Q(-c.n), -c.Q(c.m - c.n)},
                    {c.M(0, 0, 2), -c.M(-2 * c.ell, 0, 2), c.Q(c.m - 2 * c.n)},
                    c.n + 1);
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-m-ex-l0m1",
                  "ell = 0, m = 1 case of the raising-shift second Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 0;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), 0, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar shared = ExactScalar(1) + c.Q(c.n);
      ExactScalar down = c.poch(c.M(0, 0, 2), c.n) * c.poch(c.M(2 * c.n - 2, 0, 2), c.n);
      return ExactScalar(1) / shared *
                 c.poch2(c.M(0, 2, 2), c.n) * c.poch2(c.M(2, -2, 2), c.n) / down +
             c.Q(c.n) / shared *
                 c.poch2(c.M(-2, 2, 2), c.n) * c.poch2(c.M(0, -2, 2), c.n) / down;
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-m", pt(p.rho, p.alpha, p.gamma, p.n, 0, 1), "thm-m-ex-l0m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-m-ex-l1m0",
                  "ell = 1, m = 0 case of the raising-shift second Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 0;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), 1, 0); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar shared = (c.Q(1) - c.M(0, 2)) * (c.Q(2) - c.M(4 * c.n, 0, 4));
      ExactScalar down = c.poch(c.M(-2, 0, 2), 2 * c.n);
      return (c.Q(1) - c.M(0, 0, 2)) * (c.Q(2) - c.M(0, 2, 2)) / shared *
                 c.poch2(c.M(0, 2, 2), c.n) * c.poch2(c.M(2, -2, 2), c.n) / down +
             c.Q(1) * (c.Q(1) - c.M(0, 0, 2)) * (c.M(0, 0, 2) - c.M(0, 2)) / shared *
                 c.poch2(c.M(-2, 2, 2), c.n) * c.poch2(c.M(4, -2, 2), c.n) / down;
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-m", pt(p.rho, p.alpha, p.gamma, p.n, 1, 0), "thm-m-ex-l1m0");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-m-ex-l1m1",
                  "ell = 1, m = 1 case of the raising-shift second Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), 1, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar shared = (c.Q(1) - c.M(0, 2)) * (ExactScalar(1) + c.Q(c.n));
      ExactScalar down = c.poch(c.M(0, 0, 2), c.n) * c.poch(c.M(2 * c.n - 4, 0, 2), c.n);
      return (c.Q(1) - c.M(2 * c.n, 2)) / shared *
                 c.poch2(c.M(-4, 2, 2), c.n) * c.poch2(c.M(2, -2, 2), c.n) / down +
             (c.Q(1 + c.n) - c.M(0, 2)) / shared *
                 c.poch2(c.M(-2, 2, 2), c.n) * c.poch2(c.M(0, -2, 2), c.n) / down;
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-m", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-m-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-n", "second Whipple-type summation with raising ell and lowering m",
                  Family::Whipple);
    s.uses_uv = true;
    s.sign_v = -1;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), p.ell, -p.m); };
    s.rhs_closed = thm_n_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return whipple_b_pre(c, c.ell, -c.m) *
             closed_at("equivalence-f", whipple_b_inner_point(p), "thm-n");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-n-ex-l0m1",
                  "ell = 0, m = 1 case of the m-lowering second Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 0;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), 0, -1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar shared = (ExactScalar(1) - c.Q(1 + c.n)) *
                           (ExactScalar(1) + c.M(2 * c.n, 0, 2));
      ExactScalar down = c.poch(c.M(0, 0, 2), 1 + 2 * c.n);
      return ExactScalar(1) / shared *
                 c.poch2(c.M(0, 2, 2), 1 + c.n) * c.poch2(c.M(2, -2, 2), 1 + c.n) / down -
             c.Q(1 + c.n) / shared *
                 c.poch2(c.M(-2, 2, 2), 1 + c.n) * c.poch2(c.M(0, -2, 2), 1 + c.n) / down;
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-n", pt(p.rho, p.alpha, p.gamma, p.n, 0, 1), "thm-n-ex-l0m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-n-ex-l1m1",
                  "ell = 1, m = 1 case of the m-lowering second Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), 1, -1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar shared = (c.Q(1) - c.M(0, 2)) * (ExactScalar(1) + c.M(2 * c.n, 0, 2)) *
                           (c.Q(1) + c.M(2 * c.n, 0, 2)) * (ExactScalar(1) - c.Q(1 + c.n));
      ExactScalar down = c.poch(c.M(0, 0, 2), 2 * c.n);
      return c.Q(2) * (ExactScalar(1) + c.M(2 * c.n, 2)) / shared *
                 c.poch2(c.M(-4, 2, 2), 1 + c.n) * c.poch2(c.M(2, -2, 2), 1 + c.n) / down -
             c.Q(1) * (c.M(0, 2) + c.Q(2 + c.n)) / shared *
                 c.poch2(c.M(-2, 2, 2), 1 + c.n) * c.poch2(c.M(0, -2, 2), 1 + c.n) / down;
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-n", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-n-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-o", "second Whipple-type summation with lowering ell and raising m",
                  Family::Whipple);
    s.uses_uv = true;
    s.sign_u = -1;
    s.constraint_text = "m <= n";
    s.constraints = m_le_n;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), -p.ell, p.m); };
    s.rhs_closed = thm_o_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return whipple_b_pre(c, -c.ell, c.m) *
             closed_at("thm-b", whipple_b_inner_point(p), "thm-o");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-o-ex-l1m0",
                  "ell = 1, m = 0 case of the ell-lowering second Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 0;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), -1, 0); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar shared = ExactScalar(1) + c.M(0, 2);
      ExactScalar down = c.poch(c.M(0, 0, 2), 1 + 2 * c.n);
      return (ExactScalar(1) - c.M(0, 2, 2)) / shared *
                 c.poch2(c.M(4, 2, 2), c.n) * c.poch2(c.M(2, -2, 2), c.n) / down +
             (c.M(0, 2) - c.M(0, 0, 2)) / shared *
                 c.poch2(c.M(2, 2, 2), c.n) * c.poch2(c.M(4, -2, 2), c.n) / down;
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-o", pt(p.rho, p.alpha, p.gamma, p.n, 1, 0), "thm-o-ex-l1m0");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-o-ex-l1m1",
                  "ell = 1, m = 1 case of the ell-lowering second Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), -1, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar shared = (ExactScalar(1) + c.M(0, 2)) * (ExactScalar(1) + c.Q(c.n));
      ExactScalar down = c.poch(c.M(0, 0, 2), 2 * c.n);
      return (ExactScalar(1) + c.M(2 * c.n, 2)) / shared *
                 c.poch2(c.M(0, 2, 2), c.n) * c.poch2(c.M(2, -2, 2), c.n) / down +
             (c.M(0, 2) + c.Q(c.n)) / shared *
                 c.poch2(c.M(2, 2, 2), c.n) * c.poch2(c.M(0, -2, 2), c.n) / down;
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-o", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-o-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-p", "second Whipple-type summation with lowering shifts ell and m",
                  Family::Whipple);
    s.uses_uv = true;
    s.sign_u = -1;
    s.sign_v = -1;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), -p.ell, -p.m); };
    s.rhs_closed = thm_p_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return whipple_b_pre(c, -c.ell, -c.m) *
             closed_at("thm-c", whipple_b_inner_point(p), "thm-p");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-p-ex-l1m1",
                  "ell = 1, m = 1 case of the lowering-shift second Whipple summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return whipple_b_lhs(Ctx(p), -1, -1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar shared = (ExactScalar(1) + c.M(0, 2)) * (ExactScalar(1) - c.Q(1 + c.n));
      ExactScalar down = c.poch(c.M(0, 0, 2), 2 + 2 * c.n);
      return (ExactScalar(1) - c.M(2 + 2 * c.n, 2)) / shared *
                 c.poch2(c.M(0, 2, 2), 1 + c.n) * c.poch2(c.M(2, -2, 2), 1 + c.n) / down +
             (c.M(0, 2) - c.Q(1 + c.n)) / shared *
                 c.poch2(c.M(2, 2, 2), 1 + c.n) * c.poch2(c.M(0, -2, 2), 1 + c.n) / down;
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-p", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-p-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
}

}  // namespace qv::detail
