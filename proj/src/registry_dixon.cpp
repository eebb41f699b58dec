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
bool n_ge_1(const ParamPoint& p) { return p.n >= 1; }

// First Dixon shape with signed shifts: u lowers the a-type denominator, v
// the c-type one.
ExactScalar dixon_a_lhs(const Ctx& c, long u, long v) {
  return c.phiq({c.Q(-c.n), c.M(0, 2), c.M(0, 0, 2),
                 -c.M(2 + 2 * u + 2 * v - 2 * c.n, -2, -2)},
                {c.M(2 + 2 * u - 2 * c.n, -2), c.M(2 + 2 * v - 2 * c.n, 0, -2),
                 -c.M(0, 2, 2)}, c.n + 1);
}

// Second Dixon shape: u shifts the a/c ratio slot, v the a slot.
ExactScalar dixon_b_lhs(const Ctx& c, long u, long v) {
  return c.phiq({c.M(0, 2), c.M(0, 0, 2), c.Q(-c.n),
                 -c.M(2 + 2 * u + 2 * v + 2 * c.n, 2, -2)},
                {c.M(2 + 2 * u, 2, -2), c.M(2 + 2 * v + 2 * c.n, 2),
                 -c.M(-2 * c.n, 0, 2)}, c.n + 1);
}

// n-length prefactor the first-shape reductions all share.
ExactScalar dixon_a_pre(const Ctx& c, long v) {
  return c.br({-c.M(0, 2), c.M(-2 * v, 0, 4)},
              {-c.M(0, 2, 2), c.M(-2 * v, 0, 2)}, c.n);
}

// Likewise for the second shape.
ExactScalar dixon_b_pre(const Ctx& c, long v) {
  return c.br({c.Q(1 + v + c.n), -c.M(2, 2, -2)},
              {c.M(2 + 2 * v + 2 * c.n, 2), -c.M(2, 0, -2)}, c.n);
}

ExactScalar thm_d_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(2 + 2 * c.ell - 2 * c.n, -4), -c.M(2, -2)},
                         {c.M(2 + 2 * c.ell, -4), -c.M(2 - 2 * c.n, -2)}, c.ell) *
                    dixon_a_pre(c, c.m);
  ExactScalar denom = ExactScalar(1) - c.M(-4 * c.ell - 2, 4);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.Q(-c.n), c.M(-4 * c.ell - 2, 4)},
                          {c.Q(1), c.M(2 * c.n - 4 * c.ell, 4), c.M(-2 * c.ell, 4)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(4 * i - 4 * c.ell - 2, 4)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj =
          c.br({c.Q(-c.m), c.Q(i - c.n), c.M(2 + 4 * c.ell - 2 * c.n - 2 * i, -4),
                c.M(-2 * c.m, 0, 2), -c.M(-2 * c.m, 0, 2)},
               {c.Q(1), c.M(2 + 2 * c.ell - 2 * c.n, -2), -c.M(2 + 2 * c.ell - 2 * c.n, -2),
                c.M(-2 * c.m, 0, 4), c.M(2 * j - 4 * c.m - 2, 0, 4)}, j);
      if (fj.is_zero()) continue;
      if (chi(c.n - i - j) == 0) continue;
      ExactScalar sign = ((i + j) % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
      total += sign * c.Q(c.n * i + (c.n - i - j) * (j - c.m) + ch2(j + 1)) *
               c.M(0, 2 * i, 2 * (c.n - i)) * ratio * fi * fj *
               c.br2({c.Q(1), c.M(4 + 4 * c.ell + 4 * c.m - 4 * c.n, -4, -4)},
                     {c.M(4 + 4 * c.ell - 4 * c.n + 4 * j, -4),
                      c.M(2 - 4 * c.m + 4 * j, 0, 4)}, (c.n - i - j) / 2);
    }
  }
  return pre * total;
}

ExactScalar thm_e_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(2 + 2 * c.ell - 2 * c.n, -4), -c.M(2, -2)},
                         {c.M(2 + 2 * c.ell, -4), -c.M(2 - 2 * c.n, -2)}, c.ell) *
                    dixon_a_pre(c, -c.m);
  ExactScalar denom = ExactScalar(1) - c.M(-4 * c.ell - 2, 4);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.Q(-c.n), c.M(-4 * c.ell - 2, 4)},
                          {c.Q(1), c.M(2 * c.n - 4 * c.ell, 4), c.M(-2 * c.ell, 4)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(4 * i - 4 * c.ell - 2, 4)) / denom;
    ExactScalar sign_i = (i % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj =
          c.br({c.Q(-c.m), c.Q(i - c.n), c.M(2 + 4 * c.ell - 2 * c.n - 2 * i, -4),
                c.M(0, 0, 2), -c.M(0, 0, 2)},
               {c.Q(1), c.M(2 + 2 * c.ell - 2 * c.n, -2), -c.M(2 + 2 * c.ell - 2 * c.n, -2),
                c.M(2 * c.m, 0, 4), c.M(2 * j - 2, 0, 4)}, j);
      if (fj.is_zero()) continue;
      if (chi(c.n - i - j) == 0) continue;
      total += sign_i * c.Q(c.n * i + (c.m + c.n - i) * j - ch2(j)) *
               c.M(0, 2 * i, 2 * (c.n - i)) * ratio * fi * fj *
               c.br2({c.Q(1), c.M(4 + 4 * c.ell - 4 * c.n, -4, -4)},
                     {c.M(4 + 4 * c.ell - 4 * c.n + 4 * j, -4),
                      c.M(2 + 4 * j, 0, 4)}, (c.n - i - j) / 2);
    }
  }
  return pre * total;
}

ExactScalar thm_f_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(0, 2), c.M(2 * c.n, 4)},
                         {c.M(0, 4), c.M(2 * c.n, 2)}, c.ell) *
                    dixon_a_pre(c, -c.m);
  ExactScalar denom = ExactScalar(1) - c.M(-2, 4);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.Q(-c.n), c.M(-2, 4)},
                          {c.Q(1), c.M(2 * c.n, 4), c.M(2 * c.ell, 4)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(4 * i - 2, 4)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(i - c.n), c.M(2 - 2 * c.n - 2 * i, -4),
                             c.M(0, 0, 2), -c.M(0, 0, 2)},
                            {c.Q(1), c.M(2 - 2 * c.n, -2), -c.M(2 - 2 * c.n, -2),
                             c.M(2 * c.m, 0, 4), c.M(2 * j - 2, 0, 4)}, j);
      if (fj.is_zero()) continue;
      if (chi(c.n - i - j) == 0) continue;
      total += c.Q((c.ell + c.n) * i + (c.m + c.n - i) * j - ch2(j)) *
               c.M(0, 2 * i, 2 * (c.n - i)) * ratio * fi * fj *
               c.br2({c.Q(1), c.M(4 - 4 * c.n, -4, -4)},
                     {c.M(4 - 4 * c.n + 4 * j, -4), c.M(2 + 4 * j, 0, 4)},
                     (c.n - i - j) / 2);
    }
  }
  return pre * total;
}

ExactScalar thm_g_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(0, 2), -c.M(-2 * c.ell, 0, 2)},
                         {c.M(-2 * c.ell - 2, 0, 4), -c.M(2, 2, -2)}, c.ell) *
                    dixon_b_pre(c, c.m);
  ExactScalar denom = ExactScalar(1) - c.M(2, 0, -4);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(2 + 2 * c.ell, 2, -4), c.M(2, 0, -4)},
                          {c.Q(1), c.M(2 - 2 * c.ell, -2), c.M(4 + 2 * c.ell, 0, -4)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 + 4 * i, 0, -4)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj =
          c.br({c.Q(-c.m), c.Q(-c.m - c.n), -c.Q(-c.m - c.n),
                c.M(2 * c.ell - 2 * i, 2), c.M(2 + 2 * c.ell + 2 * i, 2, -4)},
               {c.Q(1), c.M(2 + 2 * c.ell, 2, -2), -c.M(2 + 2 * c.ell, 2, -2),
                c.Q(-c.m - 2 * c.n), c.Q(j - 2 * c.m - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      ExactScalar sign = ((i + j) % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
      total += sign * c.Q(ch2(j + 1) - c.n * j) * c.M(0, -2 * i, 2 * i) * ratio * fi * fj *
               c.br2({c.M(2 + 2 * c.ell - 2 * i + 2 * j, 2),
                      c.M(4 + 2 * c.ell + 2 * i + 2 * j, 2, -4)},
                     {c.Q(1), c.M(4 + 4 * c.ell + 4 * j, 4, -4)}, c.m + c.n - j);
    }
  }
  return pre * total;
}

ExactScalar thm_h_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(0, 2), -c.M(-2 * c.ell, 0, 2)},
                         {c.M(-2 * c.ell - 2, 0, 4), -c.M(2, 2, -2)}, c.ell) *
                    dixon_b_pre(c, -c.m);
  ExactScalar denom = ExactScalar(1) - c.M(2, 0, -4);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(2 + 2 * c.ell, 2, -4), c.M(2, 0, -4)},
                          {c.Q(1), c.M(2 - 2 * c.ell, -2), c.M(4 + 2 * c.ell, 0, -4)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 + 4 * i, 0, -4)) / denom;
    ExactScalar sign_i = (i % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj =
          c.br({c.Q(-c.m), c.Q(-c.n), -c.Q(-c.n),
                c.M(2 * c.ell - 2 * i, 2), c.M(2 + 2 * c.ell + 2 * i, 2, -4)},
               {c.Q(1), c.M(2 + 2 * c.ell, 2, -2), -c.M(2 + 2 * c.ell, 2, -2),
                c.Q(c.m - 2 * c.n), c.Q(j - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      total += sign_i * c.Q((c.m - c.n) * j + ch2(j + 1)) * c.M(0, -2 * i, 2 * i) *
               ratio * fi * fj *
               c.br2({c.M(2 + 2 * c.ell - 2 * i + 2 * j, 2),
                      c.M(4 + 2 * c.ell + 2 * i + 2 * j, 2, -4)},
                     {c.Q(1), c.M(4 + 4 * c.ell + 4 * j, 4, -4)}, c.n - j);
    }
  }
  return pre * total;
}

ExactScalar thm_i_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(0, 2), c.M(0, 0, 2)},
                         {c.M(2 * c.ell - 2, 0, 4), c.M(2 - 2 * c.ell, 2, -2)}, c.ell) *
                    dixon_b_pre(c, c.m);
  ExactScalar denom = ExactScalar(1) - c.M(2 - 4 * c.ell, 0, -4);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(2 - 2 * c.ell, 2, -4), c.M(2 - 4 * c.ell, 0, -4)},
                          {c.Q(1), c.M(2 - 2 * c.ell, -2), c.M(4 - 2 * c.ell, 0, -4)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 - 4 * c.ell + 4 * i, 0, -4)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj =
          c.br({c.Q(-c.m), c.Q(-c.m - c.n), -c.Q(-c.m - c.n),
                c.M(2 * c.ell - 2 * i, 2), c.M(2 - 2 * c.ell + 2 * i, 2, -4)},
               {c.Q(1), c.M(2, 2, -2), -c.M(2, 2, -2),
                c.Q(-c.m - 2 * c.n), c.Q(j - 2 * c.m - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      ExactScalar sign_j = (j % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
      total += sign_j * c.Q(c.ell * i - c.n * j + ch2(j + 1)) * c.M(0, -2 * i, 2 * i) *
               ratio * fi * fj *
               c.br2({c.M(2 + 2 * c.ell - 2 * i + 2 * j, 2),
                      c.M(4 - 2 * c.ell + 2 * i + 2 * j, 2, -4)},
                     {c.Q(1), c.M(4 + 4 * j, 4, -4)}, c.m + c.n - j);
    }
  }
  return pre * total;
}

ExactScalar thm_j_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(0, 2), c.M(0, 0, 2)},
                         {c.M(2 * c.ell - 2, 0, 4), c.M(2 - 2 * c.ell, 2, -2)}, c.ell) *
                    dixon_b_pre(c, -c.m);
  ExactScalar denom = ExactScalar(1) - c.M(2 - 4 * c.ell, 0, -4);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(2 - 2 * c.ell, 2, -4), c.M(2 - 4 * c.ell, 0, -4)},
                          {c.Q(1), c.M(2 - 2 * c.ell, -2), c.M(4 - 2 * c.ell, 0, -4)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 - 4 * c.ell + 4 * i, 0, -4)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj =
          c.br({c.Q(-c.m), c.Q(-c.n), -c.Q(-c.n),
                c.M(2 * c.ell - 2 * i, 2), c.M(2 - 2 * c.ell + 2 * i, 2, -4)},
               {c.Q(1), c.M(2, 2, -2), -c.M(2, 2, -2),
                c.Q(c.m - 2 * c.n), c.Q(j - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      total += c.Q(c.ell * i + (c.m - c.n) * j + ch2(j + 1)) * c.M(0, -2 * i, 2 * i) *
               ratio * fi * fj *
               c.br2({c.M(2 + 2 * c.ell - 2 * i + 2 * j, 2),
                      c.M(4 - 2 * c.ell + 2 * i + 2 * j, 2, -4)},
                     {c.Q(1), c.M(4 + 4 * j, 4, -4)}, c.n - j);
    }
  }
  return pre * total;
}

// Transformed points feeding the inner Watson-type closed forms: the first
// shape maps through alpha -> -q^{-n}/a with c squared onto the gamma slot,
// the second through alpha -> -sqrt(q) a / c with a onto the gamma slot.
ParamPoint dixon_a_inner_point(const ParamPoint& p) {
  Ctx c(p);
  return pt(p.rho, -c.M(-2 * c.n, -2), c.M(0, 0, 2), c.n, c.ell, c.m);
}

ParamPoint dixon_b_inner_point(const ParamPoint& p) {
  Ctx c(p);
  return pt(p.rho, -c.M(1, 1, -2), c.M(0, 1), c.n, c.ell, c.m);
}

}  // namespace

void append_dixon_entries(std::vector<IdentitySpec>& out) {
  {
    auto s = make("thm-d", "first Dixon-type summation with raising shifts ell and m",
                  Family::Dixon);
    s.uses_uv = true;
    s.lhs = [](const ParamPoint& p) { return dixon_a_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = thm_d_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return dixon_a_pre(c, c.m) * closed_at("equivalence-b", dixon_a_inner_point(p), "thm-d");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("dixon-relation-a",
                  "reduction of the shifted first Dixon series to a Watson-type kernel",
                  Family::Relation);
    s.uses_uv = true;
    s.lhs = [](const ParamPoint& p) { return dixon_a_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return dixon_a_pre(c, c.m) *
             c.phiq({c.Q(-c.n), c.M(2 + 2 * c.ell - 2 * c.n, -4), c.M(0, 0, 2),
                     -c.M(-2 * c.m, 0, 2)},
                    {c.M(2 + 2 * c.ell - 2 * c.n, -2), -c.M(2 - 2 * c.n, -2),
                     c.M(-2 * c.m, 0, 4)}, c.n + 1);
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-d-ex-l0m1", "ell = 0, m = 1 case of the raising-shift first Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 0;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return dixon_a_lhs(Ctx(p), 0, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      long half = c.n / 2;
      ExactScalar f = c.br({-c.M(0, 2), c.M(-2, 0, 4)},
                           {-c.M(0, 2, 2), c.M(-2, 0, 2)}, c.n);
      if (c.n % 2 == 0) {
        return f * c.br2({c.Q(1), c.M(2 * c.n - 4, 4, 4)},
                         {c.M(-2, 0, 4), c.M(2 * c.n, 4)}, half);
      }
      ExactScalar coeff = (c.Q(1) - ExactScalar(1)) * c.M(0, 0, 2) /
                          (c.Q(1) - c.M(0, 0, 4));
      return coeff * f * c.br2({c.Q(3), c.M(2 * c.n - 2, 4, 4)},
                               {c.M(2, 0, 4), c.M(2 * c.n + 2, 4)}, half);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-d", pt(p.rho, p.alpha, p.gamma, p.n, 0, 1), "thm-d-ex-l0m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-d-ex-l1m1", "ell = 1, m = 1 case of the raising-shift first Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return dixon_a_lhs(Ctx(p), 1, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      long half = c.n / 2;
      if (c.n % 2 == 0) {
        ExactScalar coeff = (c.Q(2) + c.M(0, 2, 2)) * (c.Q(2) - c.M(2 * c.n, 4)) /
                            ((c.Q(2) - c.M(0, 4)) * (c.Q(2) + c.M(2 * c.n, 2, 2)));
        return coeff *
               c.br({-c.M(-2, 2), c.M(-2, 0, 4)}, {-c.M(0, 2, 2), c.M(-2, 0, 2)}, c.n) *
               c.br2({c.Q(1), c.M(2 * c.n - 4, 4, 4)},
                     {c.M(-2, 0, 4), c.M(2 * c.n - 4, 4)}, half);
      }
      ExactScalar coeff = (c.M(0, 2) + c.M(0, 0, 2)) * (c.Q(1) - ExactScalar(1)) *
                          (c.Q(1) - c.M(2 * c.n - 2, 2, 2)) /
                          ((c.Q(2) - c.M(0, 4)) * (ExactScalar(1) - c.M(-4, 0, 4)));
      return coeff *
             c.br({-c.M(-2, 2), c.M(-4, 0, 4)}, {-c.M(0, 2, 2), c.M(-2, 0, 2)}, c.n) *
             c.br2({c.Q(3), c.M(2 * c.n - 6, 4, 4)},
                   {c.M(-2, 0, 4), c.M(2 * c.n - 2, 4)}, half);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-d", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-d-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-e", "first Dixon-type summation with raising ell and lowering m",
                  Family::Dixon);
    s.uses_uv = true;
    s.sign_v = -1;
    s.lhs = [](const ParamPoint& p) { return dixon_a_lhs(Ctx(p), p.ell, -p.m); };
    s.rhs_closed = thm_e_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return dixon_a_pre(c, -c.m) * closed_at("thm-a", dixon_a_inner_point(p), "thm-e");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-e-ex-l0m1",
                  "ell = 0, m = 1 case of the m-lowering first Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 0;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return dixon_a_lhs(Ctx(p), 0, -1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      long half = c.n / 2;
      ExactScalar f = c.br({-c.M(0, 2), c.M(2, 0, 4)},
                           {-c.M(0, 2, 2), c.M(2, 0, 2)}, c.n);
      if (c.n % 2 == 0) {
        return f * c.br2({c.Q(1), c.M(2 * c.n, 4, 4)},
                         {c.M(2, 0, 4), c.M(2 * c.n, 4)}, half);
      }
      ExactScalar coeff = (ExactScalar(1) - c.Q(1)) * c.M(0, 0, 2) /
                          (ExactScalar(1) - c.M(2, 0, 4));
      return coeff * f * c.br2({c.Q(3), c.M(2 * c.n + 2, 4, 4)},
                               {c.M(6, 0, 4), c.M(2 * c.n + 2, 4)}, half);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-e", pt(p.rho, p.alpha, p.gamma, p.n, 0, 1), "thm-e-ex-l0m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-e-ex-l1m1",
                  "ell = 1, m = 1 case of the m-lowering first Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return dixon_a_lhs(Ctx(p), 1, -1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      long half = c.n / 2;
      if (c.n % 2 == 0) {
        ExactScalar coeff = (c.Q(2) - c.M(0, 4, 4)) * (ExactScalar(1) - c.M(2 * c.n - 4, 4)) /
                            ((c.Q(2) - c.M(0, 4)) * (ExactScalar(1) - c.M(2 * c.n - 4, 4, 4)));
        return coeff *
               c.br({-c.M(-2, 2), c.M(2, 0, 4)}, {-c.M(-2, 2, 2), c.M(2, 0, 2)}, c.n) *
               c.br2({c.Q(1), c.M(2 * c.n - 4, 4, 4)},
                     {c.M(2, 0, 4), c.M(2 * c.n - 4, 4)}, half);
      }
      ExactScalar coeff = (ExactScalar(1) - c.Q(1)) * (c.M(2, 0, 2) - c.M(0, 2)) /
                          ((c.Q(1) - c.M(0, 2)) * (ExactScalar(1) - c.M(2, 0, 2)));
      return coeff *
             c.br({-c.M(0, 2), c.M(2, 0, 4)}, {-c.M(0, 2, 2), c.M(4, 0, 2)}, c.n - 1) *
             c.br2({c.Q(3), c.M(2 * c.n - 2, 4, 4)},
                   {c.M(2, 0, 4), c.M(2 * c.n - 2, 4)}, half);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-e", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-e-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-f", "first Dixon-type summation with lowering shifts ell and m",
                  Family::Dixon);
    s.uses_uv = true;
    s.sign_u = -1;
    s.sign_v = -1;
    s.lhs = [](const ParamPoint& p) { return dixon_a_lhs(Ctx(p), -p.ell, -p.m); };
    s.rhs_closed = thm_f_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return dixon_a_pre(c, -c.m) * closed_at("equivalence-a", dixon_a_inner_point(p), "thm-f");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-f-ex-l1m1",
                  "ell = 1, m = 1 case of the lowering-shift first Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return dixon_a_lhs(Ctx(p), -1, -1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      long half = c.n / 2;
      ExactScalar f = c.br({-c.M(2, 2), c.M(2, 0, 4)},
                           {-c.M(2, 2, 2), c.M(2, 0, 2)}, c.n);
      if (c.n % 2 == 0) {
        return f * c.br2({c.Q(1), c.M(2 * c.n + 4, 4, 4)},
                         {c.M(2, 0, 4), c.M(2 * c.n + 4, 4)}, half);
      }
      ExactScalar coeff = (c.M(0, 2) + c.M(0, 0, 2)) / (ExactScalar(1) + c.M(0, 2, 2));
      return coeff * f * c.br2({c.Q(1), c.M(2 * c.n + 2, 4, 4)},
                               {c.M(2, 0, 4), c.M(2 * c.n + 2, 4)}, half + 1);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-f", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-f-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-g", "second Dixon-type summation with raising shifts ell and m",
                  Family::Dixon);
    s.uses_uv = true;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = thm_g_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return dixon_b_pre(c, c.m) * closed_at("thm-c", dixon_b_inner_point(p), "thm-g");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("dixon-relation-b",
                  "reduction of the shifted second Dixon series to a Watson-type kernel",
                  Family::Relation);
    s.uses_uv = true;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return dixon_b_pre(c, c.m) *
             c.phiq({c.M(0, 2), c.M(2 + 2 * c.ell, 2, -4), c.Q(-c.n), -c.Q(-c.m - c.n)},
                    {c.M(2 + 2 * c.ell, 2, -2), -c.M(2, 2, -2), c.Q(-c.m - 2 * c.n)},
                    c.n + 1);
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-g-ex-l0m1",
                  "ell = 0, m = 1 case of the raising-shift second Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 0;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), 0, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar f = c.br({c.Q(2 + c.n), -c.M(2, 2, -2)},
                           {c.M(4 + 2 * c.n, 2), -c.M(2, 0, -2)}, c.n);
      return f * c.br2({c.M(2, 2), c.M(4, 2, -4)}, {c.Q(1), c.M(4, 4, -4)}, c.n + 1) -
             c.Q(c.n + 1) * f *
                 c.br2({c.M(0, 2), c.M(2, 2, -4)}, {c.Q(1), c.M(4, 4, -4)}, c.n + 1);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-g", pt(p.rho, p.alpha, p.gamma, p.n, 0, 1), "thm-g-ex-l0m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-g-ex-l1m0",
                  "ell = 1, m = 0 case of the raising-shift second Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 0;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), 1, 0); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar f = c.br({c.Q(1 + c.n), -c.M(2, 2, -2)},
                           {c.M(2 + 2 * c.n, 2), -c.M(2, 0, -2)}, c.n);
      ExactScalar denom = (c.M(2, 2) + c.M(0, 0, 2)) * (c.Q(1) - c.M(0, 0, 2));
      return c.M(2, 0, 2) * (ExactScalar(1) - c.M(0, 2)) / denom * f *
                 c.br2({c.M(4, 2), c.M(6, 2, -4)}, {c.Q(1), c.M(8, 4, -4)}, c.n) +
             (c.M(4, 2) - c.M(0, 0, 4)) / denom * f *
                 c.br2({c.M(2, 2), c.M(8, 2, -4)}, {c.Q(1), c.M(8, 4, -4)}, c.n);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-g", pt(p.rho, p.alpha, p.gamma, p.n, 1, 0), "thm-g-ex-l1m0");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-g-ex-l1m1",
                  "ell = 1, m = 1 case of the raising-shift second Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), 1, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar f = c.br({c.Q(2 + c.n), -c.M(2, 2, -2)},
                           {c.M(4 + 2 * c.n, 2), -c.M(2, 0, -2)}, c.n);
      ExactScalar denom = (c.M(2, 2) + c.M(0, 0, 2)) * (c.Q(1) - c.M(0, 0, 2));
      ExactScalar shared = c.M(0, 0, 2) - c.M(4 + 2 * c.n, 2);
      return c.Q(1) * (ExactScalar(1) + c.M(2 * c.n, 0, 2)) * shared / denom * f *
                 c.br2({c.M(0, 2), c.M(6, 2, -4)}, {c.Q(1), c.M(8, 4, -4)}, c.n + 1) -
             (c.M(0, 0, 2) + c.Q(2 + c.n)) * shared / denom * f *
                 c.br2({c.M(2, 2), c.M(4, 2, -4)}, {c.Q(1), c.M(8, 4, -4)}, c.n + 1);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-g", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-g-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-h", "second Dixon-type summation with raising ell and lowering m",
                  Family::Dixon);
    s.uses_uv = true;
    s.sign_v = -1;
    s.constraint_text = "m <= n";
    s.constraints = m_le_n;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), p.ell, -p.m); };
    s.rhs_closed = thm_h_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return dixon_b_pre(c, -c.m) * closed_at("thm-b", dixon_b_inner_point(p), "thm-h");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-h-ex-l0m1",
                  "ell = 0, m = 1 case of the m-lowering second Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 0;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.constraint_text = "n >= 1";
    s.constraints = n_ge_1;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), 0, -1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar f = c.br({c.Q(c.n), -c.M(2, 2, -2)},
                           {c.M(2 * c.n, 2), -c.M(2, 0, -2)}, c.n);
      return f * c.br2({c.M(2, 2), c.M(4, 2, -4)}, {c.Q(1), c.M(4, 4, -4)}, c.n) +
             c.Q(c.n) * f *
                 c.br2({c.M(0, 2), c.M(2, 2, -4)}, {c.Q(1), c.M(4, 4, -4)}, c.n);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-h", pt(p.rho, p.alpha, p.gamma, p.n, 0, 1), "thm-h-ex-l0m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-h-ex-l1m1",
                  "ell = 1, m = 1 case of the m-lowering second Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.constraint_text = "n >= 1";
    s.constraints = n_ge_1;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), 1, -1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar f = c.br({c.Q(c.n), -c.M(4, 2, -2)},
                           {c.M(2 * c.n, 2), -c.M(2, 0, -2)}, c.n);
      ExactScalar denom = c.Q(1) - c.M(0, 0, 2);
      return (c.Q(1) - c.M(2 * c.n, 0, 2)) / denom * f *
                 c.br2({c.M(0, 2), c.M(6, 2, -4)}, {c.Q(1), c.M(8, 4, -4)}, c.n) +
             (c.Q(1 + c.n) - c.M(0, 0, 2)) / denom * f *
                 c.br2({c.M(2, 2), c.M(4, 2, -4)}, {c.Q(1), c.M(8, 4, -4)}, c.n);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-h", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-h-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-i", "second Dixon-type summation with lowering ell and raising m",
                  Family::Dixon);
    s.uses_uv = true;
    s.sign_u = -1;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), -p.ell, p.m); };
    s.rhs_closed = thm_i_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return dixon_b_pre(c, c.m) * closed_at("equivalence-f", dixon_b_inner_point(p), "thm-i");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-i-ex-l1m0",
                  "ell = 1, m = 0 case of the ell-lowering second Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 0;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), -1, 0); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar f = c.br({c.Q(1 + c.n), -c.M(2, 2, -2)},
                           {c.M(2 + 2 * c.n, 2), -c.M(2, 0, -2)}, c.n);
      ExactScalar denom = (ExactScalar(1) + c.M(0, 0, 2)) * (c.M(0, 0, 2) - c.M(0, 2));
      return (ExactScalar(1) - c.M(0, 2)) * c.M(0, 0, 2) / denom * f *
                 c.br2({c.M(4, 2), c.M(2, 2, -4)}, {c.Q(1), c.M(4, 4, -4)}, c.n) +
             (c.M(0, 0, 4) - c.M(0, 2)) / denom * f *
                 c.br2({c.M(2, 2), c.M(4, 2, -4)}, {c.Q(1), c.M(4, 4, -4)}, c.n);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-i", pt(p.rho, p.alpha, p.gamma, p.n, 1, 0), "thm-i-ex-l1m0");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-i-ex-l1m1",
                  "ell = 1, m = 1 case of the ell-lowering second Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), -1, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar f = c.br({c.Q(2 + c.n), -c.M(4, 2, -2)},
                           {c.M(4 + 2 * c.n, 2), -c.M(2, 0, -2)}, c.n);
      ExactScalar denom = (ExactScalar(1) + c.M(0, 0, 2)) * (c.M(0, 0, 2) - c.M(0, 2));
      ExactScalar shared = c.M(2, 2) + c.M(0, 0, 2);
      return shared * (ExactScalar(1) - c.M(2 + 2 * c.n, 0, 2)) / denom * f *
                 c.br2({c.M(0, 2), c.M(2, 2, -4)}, {c.Q(1), c.M(4, 4, -4)}, c.n + 1) +
             shared * (c.M(0, 0, 2) - c.Q(1 + c.n)) / denom * f *
                 c.br2({c.M(2, 2), c.M(0, 2, -4)}, {c.Q(1), c.M(4, 4, -4)}, c.n + 1);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-i", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-i-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-j", "second Dixon-type summation with lowering shifts ell and m",
                  Family::Dixon);
    s.uses_uv = true;
    s.sign_u = -1;
    s.sign_v = -1;
    s.constraint_text = "m <= n";
    s.constraints = m_le_n;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), -p.ell, -p.m); };
    s.rhs_closed = thm_j_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return dixon_b_pre(c, -c.m) * closed_at("equivalence-e", dixon_b_inner_point(p), "thm-j");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-j-ex-l1m1",
                  "ell = 1, m = 1 case of the lowering-shift second Dixon summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.constraint_text = "n >= 1";
    s.constraints = n_ge_1;
    s.lhs = [](const ParamPoint& p) { return dixon_b_lhs(Ctx(p), -1, -1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return c.br({c.Q(c.n), -c.M(0, 2, -2)}, {c.M(2 * c.n, 2), -c.M(0, 0, -2)}, c.n) *
                 c.br2({c.M(2, 2), c.M(0, 2, -4)}, {c.Q(1), c.M(0, 4, -4)}, c.n) +
             (ExactScalar(1) + c.M(2 * c.n, 0, 2)) / (ExactScalar(1) + c.M(0, 0, 2)) *
                 c.br({c.Q(c.n), -c.M(0, 2, -2)}, {c.M(2 * c.n, 2), -c.M(2, 0, -2)}, c.n) *
                 c.br2({c.M(0, 2), c.M(2, 2, -4)}, {c.Q(1), c.M(0, 4, -4)}, c.n);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-j", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-j-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
}

}  // namespace qv::detail
