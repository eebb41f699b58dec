#include <functional>
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

// First Watson shape with signed shifts: e on the a slots, sm on the c slots.
ExactScalar watson_a_lhs(const Ctx& c, long e, long sm) {
  return c.phiq({c.Q(-c.n), c.M(2 + 2 * e + 2 * c.n, 2), c.M(0, 0, 1), -c.M(2 * sm, 0, 1)},
                {c.M(2, 1), -c.M(2 + 2 * e, 1), c.M(2 * sm, 0, 2)}, c.n + 1);
}

// Second Watson shape: e shifts one a slot and one midpoint slot, sm shifts
// the second terminating numerator and the lowest denominator.
ExactScalar watson_b_lhs(const Ctx& c, long e, long sm) {
  return c.phiq({c.M(2 * e, 2), c.M(0, 0, 2), c.Q(-c.n), -c.Q(sm - c.n)},
                {c.M(1, 1, 1), -c.M(1 + 2 * e, 1, 1), c.Q(sm - 2 * c.n)}, c.n + 1);
}

// m-expansion of the first Watson shape: sum_j coeff_j * inner(j). inner(j)
// is only consulted when the coefficient survives, so j never exceeds n.
ExactScalar equation_a_sum(const Ctx& c, const std::function<ExactScalar(long)>& inner) {
  ExactScalar total(0);
  for (long j = 0; j <= c.m; ++j) {
    ExactScalar f =
        c.br({c.Q(-c.m), c.Q(-c.n), c.M(2 + 2 * c.n, 2), c.M(0, 0, 1), -c.M(0, 0, 1)},
             {c.Q(1), c.M(2, 1), -c.M(2, 1), c.M(2 * c.m, 0, 2), c.M(2 * j - 2, 0, 2)}, j);
    if (f.is_zero()) continue;
    total += c.Q(c.m * j + ch2(j + 1)) * c.M(0, 0, j) * f * inner(j);
  }
  return total;
}

// ell-expansion of the first Watson shape: prefactor * sum_i coeff_i * inner(i).
ExactScalar equation_c_sum(const Ctx& c, const std::function<ExactScalar(long)>& inner) {
  ExactScalar pre = c.br({c.M(2 + 2 * c.ell + 2 * c.n, 2), c.M(2 + 2 * c.n, 1)},
                         {c.M(2 + 2 * c.ell + 4 * c.n, 2), c.M(2, 1)}, c.ell);
  ExactScalar denom = ExactScalar(1) - c.M(2 + 4 * c.ell + 4 * c.n, 2);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar f = c.br({c.Q(-c.ell), c.Q(-c.n), c.M(-4 * c.ell - 4 * c.n - 2, -2)},
                         {c.Q(1), c.M(-2 * c.ell - 4 * c.n, -2), c.M(-4 * c.ell - 2 * c.n, -2)}, i);
    if (f.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 + 4 * c.ell + 4 * c.n - 4 * i, 2)) / denom;
    total += c.Q(2 * i) * c.M(0, -i) * ratio * f * inner(i);
  }
  return pre * total;
}

// ell-expansion of the second Watson shape.
ExactScalar equation_aa_sum(const Ctx& c, const std::function<ExactScalar(long)>& inner) {
  ExactScalar pre =
      c.br({c.M(2 * c.ell, 2), c.M(1, 1, -1)}, {c.M(2 * c.ell, 2, -2), c.M(1, 1, 1)}, c.ell);
  ExactScalar denom = ExactScalar(1) - c.M(4 * c.ell, 2, -2);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar f = c.br({c.Q(-c.ell), c.M(0, 0, 2), c.M(-4 * c.ell, -2, 2)},
                         {c.Q(1), c.M(2 - 4 * c.ell, -2), c.M(2 - 2 * c.ell, -2, 2)}, i);
    if (f.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(4 * c.ell - 4 * i, 2, -2)) / denom;
    total += c.M(5 * i, -i, -i) * ratio * f * inner(i);
  }
  return pre * total;
}

ExactScalar prop_a_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar total(0);
  for (long j = 0; j <= c.m; ++j) {
    ExactScalar f =
        c.br({c.Q(-c.m), c.Q(-c.n), c.M(2 + 2 * c.n, 2), c.M(0, 0, 1), -c.M(0, 0, 1)},
             {c.Q(1), c.M(2, 1), -c.M(2, 1), c.M(2 * c.m, 0, 2), c.M(2 * j - 2, 0, 2)}, j);
    if (f.is_zero()) continue;
    if (chi(c.n - j) == 0) continue;
    total += c.Q((c.m + c.n) * j - ch2(j)) * c.M(0, 0, c.n) * f *
             c.br2({c.Q(1), c.M(4, 2, -2)},
                   {c.M(4 + 4 * j, 2), c.M(2 + 4 * j, 0, 2)}, (c.n - j) / 2);
  }
  return total;
}

ExactScalar thm_a_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(2 + 2 * c.ell + 2 * c.n, 2), c.M(2 + 2 * c.n, 1)},
                         {c.M(2 + 2 * c.ell + 4 * c.n, 2), c.M(2, 1)}, c.ell);
  ExactScalar denom = ExactScalar(1) - c.M(2 + 4 * c.ell + 4 * c.n, 2);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.Q(-c.n), c.M(-4 * c.ell - 4 * c.n - 2, -2)},
                          {c.Q(1), c.M(-2 * c.ell - 4 * c.n, -2), c.M(-4 * c.ell - 2 * c.n, -2)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 + 4 * c.ell + 4 * c.n - 4 * i, 2)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(i - c.n), c.M(2 + 4 * c.ell + 2 * c.n - 2 * i, 2),
                             c.M(0, 0, 1), -c.M(0, 0, 1)},
                            {c.Q(1), c.M(2 + 2 * c.ell, 1), -c.M(2 + 2 * c.ell, 1),
                             c.M(2 * c.m, 0, 2), c.M(2 * j - 2, 0, 2)}, j);
      if (fj.is_zero()) continue;
      if (chi(c.n - i - j) == 0) continue;
      total += c.Q(2 * i + (c.m + c.n - i) * j - ch2(j)) * c.M(0, -i, c.n - i) * ratio * fi * fj *
               c.br2({c.Q(1), c.M(4 + 4 * c.ell, 2, -2)},
                     {c.M(4 + 4 * c.ell + 4 * j, 2), c.M(2 + 4 * j, 0, 2)}, (c.n - i - j) / 2);
    }
  }
  return pre * total;
}

ExactScalar equivalence_a_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(-2 * c.n, -2), -c.M(-2 * c.n, -1)},
                         {c.M(-4 * c.n, -2), -c.M(0, -1)}, c.ell);
  ExactScalar denom = ExactScalar(1) - c.M(2 + 4 * c.n, 2);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.Q(-c.n), c.M(-4 * c.n - 2, -2)},
                          {c.Q(1), c.M(-2 * c.n, -2), c.M(2 * c.ell - 4 * c.n, -2)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 + 4 * c.n - 4 * i, 2)) / denom;
    ExactScalar sign_i = (i % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(i - c.n), c.M(2 + 2 * c.n - 2 * i, 2),
                             c.M(0, 0, 1), -c.M(0, 0, 1)},
                            {c.Q(1), c.M(2, 1), -c.M(2, 1), c.M(2 * c.m, 0, 2),
                             c.M(2 * j - 2, 0, 2)}, j);
      if (fj.is_zero()) continue;
      if (chi(c.n - i - j) == 0) continue;
      total += sign_i * c.Q((c.ell + 2) * i + (c.m + c.n - i) * j - ch2(j)) *
               c.M(0, -i, c.n - i) * ratio * fi * fj *
               c.br2({c.Q(1), c.M(4, 2, -2)},
                     {c.M(4 + 4 * j, 2), c.M(2 + 4 * j, 0, 2)}, (c.n - i - j) / 2);
    }
  }
  return pre * total;
}

ExactScalar equivalence_b_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(2 + 2 * c.ell + 2 * c.n, 2), c.M(2 + 2 * c.n, 1)},
                         {c.M(2 + 2 * c.ell + 4 * c.n, 2), c.M(2, 1)}, c.ell);
  ExactScalar denom = ExactScalar(1) - c.M(2 + 4 * c.ell + 4 * c.n, 2);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.Q(-c.n), c.M(-4 * c.ell - 4 * c.n - 2, -2)},
                          {c.Q(1), c.M(-2 * c.ell - 4 * c.n, -2), c.M(-4 * c.ell - 2 * c.n, -2)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 + 4 * c.ell + 4 * c.n - 4 * i, 2)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(i - c.n), c.M(2 + 4 * c.ell + 2 * c.n - 2 * i, 2),
                             c.M(-2 * c.m, 0, 1), -c.M(-2 * c.m, 0, 1)},
                            {c.Q(1), c.M(2 + 2 * c.ell, 1), -c.M(2 + 2 * c.ell, 1),
                             c.M(-2 * c.m, 0, 2), c.M(2 * j - 4 * c.m - 2, 0, 2)}, j);
      if (fj.is_zero()) continue;
      if (chi(c.n - i - j) == 0) continue;
      ExactScalar sign_j = (j % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
      total += sign_j * c.Q(2 * i + (c.n - i - j) * (j - c.m) + ch2(j + 1)) *
               c.M(0, -i, c.n - i) * ratio * fi * fj *
               c.br2({c.Q(1), c.M(4 + 4 * c.ell + 4 * c.m, 2, -2)},
                     {c.M(4 + 4 * c.ell + 4 * j, 2), c.M(2 - 4 * c.m + 4 * j, 0, 2)},
                     (c.n - i - j) / 2);
    }
  }
  return pre * total;
}

ExactScalar equivalence_c_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(-2 * c.n, -2), -c.M(-2 * c.n, -1)},
                         {c.M(-4 * c.n, -2), -c.M(0, -1)}, c.ell);
  ExactScalar denom = ExactScalar(1) - c.M(2 + 4 * c.n, 2);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.Q(-c.n), c.M(-4 * c.n - 2, -2)},
                          {c.Q(1), c.M(-2 * c.n, -2), c.M(2 * c.ell - 4 * c.n, -2)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(2 + 4 * c.n - 4 * i, 2)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(i - c.n), c.M(2 + 2 * c.n - 2 * i, 2),
                             c.M(-2 * c.m, 0, 1), -c.M(-2 * c.m, 0, 1)},
                            {c.Q(1), c.M(2, 1), -c.M(2, 1), c.M(-2 * c.m, 0, 2),
                             c.M(2 * j - 4 * c.m - 2, 0, 2)}, j);
      if (fj.is_zero()) continue;
      if (chi(c.n - i - j) == 0) continue;
      ExactScalar sign = ((i + j) % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
      total += sign * c.Q((c.ell + 2) * i + (c.n - i - j) * (j - c.m) + ch2(j + 1)) *
               c.M(0, -i, c.n - i) * ratio * fi * fj *
               c.br2({c.Q(1), c.M(4 + 4 * c.m, 2, -2)},
                     {c.M(4 + 4 * j, 2), c.M(2 - 4 * c.m + 4 * j, 0, 2)}, (c.n - i - j) / 2);
    }
  }
  return pre * total;
}

ExactScalar prop_b_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar total(0);
  for (long j = 0; j <= c.m; ++j) {
    ExactScalar f = c.br({c.Q(-c.m), c.Q(-c.n), -c.Q(-c.n), c.M(0, 2), c.M(0, 0, 2)},
                         {c.Q(1), c.M(1, 1, 1), -c.M(1, 1, 1), c.Q(c.m - 2 * c.n),
                          c.Q(j - 2 * c.n - 1)}, j);
    if (f.is_zero()) continue;
    total += c.Q((c.m - c.n) * j + ch2(j + 1)) * f *
             c.br2({c.M(2 + 2 * j, 2), c.M(2 + 2 * j, 0, 2)},
                   {c.Q(1), c.M(2 + 4 * j, 2, 2)}, c.n - j);
  }
  return total;
}

// Same sum with the inner series evaluated term by term instead of through
// its product form.
ExactScalar prop_b_recomposed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar total(0);
  for (long j = 0; j <= c.m; ++j) {
    ExactScalar f = c.br({c.Q(-c.m), c.Q(-c.n), -c.Q(-c.n), c.M(0, 2), c.M(0, 0, 2)},
                         {c.Q(1), c.M(1, 1, 1), -c.M(1, 1, 1), c.Q(c.m - 2 * c.n),
                          c.Q(j - 2 * c.n - 1)}, j);
    if (f.is_zero()) continue;
    ExactScalar inner =
        c.phiq({c.M(2 * j, 2), c.M(2 * j, 0, 2), c.Q(j - c.n), -c.Q(j - c.n)},
               {c.M(1 + 2 * j, 1, 1), -c.M(1 + 2 * j, 1, 1), c.Q(2 * j - 2 * c.n)},
               c.n - j + 1);
    total += c.Q((c.m - c.n) * j + ch2(j + 1)) * f * inner;
  }
  return total;
}

ExactScalar prop_c_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar total(0);
  for (long j = 0; j <= c.m; ++j) {
    ExactScalar f = c.br({c.Q(-c.m), c.Q(-c.m - c.n), -c.Q(-c.m - c.n), c.M(0, 2), c.M(0, 0, 2)},
                         {c.Q(1), c.M(1, 1, 1), -c.M(1, 1, 1), c.Q(-c.m - 2 * c.n),
                          c.Q(j - 2 * c.m - 2 * c.n - 1)}, j);
    if (f.is_zero()) continue;
    ExactScalar sign = (j % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
    total += sign * c.Q(ch2(j + 1) - c.n * j) * f *
             c.br2({c.M(2 + 2 * j, 2), c.M(2 + 2 * j, 0, 2)},
                   {c.Q(1), c.M(2 + 4 * j, 2, 2)}, c.m + c.n - j);
  }
  return total;
}

ExactScalar prop_c_recomposed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar total(0);
  for (long j = 0; j <= c.m; ++j) {
    ExactScalar f = c.br({c.Q(-c.m), c.Q(-c.m - c.n), -c.Q(-c.m - c.n), c.M(0, 2), c.M(0, 0, 2)},
                         {c.Q(1), c.M(1, 1, 1), -c.M(1, 1, 1), c.Q(-c.m - 2 * c.n),
                          c.Q(j - 2 * c.m - 2 * c.n - 1)}, j);
    if (f.is_zero()) continue;
    ExactScalar inner = c.phiq(
        {c.M(2 * j, 2), c.M(2 * j, 0, 2), c.Q(j - c.m - c.n), -c.Q(j - c.m - c.n)},
        {c.M(1 + 2 * j, 1, 1), -c.M(1 + 2 * j, 1, 1), c.Q(2 * j - 2 * c.m - 2 * c.n)},
        c.m + c.n - j + 1);
    ExactScalar sign = (j % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
    total += sign * c.Q(ch2(j + 1) - c.n * j) * f * inner;
  }
  return total;
}

ExactScalar thm_b_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(2 * c.ell, 2), c.M(1, 1, -1)},
                         {c.M(2 * c.ell, 2, -2), c.M(1, 1, 1)}, c.ell);
  ExactScalar denom = ExactScalar(1) - c.M(4 * c.ell, 2, -2);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(0, 0, 2), c.M(-4 * c.ell, -2, 2)},
                          {c.Q(1), c.M(2 - 4 * c.ell, -2), c.M(2 - 2 * c.ell, -2, 2)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(4 * c.ell - 4 * i, 2, -2)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(-c.n), -c.Q(-c.n), c.M(4 * c.ell - 2 * i, 2),
                             c.M(2 * i, 0, 2)},
                            {c.Q(1), c.M(1 + 2 * c.ell, 1, 1), -c.M(1 + 2 * c.ell, 1, 1),
                             c.Q(c.m - 2 * c.n), c.Q(j - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      total += c.M(5 * i + 2 * (c.m - c.n) * j + 2 * ch2(j + 1), -i, -i) * ratio * fi * fj *
               c.br2({c.M(2 + 4 * c.ell - 2 * i + 2 * j, 2), c.M(2 + 2 * i + 2 * j, 0, 2)},
                     {c.Q(1), c.M(2 + 4 * c.ell + 4 * j, 2, 2)}, c.n - j);
    }
  }
  return pre * total;
}

ExactScalar thm_c_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(2 * c.ell, 2), c.M(1, 1, -1)},
                         {c.M(2 * c.ell, 2, -2), c.M(1, 1, 1)}, c.ell);
  ExactScalar denom = ExactScalar(1) - c.M(4 * c.ell, 2, -2);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(0, 0, 2), c.M(-4 * c.ell, -2, 2)},
                          {c.Q(1), c.M(2 - 4 * c.ell, -2), c.M(2 - 2 * c.ell, -2, 2)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(4 * c.ell - 4 * i, 2, -2)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj =
          c.br({c.Q(-c.m), c.Q(-c.m - c.n), -c.Q(-c.m - c.n), c.M(4 * c.ell - 2 * i, 2),
                c.M(2 * i, 0, 2)},
               {c.Q(1), c.M(1 + 2 * c.ell, 1, 1), -c.M(1 + 2 * c.ell, 1, 1),
                c.Q(-c.m - 2 * c.n), c.Q(j - 2 * c.m - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      ExactScalar sign = (j % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
      total += sign * c.M(5 * i - 2 * c.n * j + 2 * ch2(j + 1), -i, -i) * ratio * fi * fj *
               c.br2({c.M(2 + 4 * c.ell - 2 * i + 2 * j, 2), c.M(2 + 2 * i + 2 * j, 0, 2)},
                     {c.Q(1), c.M(2 + 4 * c.ell + 4 * j, 2, 2)}, c.m + c.n - j);
    }
  }
  return pre * total;
}

ExactScalar equivalence_e_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(2, -2), -c.M(1, -1, 1)},
                         {c.M(2, -2, 2), -c.M(1, -1, -1)}, c.ell);
  ExactScalar denom = ExactScalar(1) - c.M(0, -2, 2);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(0, 0, 2), c.M(0, -2, 2)},
                          {c.Q(1), c.M(2, -2), c.M(2 + 2 * c.ell, -2, 2)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(4 * i, -2, 2)) / denom;
    ExactScalar sign_i = (i % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(-c.n), -c.Q(-c.n), c.M(-2 * i, 2), c.M(2 * i, 0, 2)},
                            {c.Q(1), c.M(1, 1, 1), -c.M(1, 1, 1), c.Q(c.m - 2 * c.n),
                             c.Q(j - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      total += sign_i *
               c.M((1 + 2 * c.ell) * i + 2 * (c.m - c.n) * j + 2 * ch2(j + 1), -i, -i) *
               ratio * fi * fj *
               c.br2({c.M(2 - 2 * i + 2 * j, 2), c.M(2 + 2 * i + 2 * j, 0, 2)},
                     {c.Q(1), c.M(2 + 4 * j, 2, 2)}, c.n - j);
    }
  }
  return pre * total;
}

ExactScalar equivalence_f_closed(const ParamPoint& p) {
  Ctx c(p);
  ExactScalar pre = c.br({c.M(2, -2), -c.M(1, -1, 1)},
                         {c.M(2, -2, 2), -c.M(1, -1, -1)}, c.ell);
  ExactScalar denom = ExactScalar(1) - c.M(0, -2, 2);
  ExactScalar total(0);
  for (long i = 0; i <= c.ell; ++i) {
    ExactScalar fi = c.br({c.Q(-c.ell), c.M(0, 0, 2), c.M(0, -2, 2)},
                          {c.Q(1), c.M(2, -2), c.M(2 + 2 * c.ell, -2, 2)}, i);
    if (fi.is_zero()) continue;
    ExactScalar ratio = (ExactScalar(1) - c.M(4 * i, -2, 2)) / denom;
    for (long j = 0; j <= c.m; ++j) {
      ExactScalar fj = c.br({c.Q(-c.m), c.Q(-c.m - c.n), -c.Q(-c.m - c.n), c.M(-2 * i, 2),
                             c.M(2 * i, 0, 2)},
                            {c.Q(1), c.M(1, 1, 1), -c.M(1, 1, 1), c.Q(-c.m - 2 * c.n),
                             c.Q(j - 2 * c.m - 2 * c.n - 1)}, j);
      if (fj.is_zero()) continue;
      ExactScalar sign = ((i + j) % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
      total += sign * c.M((1 + 2 * c.ell) * i - 2 * c.n * j + 2 * ch2(j + 1), -i, -i) *
               ratio * fi * fj *
               c.br2({c.M(2 - 2 * i + 2 * j, 2), c.M(2 + 2 * i + 2 * j, 0, 2)},
                     {c.Q(1), c.M(2 + 4 * j, 2, 2)}, c.m + c.n - j);
    }
  }
  return pre * total;
}

bool m_le_n(const ParamPoint& p) { return p.m <= p.n; }
bool n_ge_1(const ParamPoint& p) { return p.n >= 1; }

}  // namespace

void append_watson_entries(std::vector<IdentitySpec>& out) {
  {
    auto s = make("prop-a", "Watson-type summation with shift m on the c slots", Family::Watson);
    s.ell_mode = ParamMode::Unused;
    s.lhs = [](const ParamPoint& p) { return watson_a_lhs(Ctx(p), 0, p.m); };
    s.rhs_closed = prop_a_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return equation_a_sum(c, [&](long j) {
        return closed_at("andrews-watson",
                         pt(p.rho, c.M(2 * j, 1), c.M(2 * j, 0, 1), c.n - j), "prop-a");
      });
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("equation-a",
                  "expansion reducing the m-shifted Watson series to unshifted instances",
                  Family::Relation);
    s.ell_mode = ParamMode::Unused;
    s.lhs = [](const ParamPoint& p) { return watson_a_lhs(Ctx(p), 0, p.m); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return equation_a_sum(c, [&](long j) {
        return c.phiq({c.Q(j - c.n), c.M(2 + 2 * c.n + 2 * j, 2), c.M(2 * j, 0, 1),
                       -c.M(2 * j, 0, 1)},
                      {c.M(2 + 2 * j, 1), -c.M(2 + 2 * j, 1), c.M(4 * j, 0, 2)},
                      c.n - j + 1);
      });
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("prop-a-ex-m1", "m = 1 case of the c-shifted Watson summation", Family::Example);
    s.ell_mode = ParamMode::Unused;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return watson_a_lhs(Ctx(p), 0, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      long half = c.n / 2;
      if (c.n % 2 == 0) {
        return c.M(0, 0, c.n) *
               c.br2({c.Q(1), c.M(4, 2, -2)}, {c.M(4, 2), c.M(2, 0, 2)}, half);
      }
      return c.M(0, 0, c.n) * c.br2({c.Q(1)}, {c.M(2, 0, 2)}, half + 1) *
             c.br2({c.M(4, 2, -2)}, {c.M(4, 2)}, half);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("prop-a", pt(p.rho, p.alpha, p.gamma, p.n, 0, 1), "prop-a-ex-m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-a", "Watson-type summation with shifts ell on a and m on c",
                  Family::Watson);
    s.lhs = [](const ParamPoint& p) { return watson_a_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = thm_a_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return equation_c_sum(c, [&](long i) {
        return closed_at("prop-a", pt(p.rho, c.M(2 * c.ell, 1), p.gamma, c.n - i, 0, c.m),
                         "thm-a");
      });
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("equation-c", "expansion removing the ell shift from the Watson series",
                  Family::Relation);
    s.uses_uv = true;
    s.lhs = [](const ParamPoint& p) { return watson_a_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      long v = c.m;
      return equation_c_sum(c, [&](long i) {
        return c.phiq({c.Q(i - c.n), c.M(2 + 4 * c.ell + 2 * c.n - 2 * i, 2), c.M(0, 0, 1),
                       -c.M(2 * v, 0, 1)},
                      {c.M(2 + 2 * c.ell, 1), -c.M(2 + 2 * c.ell, 1), c.M(2 * v, 0, 2)},
                      c.n - i + 1);
      });
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-a-ex-l1m0", "ell = 1, m = 0 case of the doubly shifted Watson summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 0;
    s.lhs = [](const ParamPoint& p) { return watson_a_lhs(Ctx(p), 1, 0); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      long half = c.n / 2;
      if (c.n % 2 == 0) {
        ExactScalar coeff = (ExactScalar(1) + c.M(2, 1)) /
                            (ExactScalar(1) + c.M(2 + 2 * c.n, 1));
        return coeff * c.M(0, 0, c.n) *
               c.br2({c.Q(1), c.M(8, 2, -2)}, {c.M(4, 2), c.M(2, 0, 2)}, half);
      }
      ExactScalar coeff = (c.Q(2) - c.Q(1)) * c.M(0, 1) /
                          ((ExactScalar(1) - c.M(2, 1)) *
                           (ExactScalar(1) + c.M(2 * c.n + 2, 1)));
      return coeff * c.M(0, 0, c.n - 1) *
             c.br2({c.Q(3), c.M(8, 2, -2)}, {c.M(8, 2), c.M(2, 0, 2)}, half);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-a", pt(p.rho, p.alpha, p.gamma, p.n, 1, 0), "thm-a-ex-l1m0");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-a-ex-l1m1", "ell = 1, m = 1 case of the doubly shifted Watson summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return watson_a_lhs(Ctx(p), 1, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      long half = c.n / 2;
      if (c.n % 2 == 0) {
        ExactScalar coeff = (ExactScalar(1) + c.M(2, 1)) *
                            (c.M(0, 0, 1) + c.M(2 + 2 * c.n, 1)) /
                            ((c.M(0, 0, 1) + c.M(2, 1)) *
                             (ExactScalar(1) + c.M(2 + 2 * c.n, 1)));
        return coeff * c.M(0, 0, c.n) *
               c.br2({c.Q(1), c.M(4, 2, -2)}, {c.M(4, 2), c.M(2, 0, 2)}, half);
      }
      ExactScalar coeff = (ExactScalar(1) - c.Q(1)) * (c.M(0, 0, 1) - c.M(2, 1)) *
                          (ExactScalar(1) + c.M(2 * c.n + 2, 1, 1)) /
                          ((ExactScalar(1) - c.M(2, 1)) * (ExactScalar(1) - c.M(2, 0, 2)) *
                           (ExactScalar(1) + c.M(2 * c.n + 2, 1)));
      return coeff * c.M(0, 0, c.n - 1) *
             c.br2({c.Q(3), c.M(8, 2, -2)}, {c.M(8, 2), c.M(6, 0, 2)}, half);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-a", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-a-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("equivalence-a", "ell-negated form of the doubly shifted Watson summation",
                  Family::Equivalence);
    s.lhs = [](const ParamPoint& p) { return watson_a_lhs(Ctx(p), -p.ell, p.m); };
    s.rhs_closed = equivalence_a_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return closed_at("thm-a", pt(p.rho, -c.M(-2 * c.ell, 1), p.gamma, c.n, c.ell, c.m),
                       "equivalence-a");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("equivalence-b", "m-negated form of the doubly shifted Watson summation",
                  Family::Equivalence);
    s.lhs = [](const ParamPoint& p) { return watson_a_lhs(Ctx(p), p.ell, -p.m); };
    s.rhs_closed = equivalence_b_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return closed_at("thm-a", pt(p.rho, p.alpha, -c.M(-2 * c.m, 0, 1), c.n, c.ell, c.m),
                       "equivalence-b");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("equivalence-c", "ell- and m-negated form of the doubly shifted Watson summation",
                  Family::Equivalence);
    s.lhs = [](const ParamPoint& p) { return watson_a_lhs(Ctx(p), -p.ell, -p.m); };
    s.rhs_closed = equivalence_c_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return closed_at("thm-a",
                       pt(p.rho, -c.M(-2 * c.ell, 1), -c.M(-2 * c.m, 0, 1), c.n, c.ell, c.m),
                       "equivalence-c");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("prop-b", "second Watson-type summation with raising shift m", Family::Watson);
    s.ell_mode = ParamMode::Unused;
    s.constraint_text = "m <= n";
    s.constraints = m_le_n;
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), 0, p.m); };
    s.rhs_closed = prop_b_closed;
    s.rhs_derived = prop_b_recomposed;
    out.push_back(std::move(s));
  }
  {
    auto s = make("equivalence-d",
                  "expansion reducing the m-shifted second Watson series to unshifted instances",
                  Family::Relation);
    s.ell_mode = ParamMode::Unused;
    s.lhs = [](const ParamPoint& p) {
      Ctx c(p);
      return c.phiq({c.Q(-c.n), c.M(0, 2), c.M(0, 0, 1), -c.M(2 * c.m, 0, 1)},
                    {c.M(1 - c.n, 1), -c.M(1 - c.n, 1), c.M(2 * c.m, 0, 2)}, c.n + 1);
    };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar total(0);
      for (long j = 0; j <= c.m; ++j) {
        ExactScalar f =
            c.br({c.Q(-c.m), c.Q(-c.n), c.M(0, 2), c.M(0, 0, 1), -c.M(0, 0, 1)},
                 {c.Q(1), c.M(1 - c.n, 1), -c.M(1 - c.n, 1), c.M(2 * c.m, 0, 2),
                  c.M(2 * j - 2, 0, 2)}, j);
        if (f.is_zero()) continue;
        ExactScalar inner =
            c.phiq({c.Q(j - c.n), c.M(2 * j, 2), c.M(2 * j, 0, 1), -c.M(2 * j, 0, 1)},
                   {c.M(1 - c.n + 2 * j, 1), -c.M(1 - c.n + 2 * j, 1), c.M(4 * j, 0, 2)},
                   c.n - j + 1);
        total += c.Q(c.m * j + ch2(j + 1)) * c.M(0, 0, j) * f * inner;
      }
      return total;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("prop-b-ex-m1", "m = 1 case of the raising-shift Watson summation",
                  Family::Example);
    s.ell_mode = ParamMode::Unused;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.constraint_text = "n >= 1";
    s.constraints = n_ge_1;
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), 0, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return c.br2({c.M(2, 2), c.M(2, 0, 2)}, {c.Q(1), c.M(2, 2, 2)}, c.n) +
             c.Q(c.n) * c.br2({c.M(0, 2), c.M(0, 0, 2)}, {c.Q(1), c.M(2, 2, 2)}, c.n);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("prop-b", pt(p.rho, p.alpha, p.gamma, p.n, 0, 1), "prop-b-ex-m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("prop-c", "second Watson-type summation with lowering shift m", Family::Watson);
    s.ell_mode = ParamMode::Unused;
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), 0, -p.m); };
    s.rhs_closed = prop_c_closed;
    s.rhs_derived = prop_c_recomposed;
    out.push_back(std::move(s));
  }
  {
    auto s = make("prop-c-ex-m1", "m = 1 case of the lowering-shift Watson summation",
                  Family::Example);
    s.ell_mode = ParamMode::Unused;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), 0, -1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      return c.br2({c.M(2, 2), c.M(2, 0, 2)}, {c.Q(1), c.M(2, 2, 2)}, c.n + 1) -
             c.Q(c.n + 1) * c.br2({c.M(0, 2), c.M(0, 0, 2)}, {c.Q(1), c.M(2, 2, 2)}, c.n + 1);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("prop-c", pt(p.rho, p.alpha, p.gamma, p.n, 0, 1), "prop-c-ex-m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-b", "second Watson-type summation with shifts ell and raising m",
                  Family::Watson);
    s.constraint_text = "m <= n";
    s.constraints = m_le_n;
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = thm_b_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return equation_aa_sum(c, [&](long i) {
        return closed_at("prop-b",
                         pt(p.rho, c.M(2 * c.ell - i, 1), c.M(i, 0, 1), c.n, 0, c.m), "thm-b");
      });
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("equation-aa", "expansion removing the ell shift from the second Watson series",
                  Family::Relation);
    s.uses_uv = true;
    s.constraint_text = "m <= n";
    s.constraints = m_le_n;
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), p.ell, p.m); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      long v = c.m;
      return equation_aa_sum(c, [&](long i) {
        return c.phiq({c.M(4 * c.ell - 2 * i, 2), c.M(2 * i, 0, 2), c.Q(-c.n), -c.Q(v - c.n)},
                      {c.M(1 + 2 * c.ell, 1, 1), -c.M(1 + 2 * c.ell, 1, 1), c.Q(v - 2 * c.n)},
                      c.n + 1);
      });
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-b-ex-l1m0", "ell = 1, m = 0 case of the shifted second Watson summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 0;
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), 1, 0); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar da = (ExactScalar(1) - c.M(1, 1, 1)) * (ExactScalar(1) + c.M(1, 1, -1));
      ExactScalar db = (ExactScalar(1) - c.M(1, 1, 1)) * (ExactScalar(1) + c.M(-1, -1, 1));
      return (ExactScalar(1) - c.M(2, 2)) / da *
                 c.br2({c.M(6, 2), c.M(2, 0, 2)}, {c.Q(1), c.M(6, 2, 2)}, c.n) +
             (ExactScalar(1) - c.M(0, 0, 2)) / db *
                 c.br2({c.M(4, 2), c.M(4, 0, 2)}, {c.Q(1), c.M(6, 2, 2)}, c.n);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-b", pt(p.rho, p.alpha, p.gamma, p.n, 1, 0), "thm-b-ex-l1m0");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-b-ex-l1m1", "ell = 1, m = 1 case of the shifted second Watson summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.constraint_text = "n >= 1";
    s.constraints = n_ge_1;
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), 1, 1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar da = (ExactScalar(1) - c.M(1, 1, 1)) * (ExactScalar(1) + c.M(1, 1, -1));
      ExactScalar ca = (ExactScalar(1) - c.M(1 + 2 * c.n, 1, 1)) *
                       (ExactScalar(1) + c.M(1 + 2 * c.n, 1, -1));
      ExactScalar cb = (ExactScalar(1) - c.M(1 + 2 * c.n, 1, 1)) *
                       (c.Q(c.n) + c.M(1, 1, -1));
      return ca / da * c.br2({c.M(2, 2), c.M(2, 0, 2)}, {c.Q(1), c.M(6, 2, 2)}, c.n) +
             cb / da * c.br2({c.M(4, 2), c.M(0, 0, 2)}, {c.Q(1), c.M(6, 2, 2)}, c.n);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-b", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-b-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("equivalence-e", "ell-negated form of the shifted second Watson summation",
                  Family::Equivalence);
    s.constraint_text = "m <= n";
    s.constraints = m_le_n;
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), -p.ell, p.m); };
    s.rhs_closed = equivalence_e_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return closed_at("thm-b", pt(p.rho, -c.M(-2 * c.ell, 1), p.gamma, c.n, c.ell, c.m),
                       "equivalence-e");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-c", "second Watson-type summation with shifts ell and lowering m",
                  Family::Watson);
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), p.ell, -p.m); };
    s.rhs_closed = thm_c_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return equation_aa_sum(c, [&](long i) {
        return closed_at("prop-c",
                         pt(p.rho, c.M(2 * c.ell - i, 1), c.M(i, 0, 1), c.n, 0, c.m), "thm-c");
      });
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("thm-c-ex-l1m1",
                  "ell = 1, m = 1 case of the lowering-shift second Watson summation",
                  Family::Example);
    s.ell_mode = ParamMode::Fixed;
    s.ell_fixed = 1;
    s.m_mode = ParamMode::Fixed;
    s.m_fixed = 1;
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), 1, -1); };
    s.rhs_closed = [](const ParamPoint& p) {
      Ctx c(p);
      ExactScalar da = (ExactScalar(1) - c.M(1, 1, 1)) * (ExactScalar(1) + c.M(1, 1, -1));
      ExactScalar ca = (ExactScalar(1) + c.M(3 + 2 * c.n, 1, 1)) *
                       (ExactScalar(1) - c.M(3 + 2 * c.n, 1, -1));
      ExactScalar cb = (ExactScalar(1) + c.M(3 + 2 * c.n, 1, 1)) *
                       (c.Q(c.n + 1) - c.M(1, 1, -1));
      return ca / da * c.br2({c.M(2, 2), c.M(2, 0, 2)}, {c.Q(1), c.M(6, 2, 2)}, c.n + 1) -
             cb / da * c.br2({c.M(4, 2), c.M(0, 0, 2)}, {c.Q(1), c.M(6, 2, 2)}, c.n + 1);
    };
    s.rhs_derived = [](const ParamPoint& p) {
      return closed_at("thm-c", pt(p.rho, p.alpha, p.gamma, p.n, 1, 1), "thm-c-ex-l1m1");
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("equivalence-f",
                  "ell-negated form of the lowering-shift second Watson summation",
                  Family::Equivalence);
    s.lhs = [](const ParamPoint& p) { return watson_b_lhs(Ctx(p), -p.ell, -p.m); };
    s.rhs_closed = equivalence_f_closed;
    s.rhs_derived = [](const ParamPoint& p) {
      Ctx c(p);
      return closed_at("thm-c", pt(p.rho, -c.M(-2 * c.ell, 1), p.gamma, c.n, c.ell, c.m),
                       "equivalence-f");
    };
    out.push_back(std::move(s));
  }
}

}  // namespace qv::detail
