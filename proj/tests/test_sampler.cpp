#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "qv/sampler.hpp"

using namespace qv;

namespace {

// A stub entry keeps pool mechanics separate from the real formulas.
IdentitySpec stub(bool always_pole = false) {
  IdentitySpec spec;
  spec.id = "stub";
  spec.citation = "test double";
  auto eval = [always_pole](const ParamPoint&) -> ExactScalar {
    if (always_pole) throw PoleError("forced");
    return ExactScalar(1);
  };
  spec.lhs = eval;
  spec.rhs_closed = eval;
  return spec;
}

std::vector<ParamPoint> draw_many(const SampleConfig& cfg, const IdentitySpec& spec, long n,
                                  long ell, long m, int count) {
  CellSampler sampler(cfg, spec, n, ell, m);
  std::vector<ParamPoint> out;
  for (int i = 0; i < count; ++i) {
    int resamples = 0;
    out.push_back(sampler.next(resamples));
  }
  return out;
}

bool same_point(const ParamPoint& a, const ParamPoint& b) {
  return a.rho == b.rho && a.alpha == b.alpha && a.gamma == b.gamma && a.n == b.n &&
         a.ell == b.ell && a.m == b.m && a.u == b.u && a.v == b.v;
}

}  // namespace

TEST_CASE("default pool") {
  auto pool = default_pool();
  CHECK(pool.size() == 16);
  std::set<std::string> values;
  for (const auto& v : pool) {
    CHECK(!v.is_zero());
    values.insert(v.str());
  }
  CHECK(values.size() == 16);
  CHECK(values.count("1/2") == 1);
  CHECK(values.count("-1/2") == 1);
  CHECK(values.count("2") == 1);
  CHECK(values.count("-5/3") == 1);
  CHECK(values.count("1") == 0);
  CHECK(values.count("-1") == 0);
}

TEST_CASE("draws are a pure function of the cell key") {
  IdentitySpec spec = stub();
  SampleConfig cfg;
  cfg.seed = 42;
  auto first = draw_many(cfg, spec, 3, 1, 2, 5);
  auto second = draw_many(cfg, spec, 3, 1, 2, 5);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(same_point(first[i], second[i]));

  ParamPoint single = draw_point(cfg, 3, 1, 2, spec);
  CHECK(same_point(single, first[0]));
}

TEST_CASE("stream separates by seed, id, and cell") {
  IdentitySpec spec = stub();
  IdentitySpec other = stub();
  other.id = "stub-b";
  SampleConfig cfg;
  cfg.seed = 1;
  SampleConfig cfg2;
  cfg2.seed = 2;

  auto base = draw_many(cfg, spec, 4, 0, 0, 6);
  auto reseeded = draw_many(cfg2, spec, 4, 0, 0, 6);
  auto renamed = draw_many(cfg, other, 4, 0, 0, 6);
  auto shifted = draw_many(cfg, spec, 4, 1, 0, 6);

  auto differs = [&](const std::vector<ParamPoint>& a, const std::vector<ParamPoint>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i].rho == b[i].rho && a[i].alpha == b[i].alpha && a[i].gamma == b[i].gamma))
        return true;
    return false;
  };
  CHECK(differs(base, reseeded));
  CHECK(differs(base, renamed));
  CHECK(differs(base, shifted));
}

TEST_CASE("rho is never a unit even when the pool offers one") {
  IdentitySpec spec = stub();
  SampleConfig cfg;
  cfg.pool = {ExactScalar(1), ExactScalar(-1), ExactScalar(1, 2)};
  for (int n = 0; n < 4; ++n) {
    auto pts = draw_many(cfg, spec, n, 0, 0, 20);
    for (const auto& p : pts) {
      CHECK(p.rho == ExactScalar(1, 2));
      CHECK_NOTHROW(p.validate());
    }
  }
}

TEST_CASE("unit values stay eligible for the other coordinates") {
  IdentitySpec spec = stub();
  SampleConfig cfg;
  cfg.pool = {ExactScalar(1), ExactScalar(-1), ExactScalar(1, 2)};
  bool saw_unit_tail = false;
  auto pts = draw_many(cfg, spec, 2, 0, 0, 60);
  for (const auto& p : pts)
    if (p.alpha == ExactScalar(1) || p.gamma == ExactScalar(1)) saw_unit_tail = true;
  CHECK(saw_unit_tail);
}

TEST_CASE("bad pools are rejected up front") {
  IdentitySpec spec = stub();
  SampleConfig with_zero;
  with_zero.pool = {ExactScalar(0), ExactScalar(1, 2)};
  CHECK_THROWS_AS(CellSampler(with_zero, spec, 0, 0, 0), std::invalid_argument);

  SampleConfig all_units;
  all_units.pool = {ExactScalar(1), ExactScalar(-1)};
  CHECK_THROWS_AS(CellSampler(all_units, spec, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("signed shifts follow the entry's conventions") {
  IdentitySpec spec = stub();
  spec.uses_uv = true;
  spec.sign_u = -1;
  spec.sign_v = 1;
  SampleConfig cfg;
  auto pts = draw_many(cfg, spec, 5, 2, 3, 4);
  for (const auto& p : pts) {
    CHECK(p.u == -2);
    CHECK(p.v == 3);
    CHECK(p.ell == 2);
    CHECK(p.m == 3);
  }

  IdentitySpec plain = stub();
  auto unshifted = draw_many(cfg, plain, 5, 2, 3, 4);
  for (const auto& p : unshifted) {
    CHECK(p.u == 0);
    CHECK(p.v == 0);
  }
}

TEST_CASE("pole rejection counts and gives up cleanly") {
  IdentitySpec spec = stub(true);
  SampleConfig cfg;
  cfg.max_resamples = 7;
  CellSampler sampler(cfg, spec, 1, 0, 0);
  int resamples = -1;
  CHECK_THROWS_AS(sampler.next(resamples), SamplingExhausted);
  CHECK(resamples == 7);

  try {
    CellSampler again(cfg, spec, 1, 0, 0);
    int r = 0;
    again.next(r);
    CHECK(false);
  } catch (const SamplingExhausted& e) {
    CHECK(std::string(e.what()).find("stub") == 0);
  }
}

TEST_CASE("rejected attempts advance the stream") {
  // The first candidate poles, the rest are fine: the survivor must be the
  // second candidate of the pristine stream, with one rejection on the books.
  int calls = 0;
  IdentitySpec flaky;
  flaky.id = "stub";
  flaky.citation = "test double";
  flaky.lhs = [&calls](const ParamPoint&) -> ExactScalar {
    if (calls++ == 0) throw PoleError("first draw only");
    return ExactScalar(1);
  };
  flaky.rhs_closed = [](const ParamPoint&) { return ExactScalar(1); };

  SampleConfig cfg;
  CellSampler sampler(cfg, flaky, 2, 1, 0);
  int resamples = -1;
  ParamPoint survivor = sampler.next(resamples);
  CHECK(resamples == 1);

  auto pristine = draw_many(cfg, stub(), 2, 1, 0, 2);
  CHECK(same_point(survivor, pristine[1]));
}

TEST_CASE("real entries sample clean points") {
  const IdentitySpec* spec = find_identity("thm-a");
  REQUIRE(spec != nullptr);
  SampleConfig cfg;
  cfg.seed = 42;
  for (long n = 0; n <= 4; ++n) {
    CellSampler sampler(cfg, *spec, n, 1, 1);
    for (int i = 0; i < 3; ++i) {
      int resamples = 0;
      ParamPoint p = sampler.next(resamples);
      CHECK_NOTHROW(p.validate());
      CHECK(eval_lhs(*spec, p) == eval_rhs_closed(*spec, p));
    }
  }
}
