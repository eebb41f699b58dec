#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "qv/qalg.hpp"

using qv::chi;
using qv::ExactScalar;
using qv::eval_half_monomial;
using qv::ffnk;
using qv::HalfMonomial;
using qv::ipow;
using qv::ParamPoint;
using qv::PoleError;
using qv::qpoch;

namespace {

std::mt19937_64 rng(0x5eed0002);

ExactScalar random_scalar() {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 20);
  return ExactScalar(num(rng), den(rng));
}

ParamPoint random_point() {
  auto pick = [&] {
    static const long nums[] = {1, -1, 2, -2, 3, -3, 2, 5};
    static const long dens[] = {2, 3, 3, 5, 2, 5, 1, 3};
    std::uniform_int_distribution<int> d(0, 7);
    int i = d(rng);
    return ExactScalar(nums[i], dens[i]);
  };
  ParamPoint p;
  p.rho = pick();
  p.alpha = pick();
  p.gamma = pick();
  return p;
}

}  // namespace

TEST_CASE("qpoch fixed values") {
  ExactScalar q(1, 3);
  CHECK(qpoch(random_scalar(), q, 0) == ExactScalar(1));
  CHECK(qpoch(ExactScalar(1), q, 1) == ExactScalar(0));
  CHECK(qpoch(ExactScalar(1), q, 4) == ExactScalar(0));
  // (1/2; 1/3)_2 = (1 - 1/2)(1 - 1/6) = 5/12
  CHECK(qpoch(ExactScalar(1, 2), ExactScalar(1, 3), 2) == ExactScalar(5, 12));
}

TEST_CASE("ffnk fixed values") {
  ExactScalar q(1, 2);
  std::vector<ExactScalar> L = {ExactScalar(1, 3), ExactScalar(-2, 5), ExactScalar(7, 2)};
  for (int n = 0; n <= 6; ++n) CHECK(ffnk(L, L, q, n) == ExactScalar(1));
  CHECK(ffnk({ExactScalar(2)}, {ExactScalar(3)}, q, 1) == ExactScalar(1, 2));
  // empty denominator list reduces to a plain Pochhammer product
  CHECK(ffnk({ExactScalar(1, 3)}, {}, q, 5) == qpoch(ExactScalar(1, 3), q, 5));
  CHECK(ffnk({}, {}, q, 3) == ExactScalar(1));
}

TEST_CASE("ffnk names the vanishing denominator factor") {
  // (4; 1/2)_k has the factor 1 - 4*(1/2)^2 = 0 at k=2
  try {
    ffnk({ExactScalar(1)}, {ExactScalar(5), ExactScalar(4)}, ExactScalar(1, 2), 3);
    FAIL("expected PoleError");
  } catch (const PoleError& e) {
    std::string msg = e.what();
    CHECK(msg.find("entry 1") != std::string::npos);
    CHECK(msg.find("k=2") != std::string::npos);
  }
}

TEST_CASE("chi parity gate") {
  CHECK(chi(0) == 1);
  CHECK(chi(1) == 0);
  CHECK(chi(-3) == 0);
  CHECK(chi(-4) == 1);
  for (long long n = -10; n <= 10; ++n) {
    CHECK(chi(n) * chi(n + 1) == 0);
    CHECK(chi(n) + chi(n + 1) == 1);
  }
}

TEST_CASE("half-monomial evaluation fixed values") {
  ParamPoint p;
  p.rho = ExactScalar(1, 2);
  p.alpha = ExactScalar(2);
  p.gamma = ExactScalar(3);
  // sqrt(q a c) = rho * alpha * gamma
  CHECK(eval_half_monomial({+1, 1, 1, 1}, p) == ExactScalar(3));
  // c^{n/2} at n = 4 is gamma^4
  CHECK(eval_half_monomial({+1, 0, 0, 4}, p) == ExactScalar(81));
  // -q^{-1} sqrt(a) = -rho^{-2} alpha
  CHECK(eval_half_monomial({-1, -2, 1, 0}, p) == ExactScalar(-8));
}

TEST_CASE("half-monomial multiplicativity") {
  std::uniform_int_distribution<int> e(-6, 6);
  std::uniform_int_distribution<int> s(0, 1);
  for (int t = 0; t < 1000; ++t) {
    ParamPoint p = random_point();
    HalfMonomial x{s(rng) ? 1 : -1, e(rng), e(rng), e(rng)};
    HalfMonomial y{s(rng) ? 1 : -1, e(rng), e(rng), e(rng)};
    CHECK(eval_half_monomial(x * y, p) ==
          eval_half_monomial(x, p) * eval_half_monomial(y, p));
  }
}

TEST_CASE("half-monomial powers") {
  ParamPoint p = random_point();
  HalfMonomial x{-1, 3, -1, 2};
  for (int e = -4; e <= 4; ++e) {
    CHECK(eval_half_monomial(qv::hm_pow(x, e), p) == ipow(eval_half_monomial(x, p), e));
  }
}

TEST_CASE("pochhammer splitting law") {
  std::uniform_int_distribution<int> len(0, 12);
  for (int t = 0; t < 1000; ++t) {
    ExactScalar x = random_scalar();
    ExactScalar q = random_scalar();
    int n = len(rng), k = len(rng);
    CHECK(qpoch(x, q, n + k) == qpoch(x, q, n) * qpoch(x * ipow(q, n), q, k));
  }
}

TEST_CASE("base q^2 brackets match a direct product") {
  for (int t = 0; t < 50; ++t) {
    ParamPoint p = random_point();
    ExactScalar q2 = p.q2();
    // (q^{1-n} a; q^2)_n via the scalar base against an explicit product
    for (int n = 0; n <= 8; ++n) {
      p.n = n;
      ExactScalar x = ipow(p.rho, 2 * (1 - n)) * p.a();
      ExactScalar expect(1);
      for (int k = 0; k < n; ++k) expect *= ExactScalar(1) - x * ipow(q2, k);
      CHECK(qpoch(x, q2, n) == expect);
    }
  }
}

TEST_CASE("point validation") {
  ParamPoint p;
  p.rho = ExactScalar(1, 2);
  p.alpha = ExactScalar(2);
  p.gamma = ExactScalar(3);
  CHECK_NOTHROW(p.validate());
  ParamPoint bad = p;
  bad.rho = ExactScalar(0);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = p;
  bad.rho = ExactScalar(-1);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = p;
  bad.alpha = ExactScalar(0);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = p;
  bad.n = -1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(p.q() == ExactScalar(1, 4));
  CHECK(p.a() == ExactScalar(4));
  CHECK(p.c() == ExactScalar(9));
  CHECK(p.q2() == ExactScalar(1, 16));
}
