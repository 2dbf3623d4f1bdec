#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "wordperc/splice.hpp"

using namespace wordperc;

TEST_CASE("splice plan for equal connectors") {
  const std::vector<std::int64_t> lambdas(10, 5);
  const auto r = splice_plan(lambdas, 29, 5);
  REQUIRE(std::holds_alternative<SplicePlan>(r));
  const auto& p = std::get<SplicePlan>(r);
  CHECK(p.count == 5);
  CHECK(p.lambda_sum == 25);
  CHECK(p.base_length == 27);
  CHECK(p.parity_pad == 0);
  CHECK(p.detours == 1);
  CHECK(p.base_length + p.parity_pad + 2 * p.detours == 29);

  const auto odd = std::get<SplicePlan>(splice_plan(lambdas, 30, 5, {1, true}));
  CHECK(odd.count == 5);
  CHECK(odd.base_length == 28);
  CHECK(odd.parity_pad == 0);
  CHECK(odd.detours == 1);
  const auto pad = std::get<SplicePlan>(splice_plan(lambdas, 30, 5));
  CHECK(pad.parity_pad == 1);
  CHECK(pad.detours == 1);
}

TEST_CASE("runs of length ell squared follow at least ell - 2 connectors") {
  for (std::int64_t ell = 4; ell <= 12; ++ell) {
    const std::vector<std::int64_t> lambdas(static_cast<std::size_t>(ell + 4), ell);
    for (int se : {0, 1}) {
      const auto r = splice_plan(lambdas, ell * ell, ell, {se, true});
      REQUIRE(std::holds_alternative<SplicePlan>(r));
      CHECK(std::get<SplicePlan>(r).count >= ell - 2);
    }
  }
}

TEST_CASE("random splice instances") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::int64_t ell = std::uniform_int_distribution<std::int64_t>(4, 30)(rng);
    std::uniform_int_distribution<std::int64_t> lam(1, ell);
    const std::int64_t l = std::uniform_int_distribution<std::int64_t>(ell * ell, 3 * ell * ell)(rng);
    // Enough connectors that the list never runs out.
    std::vector<std::int64_t> lambdas;
    while (std::accumulate(lambdas.begin(), lambdas.end(), std::int64_t{0}) < l) {
      lambdas.push_back(lam(rng));
    }
    const int se = static_cast<int>(rng() % 2);
    const auto r = splice_plan(lambdas, l, ell, {se, true});
    const auto* p = std::get_if<SplicePlan>(&r);
    if (ell >= 5) {
      REQUIRE(p);
    } else if (!p) {
      continue;
    }
    ++checked;
    CAPTURE(ell);
    CAPTURE(l);
    const auto sum = std::accumulate(lambdas.begin(), lambdas.begin() + p->count, std::int64_t{0});
    CHECK(p->lambda_sum == sum);
    CHECK(sum <= l - 4);
    CHECK(sum + lambdas[static_cast<std::size_t>(p->count)] > l - 4);
    CHECK(sum >= l - ell - 3);
    CHECK(p->base_length + p->parity_pad + 2 * p->detours == l);
    CHECK(p->detours >= 0);
    CHECK(p->detours <= p->count - 1);
    CHECK(p->count >= ell - 2);
  }
  CHECK(checked > 9000);
}

TEST_CASE("capacity at ell = 4") {
  // The smallest ell: ell - 2 = 2 connectors are guaranteed, detours may not fit.
  const std::vector<std::int64_t> ones(20, 1);
  const auto r = splice_plan(ones, 16, 4);
  REQUIRE(std::holds_alternative<SplicePlan>(r));
  const auto& p = std::get<SplicePlan>(r);
  CHECK(p.count == 12);
  CHECK(p.detours == 1);
  const std::vector<std::int64_t> fours(20, 4);
  const auto q = std::get<SplicePlan>(splice_plan(fours, 16, 4));
  CHECK(q.count == 3);
  CHECK(q.base_length == 14);
  CHECK(q.detours == 1);
}

TEST_CASE("infeasible splices") {
  const std::vector<std::int64_t> lambdas{5, 5};
  // The list is exhausted long before the run ends.
  CHECK(std::holds_alternative<SpliceInfeasible>(splice_plan(lambdas, 40, 5)));
  // Relaxed: the first connector does not fit.
  CHECK(std::holds_alternative<SpliceInfeasible>(splice_plan(lambdas, 8, 5, {0, false})));
  // Relaxed: too many detours for one intermediary outlet.
  const std::vector<std::int64_t> three{5, 5, 5};
  CHECK(std::holds_alternative<SpliceInfeasible>(splice_plan(three, 18, 5, {0, false})));
  // A single connector cannot splice a first run.
  const std::vector<std::int64_t> one{5};
  CHECK(std::holds_alternative<SpliceInfeasible>(splice_plan(one, 9, 5, {0, false})));
  CHECK(std::holds_alternative<SplicePlan>(splice_plan(one, 9, 5, {1, false})));
}

TEST_CASE("splice argument errors") {
  const std::vector<std::int64_t> lambdas{3, 3, 3};
  CHECK_THROWS_AS(splice_plan(lambdas, 8, 3), std::invalid_argument);
  CHECK_THROWS_AS(splice_plan(lambdas, 9, 2), std::invalid_argument);
  const std::vector<std::int64_t> zero{0, 3};
  CHECK_THROWS_AS(splice_plan(zero, 9, 3), std::invalid_argument);
  CHECK_THROWS_AS(splice_plan(lambdas, 9, 3, {2, true}), std::invalid_argument);
  CHECK_THROWS_AS(splice_plan(lambdas, 9, 0), std::invalid_argument);
}
