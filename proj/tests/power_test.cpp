// Copyright 2026 The Friction Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "friction/power.hpp"

#include <gtest/gtest.h>

#include "friction/error.hpp"
#include "friction/random.hpp"
#include "support/markets.hpp"

namespace friction {
namespace {

using testing::claim;
using testing::fixture;

CommonOrder flat(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("w" + std::to_string(i));
  return CommonOrder(SampleSpace(labels), {});
}

Measure uniform(std::size_t k) { return Measure(k, Rational(1, static_cast<std::int64_t>(k))); }

// Independent closed form for the indicator family under SupSpread with
// uniform weights: k (1/k + beta) against 1 + beta.
Rational closed_form(std::int64_t k, const Rational& beta) {
  const Rational sum = Rational(k) * (Rational(1, k) + beta);
  return (sum - (1 + beta)) / sum;
}

TEST(PowerTest, LinearOracleHasNoPower) {
  const auto oracle = PriceOracle::linear(flat(3), uniform(3));
  EXPECT_EQ(power_at(oracle, {claim({1, 0, 2}), claim({0, 3, 1})}), Rational(0));
}

TEST(PowerTest, SupSpreadTwoStates) {
  const auto oracle = PriceOracle::sup_spread(flat(2), uniform(2), 1);
  EXPECT_EQ(oracle(claim({1, 0})), Rational(3, 2));
  EXPECT_EQ(oracle(claim({1, 1})), Rational(2));
  EXPECT_EQ(power_at(oracle, {claim({1, 0}), claim({0, 1})}), Rational(1, 3));
}

TEST(PowerTest, ZeroOverZero) {
  const auto oracle = PriceOracle::sup_spread(flat(2), uniform(2), 1);
  EXPECT_EQ(power_at(oracle, {claim({0, 0})}), Rational(0));
}

TEST(PowerTest, Errors) {
  const auto oracle = PriceOracle::linear(flat(2), uniform(2));
  try {
    power_at(oracle, {claim({1, -1})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeClaim);
  }
  EXPECT_THROW(power_at(oracle, {}), Error);
  EXPECT_THROW(PriceOracle::sup_spread(flat(2), uniform(2), -1), Error);
  EXPECT_THROW(PriceOracle::linear(flat(2), uniform(3)), Error);
  // Negative values on a negligible state are allowed.
  const CommonOrder with_core(SampleSpace({"a", "b"}), {1});
  EXPECT_EQ(power_at(PriceOracle::linear(with_core, {1, 0}), {claim({1, -4})}), Rational(0));
}

TEST(PowerTest, LowerBoundExamples) {
  const auto linear = PriceOracle::linear(flat(3), uniform(3));
  const Market none(flat(3), {});
  EXPECT_EQ(power_lower_bound(linear, none, 8, 1).lower_bound, Rational(0));

  const auto spread = PriceOracle::sup_spread(flat(2), uniform(2), 1);
  const PowerEstimate e = power_lower_bound(spread, Market(flat(2), {}), 8, 1);
  EXPECT_GE(e.lower_bound, Rational(1, 3));
  EXPECT_EQ(power_at(spread, e.witness), e.lower_bound);

  const Market g2 = fixture("G2");
  const auto completion = PriceOracle::completion(g2);
  const PowerEstimate c = power_lower_bound(completion, g2, 16, 1);
  EXPECT_GE(c.lower_bound, Rational(0));
  EXPECT_LT(c.lower_bound, Rational(1));
  EXPECT_EQ(power_at(completion, c.witness), c.lower_bound);
  // Regression value: the two state indicators, (3/5 + 1 - 1) / (3/5 + 1).
  EXPECT_EQ(c.lower_bound, Rational(3, 8));
}

TEST(PowerTest, LinearCompletionExamples) {
  const auto g2 = linear_completion(fixture("G2"));
  ASSERT_TRUE(g2.has_value());
  EXPECT_EQ(g2->measure(), (Measure{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(power_lower_bound(*g2, fixture("G2"), 8, 1).lower_bound, Rational(0));
  EXPECT_FALSE(linear_completion(fixture("G1")).has_value());
  const auto g3 = linear_completion(fixture("G3"));
  ASSERT_TRUE(g3.has_value());
  EXPECT_TRUE(g3->measure()[2].is_zero());
}

TEST(PowerTest, RefinementStudy) {
  const auto rows = refinement_study(1, 10);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows.front().states, 2);
  EXPECT_EQ(rows.front().power, Rational(1, 3));
  for (const auto& r : rows) EXPECT_EQ(r.power, closed_form(r.states, 1));
  EXPECT_EQ(rows.back().power, Rational(9, 11));
  EXPECT_THROW(refinement_study(0, 5), Error);
  EXPECT_THROW(refinement_study(1, 1), Error);
}

TEST(PowerPropertyTest, StudyIncreasesToOne) {
  for (const Rational beta : {Rational(1, 10), Rational(1), Rational(5)}) {
    const auto rows = refinement_study(beta, 60);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].power, rows[i - 1].power);
    EXPECT_LT(rows.back().power, Rational(1));
  }
  EXPECT_GT(refinement_study(1, 50).back().power, Rational(95, 100));
}

Claim random_nonnegative(Rng& rng, std::size_t n) {
  Claim c = Claim::constant(n, 0);
  for (std::size_t s = 0; s < n; ++s) c[s] = rng.rational(0, 3, 4);
  return c;
}

std::vector<Claim> random_family(Rng& rng, std::size_t n) {
  std::vector<Claim> f;
  const auto size = rng.between(1, 4);
  for (std::int64_t i = 0; i < size; ++i) f.push_back(random_nonnegative(rng, n));
  return f;
}

TEST(PowerPropertyTest, LinearOraclesAreCompetitive) {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(5);
    Measure m(n);
    Rational total;
    for (auto& v : m) total += (v = rng.between(0, 3));
    if (total.is_zero()) m[0] = total = 1;
    for (auto& v : m) v /= total;
    EXPECT_EQ(power_at(PriceOracle::linear(flat(n), m), random_family(rng, n)), Rational(0));
  }
}

TEST(PowerPropertyTest, PowerInUnitIntervalAndScaleInvariant) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Market m = testing::random_market(seed);
    const auto oracle = PriceOracle::completion(m);
    Rng rng(seed);
    for (int t = 0; t < 3; ++t) {
      const auto fam = random_family(rng, m.num_states());
      const Rational p = power_at(oracle, fam);
      EXPECT_GE(p, Rational(0));
      EXPECT_LE(p, Rational(1));
      const Rational c = rng.rational(1, 5, 3);
      std::vector<Claim> scaled;
      for (const auto& f : fam) scaled.push_back(c * f);
      EXPECT_EQ(power_at(oracle, scaled), p);
    }
  }
}

TEST(PowerPropertyTest, OraclesSubadditiveAndMonotone) {
  Rng rng(41);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Market m = testing::random_market(seed);
    const std::size_t n = m.num_states();
    const std::vector<PriceOracle> oracles{
        PriceOracle::completion(m), PriceOracle::sup_spread(m.order(), representing_probability(m.order()), 2),
        PriceOracle::linear(m.order(), representing_probability(m.order()))};
    for (const auto& o : oracles) {
      const Claim f = random_nonnegative(rng, n), g = random_nonnegative(rng, n);
      EXPECT_LE(o(f + g), o(f) + o(g));
      EXPECT_GE(o(f + g), o(f));
    }
  }
}

TEST(PowerPropertyTest, CompletabilityThreeWayAgreement) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Market m = testing::random_market(seed);
    const PricingPolytope p = build_polytope(m);
    const bool linear = linear_completion(m).has_value();
    EXPECT_EQ(linear, strictly_positive_measure(p).kind == CertificateKind::kStrictlyPositive);
    EXPECT_EQ(linear, npb_check(p).holds);
  }
}

TEST(PowerPropertyTest, SerialAndParallelAgree) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Market m = testing::random_market(seed);
    const auto oracle = PriceOracle::completion(m);
    const PowerEstimate a = power_lower_bound(oracle, m, 6, seed, Execution::kSerial);
    const PowerEstimate b = power_lower_bound(oracle, m, 6, seed, Execution::kParallel);
    EXPECT_EQ(a.lower_bound, b.lower_bound);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(power_at(oracle, a.witness), a.lower_bound);
  }
}

}  // namespace
}  // namespace friction
