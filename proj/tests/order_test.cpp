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

#include "friction/order.hpp"

#include <gtest/gtest.h>

#include "friction/error.hpp"
#include "friction/random.hpp"

namespace friction {
namespace {

SampleSpace abc() { return SampleSpace({"a", "b", "c"}); }

Claim C(std::vector<Rational> v) { return Claim(std::move(v)); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(OrderTest, CoreFromGenerators) {
  EXPECT_EQ(order_from_negligible_sets(abc(), {{"c"}}).core(), (std::set<std::size_t>{2}));
  EXPECT_EQ(code_of([] { order_from_negligible_sets(abc(), {{"a"}, {"b"}, {"c"}}); }),
            ErrorCode::kAllStatesNegligible);
  const SampleSpace abcd({"a", "b", "c", "d"});
  EXPECT_EQ(order_from_negligible_sets(abcd, {{"c"}, {"d"}}).core(), (std::set<std::size_t>{2, 3}));
  EXPECT_EQ(code_of([] { order_from_negligible_sets(abc(), {{"z"}}); }), ErrorCode::kInvalidArgument);
}

TEST(OrderTest, CoreFromPriors) {
  const Rational h(1, 2), t(1, 3);
  EXPECT_EQ(order_from_priors(abc(), {{{h, h, 0}}}).core(), (std::set<std::size_t>{2}));
  EXPECT_EQ(order_from_priors(abc(), {{{1, 0, 0}, {0, 1, 0}}}).core(), (std::set<std::size_t>{2}));
  EXPECT_TRUE(order_from_priors(abc(), {{{t, t, t}}}).core().empty());
  EXPECT_EQ(code_of([&] { order_from_priors(abc(), {{{h, h, h}}}); }),
            ErrorCode::kInvalidPriorFamily);
  EXPECT_EQ(code_of([&] { order_from_priors(abc(), {{}}); }), ErrorCode::kInvalidPriorFamily);
}

TEST(OrderTest, Dominates) {
  const CommonOrder plain(SampleSpace({"u", "d"}), {});
  const CommonOrder with_c(abc(), {2});
  EXPECT_TRUE(dominates(with_c, C({1, 2, 3}), C({1, 2, 3})));
  EXPECT_TRUE(dominates(with_c, C({0, 0, -5}), C({0, 0, 0})));
  EXPECT_FALSE(dominates(plain, C({1, -1}), C({0, 0})));
  EXPECT_EQ(code_of([&] { dominates(plain, C({1}), C({0, 0})); }), ErrorCode::kDimensionMismatch);
}

TEST(OrderTest, StrictlyPositive) {
  const CommonOrder with_c(abc(), {2});
  EXPECT_FALSE(strictly_positive(with_c, C({0, 0, 0})));
  EXPECT_TRUE(strictly_positive(with_c, C({1, 0, -3})));
  EXPECT_FALSE(strictly_positive(with_c, C({0, 0, 7})));
}

TEST(OrderTest, RepresentingProbability) {
  const Rational h(1, 2);
  EXPECT_EQ(representing_probability(CommonOrder(abc(), {2})), (std::vector<Rational>{h, h, 0}));
  EXPECT_EQ(representing_probability(CommonOrder(SampleSpace({"a", "b"}), {})),
            (std::vector<Rational>{h, h}));
}

TEST(OrderTest, AxiomsPassOnValidOrder) {
  const CommonOrder with_c(abc(), {2});
  const AxiomReport r = check_axioms(with_c, {{C({1, 0, -3}), C({0, 0, 0}), C({2, 2, 2})}});
  ASSERT_EQ(r.axioms.size(), 5u);
  EXPECT_TRUE(r.all_passed());
  for (const auto& a : r.axioms) EXPECT_GT(a.checks, 0u) << a.name;
  EXPECT_EQ(wedge(C({1, 0, -3}), 1), C({1, 0, -3}));
  EXPECT_TRUE(strictly_positive(with_c, wedge(C({1, 0, -3}), 1)));
}

TEST(OrderTest, CorruptedOrderFailsUnitPositivity) {
  const auto broken = CommonOrder::unchecked_for_testing(abc(), {0, 1, 2});
  const AxiomReport r = check_axioms(broken, {});
  EXPECT_FALSE(r.find("unit-positive").passed());
  EXPECT_FALSE(r.find("unit-positive").witness.empty());
}

Claim random_claim(Rng& rng, std::size_t n) {
  Claim c = Claim::constant(n, 0);
  for (std::size_t s = 0; s < n; ++s) c[s] = rng.rational(-3, 3, 3);
  return c;
}

CommonOrder random_order(Rng& rng) {
  const std::size_t n = 1 + rng.below(6);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i));
  std::set<std::size_t> core;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (rng.coin()) core.insert(i);
  }
  return CommonOrder(SampleSpace(labels), core);
}

TEST(OrderPropertyTest, ReflexiveAndTransitive) {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    const CommonOrder o = random_order(rng);
    const std::size_t n = o.space().size();
    for (int k = 0; k < 40; ++k) {
      const Claim f = random_claim(rng, n);
      Claim g = f, h = f;
      for (std::size_t s = 0; s < n; ++s) {
        g[s] -= rng.rational(0, 2, 2);
        h[s] = g[s] - rng.rational(0, 2, 2);
      }
      EXPECT_TRUE(dominates(o, f, f));
      ASSERT_TRUE(dominates(o, f, g));
      ASSERT_TRUE(dominates(o, g, h));
      EXPECT_TRUE(dominates(o, f, h));
    }
  }
}

TEST(OrderPropertyTest, StrictPositivityIsAsymmetricPart) {
  Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    const CommonOrder o = random_order(rng);
    const Claim zero = Claim::constant(o.space().size(), 0);
    for (int k = 0; k < 40; ++k) {
      Claim f = random_claim(rng, o.space().size());
      if (rng.coin()) f = positive_part(f);
      EXPECT_EQ(strictly_positive(o, f), dominates(o, f, zero) && !dominates(o, zero, f));
      if (dominates(o, f, zero)) EXPECT_TRUE(dominates(o, f, abs(f)));
    }
  }
}

TEST(OrderPropertyTest, PriorNullStatesAreTheCore) {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const CommonOrder o = random_order(rng);
    const std::size_t n = o.space().size();
    // Priors built on random subsets of the free states.
    std::vector<std::vector<Rational>> priors;
    std::set<std::size_t> charged;
    for (int p = 0; p < 3; ++p) {
      std::vector<Rational> w(n);
      Rational total;
      for (std::size_t s : o.off_core()) {
        if (rng.coin() || (p == 2 && !charged.count(s))) {
          w[s] = 1 + rng.below(3);
          total += w[s];
          charged.insert(s);
        }
      }
      if (total.is_zero()) continue;
      for (auto& v : w) v /= total;
      priors.push_back(w);
    }
    const CommonOrder from = order_from_priors(o.space(), {priors});
    EXPECT_EQ(from.core(), o.core());
    const auto p = representing_probability(from);
    for (std::size_t s = 0; s < n; ++s) EXPECT_EQ(p[s].is_zero(), from.negligible(s));
  }
}

}  // namespace
}  // namespace friction
