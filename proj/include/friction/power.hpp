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

// Market power of a price functional rho on nonnegative claims:
//
//   power(rho; f_1..f_N) = (sum_i rho(f_i) - rho(sum_i f_i)) / sum_i rho(f_i),
//
// with 0/0 = 0, and power(rho) its supremum over finite families. Zero means
// perfectly competitive (linear) pricing, one an extreme monopoly. The
// supremum has no finite certificate in general, so only lower bounds are
// computed, from structured probes (indicator partitions of the
// non-negligible states, generator positive parts) and seeded random
// families.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "friction/lp.hpp"
#include "friction/market.hpp"
#include "friction/measures.hpp"
#include "friction/parallel.hpp"

namespace friction {

enum class OracleKind { kLinear, kCompletion, kSupSpread };

/// A total price functional on claims.
///   Linear      rho(f) = sum f m
///   Completion  rho(f) = completion_price(market, f)
///   SupSpread   rho(f) = sum f mu + beta * max over non-negligible w of |f(w)|
class PriceOracle {
 public:
  static PriceOracle linear(CommonOrder order, Measure measure);
  static PriceOracle completion(Market market, lp::Options opts = {});
  /// beta must be nonnegative.
  static PriceOracle sup_spread(CommonOrder order, Measure mu, Rational beta);

  OracleKind kind() const { return kind_; }
  const CommonOrder& order() const { return order_; }
  /// Measure of Linear and SupSpread oracles; empty for Completion.
  const Measure& measure() const { return measure_; }
  const Rational& beta() const { return beta_; }

  Rational operator()(const Claim& f) const;

 private:
  PriceOracle(OracleKind kind, CommonOrder order) : kind_(kind), order_(std::move(order)) {}

  OracleKind kind_;
  CommonOrder order_;
  Measure measure_;
  Rational beta_;
  std::optional<Market> market_;
  lp::Options options_;
};

/// Throws Error(kInvalidArgument) for an empty family and
/// Error(kNegativeClaim) when a claim is negative somewhere off the core.
Rational power_at(const PriceOracle& oracle, const std::vector<Claim>& family);

struct PowerEstimate {
  Rational lower_bound;
  std::vector<Claim> witness;
  std::size_t probe_budget = 0;
};

/// Best power_at over the probe families. Ties are broken towards the
/// lexicographically smallest witness, so the result does not depend on the
/// execution mode. Indicator partitions are enumerated exhaustively for up
/// to 10 non-negligible states and sampled beyond that.
PowerEstimate power_lower_bound(const PriceOracle& oracle, const Market& market,
                                std::size_t probe_budget, std::uint64_t seed,
                                Execution execution = Execution::kParallel);

/// The Linear oracle of a strictly positive pricing measure, if one exists.
/// Absent means no cash-additive completion with power below one exists.
std::optional<PriceOracle> linear_completion(const Market& market, const lp::Options& opts = {});

struct StudyRow {
  std::int64_t states;
  Rational power;
};

/// For k = 2..k_max: k equally likely states, a SupSpread oracle with the
/// given beta and the family of the k state indicators. The power of that
/// family is (k - 1) beta / (1 + k beta), increasing to 1.
std::vector<StudyRow> refinement_study(const Rational& beta, std::int64_t k_max);

}  // namespace friction
