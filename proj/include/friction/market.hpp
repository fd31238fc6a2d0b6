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

// A one-period market with frictions.
//
// The traded set is generated by a finite list of assets X_1..X_k with ask
// prices, the numeraire 1 (price 1) and the origin:
//
//   T = { sum_i w_i X_i + s + lambda : w >= 0, s >= 0, sum_i w_i + s <= 1, lambda >= 0 }
//
// i.e. the convex hull of generators, numeraire and origin, closed under
// adding nonnegative cash. Positions are convex, not conic: an investor can
// hold at most one unit of the "portfolio simplex", plus any amount of cash.
//
// The price of a traded claim is the cost of its cheapest exact
// representation. That functional is subadditive and homogeneous along rays
// that stay in T by construction. Monotonicity and absence of arbitrage are
// not automatic; `validate` checks them.
//
// Claims outside T are priced through three LP-based extensions:
//   superhedge      min cost of conic holdings z >= 0 plus cash u >= 0 that
//                   dominate g off the negligible core;
//   completion      the same with a free cash shift a subtracted from the
//                   cost (the cash-additive completion);
//   cone distance   min over z >= 0 of the largest off-core value of
//                   f - sum_i z_i (X_i - ask_i); f lies in the uniform closure
//                   of the cone of dominated net payoffs iff this is <= 0.
//
// Relaxing the strictly positive scale of a hedge to z >= 0 is exact: the
// cheapest representation realizes lambda * price(X) for every X, and z = 0
// is the limit of vanishing positions.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "friction/lp.hpp"
#include "friction/order.hpp"
#include "friction/rational.hpp"

namespace friction {

struct Asset {
  std::string name;
  Claim payoff;
  Rational ask;

  friend bool operator==(const Asset&, const Asset&) = default;
};

class Market {
 public:
  /// Throws Error(kDimensionMismatch) on payoff size mismatch and
  /// Error(kInvalidArgument) on empty or duplicate asset names.
  Market(CommonOrder order, std::vector<Asset> assets);

  const CommonOrder& order() const { return order_; }
  const SampleSpace& space() const { return order_.space(); }
  std::size_t num_states() const { return order_.space().size(); }
  const std::vector<Asset>& assets() const { return assets_; }

  /// Same market with the asks replaced (one per asset).
  Market with_asks(const std::vector<Rational>& asks) const;

  friend bool operator==(const Market&, const Market&) = default;

 private:
  CommonOrder order_;
  std::vector<Asset> assets_;
};

/// Cheapest exact representation sum w_i X_i + s + lambda of a traded claim.
struct PriceQuote {
  Rational value;
  std::vector<Rational> weights;  // w, one per asset
  Rational numeraire;             // s
  Rational cash;                  // lambda
};

/// Conic hedge: holdings z >= 0, cash u >= 0 and (completion only) the free
/// cash shift a, so that sum z_i X_i + u >=* claim + a.
struct HedgeQuote {
  Rational value;
  std::vector<Rational> holdings;
  Rational cash;
  Rational shift;
};

struct MonotonicityViolation {
  std::string better_label;
  std::string worse_label;
  Claim better;
  Claim worse;
  Rational better_price;
  Rational worse_price;
};

struct ArbitrageViolation {
  std::string label;
  Claim claim;
  Rational price;
};

struct ValidationReport {
  bool numeraire_price_ok = false;
  Rational numeraire_price;
  std::vector<MonotonicityViolation> monotonicity_violations;
  std::vector<ArbitrageViolation> arbitrage_violations;
  std::vector<std::string> messages;

  bool accepted() const {
    return numeraire_price_ok && monotonicity_violations.empty() && arbitrage_violations.empty();
  }
};

/// Strike of a call overwrite; nullopt level means +infinity (no cap).
struct Strike {
  std::optional<Rational> level;

  static Strike infinity() { return Strike{std::nullopt}; }
  bool is_infinite() const { return !level.has_value(); }
  friend bool operator==(const Strike&, const Strike&) = default;
};

bool is_representable(const Market& market, const Claim& target, const lp::Options& opts = {});

/// Throws Error(kNotRepresentable) when the target is not traded.
PriceQuote price(const Market& market, const Claim& target, const lp::Options& opts = {});

/// Checks price(1) = 1 exactly, then no-arbitrage (X >* 0 implies price > 0)
/// on generators and sampled traded claims, and monotonicity
/// (X >=* Y implies price(X) >= price(Y)) on structured and sampled pairs.
ValidationReport validate(const Market& market, std::size_t sample_count = 64,
                          std::uint64_t seed = 1, const lp::Options& opts = {});

/// inf over t with target + t traded of price(target + t) - t, as one LP
/// with t free. Throws Error(kNotRepresentable).
Rational cash_additive_part(const Market& market, const Claim& target,
                            const lp::Options& opts = {});

HedgeQuote superhedge_quote(const Market& market, const Claim& g, const lp::Options& opts = {});
Rational superhedge(const Market& market, const Claim& g, const lp::Options& opts = {});

/// Throws Error(kUnboundedBelow) when the LP is unbounded, which happens
/// exactly when the pricing-measure polytope is empty.
HedgeQuote completion_quote(const Market& market, const Claim& f, const lp::Options& opts = {});
Rational completion_price(const Market& market, const Claim& f, const lp::Options& opts = {});

struct ConeDistance {
  /// nullopt: the LP is unbounded below (distance is -infinity).
  std::optional<Rational> value;
  std::vector<Rational> holdings;

  bool member() const { return !value || value->sign() <= 0; }
};

ConeDistance cone_distance(const Market& market, const Claim& f, const lp::Options& opts = {});

/// { min(X, k) : X generator, k in grid or +infinity }, grid ascending with
/// +infinity last, duplicates removed. Throws Error(kNegativeStrike).
std::vector<Claim> call_overwrite_extension(const Market& market,
                                            const std::vector<Strike>& strike_grid);

}  // namespace friction
