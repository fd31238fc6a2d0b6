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

// Pricing measures of a market.
//
// A pricing measure is a probability m on the states with
//
//   m(w) = 0 for every negligible state w,
//   sum_w X_i(w) m(w) <= ask_i for every generator X_i.
//
// The generator rows suffice: integrals are linear and the price of any
// traded claim is the cost of a convex combination of generators plus cash,
// so int X dm <= price(X) on the whole traded set follows. Vanishing on the
// core is imposed explicitly; it is what makes every pricing measure
// monotone for the common order.
//
// On a finite space the usual infinite-dimensional statements collapse to
// LP duality:
//   * sup_m int X dm equals the cash-additive part of the price of X;
//   * "no pure bubble" only needs testing on single-state indicators, since
//     every f >* 0 dominates eps * 1_w for some non-negligible w;
//   * a strictly positive pricing measure exists iff every non-negligible
//     state can carry positive mass (average the per-state maximizers);
//   * bubbles vanish, because min(X, k) = X once k >= max X.

#pragma once

#include <optional>
#include <vector>

#include "friction/lp.hpp"
#include "friction/market.hpp"
#include "friction/parallel.hpp"

namespace friction {

using Measure = std::vector<Rational>;

class PricingPolytope {
 public:
  /// Never throws on emptiness; see build_polytope for the checked variant.
  static PricingPolytope from_market(const Market& market, const lp::Options& opts = {});

  const CommonOrder& order() const { return order_; }
  std::size_t num_states() const { return order_.space().size(); }
  const std::vector<Claim>& payoffs() const { return payoffs_; }
  const std::vector<Rational>& asks() const { return asks_; }
  const lp::Options& options() const { return options_; }

  bool empty() const { return !feasible_point_.has_value(); }
  /// Some feasible measure; throws Error(kEmptyPolytope) when empty.
  const Measure& feasible_point() const;

  /// Variables m_1..m_n with every constraint of the polytope and a zero
  /// objective.
  lp::Problem base_problem() const;

  /// Exact membership test.
  bool contains(const Measure& m) const;

 private:
  PricingPolytope(CommonOrder order, std::vector<Claim> payoffs, std::vector<Rational> asks,
                  lp::Options options)
      : order_(std::move(order)), payoffs_(std::move(payoffs)), asks_(std::move(asks)),
        options_(options) {}

  CommonOrder order_;
  std::vector<Claim> payoffs_;
  std::vector<Rational> asks_;
  lp::Options options_;
  std::optional<Measure> feasible_point_;
};

/// Throws Error(kInconsistentMarket) if no pricing measure exists, which
/// cannot happen for a market that passed validation.
PricingPolytope build_polytope(const Market& market, const lp::Options& opts = {});

/// sup over pricing measures of int X dm. Throws Error(kEmptyPolytope).
Rational attainment_value(const PricingPolytope& polytope, const Claim& x);

struct ValueBounds {
  Rational lower;
  Rational upper;
};

/// Range of the fundamental value int X dm over the polytope.
ValueBounds fundamental_value_bounds(const PricingPolytope& polytope, const Claim& x);

/// Largest mass each non-negligible state can carry.
struct AtomSupportProfile {
  std::vector<std::size_t> states;
  std::vector<Rational> max_mass;
};

struct NpbResult {
  AtomSupportProfile profile;
  /// No pure bubble, equivalently no free lunch with vanishing risk, and a
  /// cash-additive completion exists.
  bool holds = false;
};

NpbResult npb_check(const PricingPolytope& polytope,
                    Execution execution = Execution::kParallel);

enum class CertificateKind { kPricing, kStrictlyPositive, kEmpty };

struct MeasureCertificate {
  CertificateKind kind = CertificateKind::kEmpty;
  std::optional<Measure> measure;
  /// Smallest non-negligible mass; set for kStrictlyPositive.
  std::optional<Rational> floor;
};

/// A pricing measure chosen by the simplex, no positivity claimed.
MeasureCertificate pricing_measure(const PricingPolytope& polytope);

/// Maximizes the smallest non-negligible mass. kStrictlyPositive when that
/// optimum is positive, kEmpty otherwise.
MeasureCertificate strictly_positive_measure(const PricingPolytope& polytope);

/// cash_additive_part(X) - max over k in grid, max X and +infinity of
/// sup_m int min(X, k) dm. Identically zero on a finite space for markets
/// whose cash-additive part is attained. Throws Error(kNotRepresentable).
Rational bubble(const Market& market, const PricingPolytope& polytope, const Claim& x,
                const std::vector<Strike>& strike_grid);

/// alpha(X) = price(X) / int X dm - 1 for the certificate's measure.
/// Throws Error(kZeroFundamentalValue) when int X dm = 0 and X != 0, and
/// Error(kInvalidArgument) for a certificate without a measure.
Rational markup(const Market& market, const MeasureCertificate& certificate, const Claim& x,
                const lp::Options& opts = {});

struct ExtensionWitness {
  Claim claim;
  /// sup over pricing measures of int min(claim, 1) dm.
  Rational sup_truncated_value;
};

struct RestrictedExtension {
  /// Every strictly positive call-overwrite claim keeps a positive truncated
  /// value under some pricing measure.
  bool extendable = false;
  /// A single pricing measure gives all of them positive truncated value.
  bool strictly_positive = false;
  Rational common_floor;
  std::optional<Measure> measure;
  std::vector<ExtensionWitness> claims;
};

/// Runs both checks over the strictly positive claims of the call-overwrite
/// extension. The grid is augmented with every generator payoff value, and
/// the numeraire's truncations are included.
RestrictedExtension restricted_extension_check(const Market& market,
                                               const PricingPolytope& polytope,
                                               const std::vector<Strike>& strike_grid,
                                               Execution execution = Execution::kParallel);

/// Vertices of the polytope, sorted and deduplicated, by exhaustive active
/// set enumeration. Intended for small spaces (at most 10 non-negligible
/// states); throws Error(kInvalidArgument) beyond that.
std::vector<Measure> enumerate_vertices(const PricingPolytope& polytope);

}  // namespace friction
