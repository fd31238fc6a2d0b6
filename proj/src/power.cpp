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

#include <algorithm>
#include <map>

#include "friction/error.hpp"
#include "friction/random.hpp"

namespace friction {

PriceOracle PriceOracle::linear(CommonOrder order, Measure measure) {
  if (measure.size() != order.space().size()) {
    throw Error(ErrorCode::kDimensionMismatch, "measure does not match the sample space");
  }
  PriceOracle o(OracleKind::kLinear, std::move(order));
  o.measure_ = std::move(measure);
  return o;
}

PriceOracle PriceOracle::completion(Market market, lp::Options opts) {
  PriceOracle o(OracleKind::kCompletion, market.order());
  o.market_ = std::move(market);
  o.options_ = opts;
  return o;
}

PriceOracle PriceOracle::sup_spread(CommonOrder order, Measure mu, Rational beta) {
  if (mu.size() != order.space().size()) {
    throw Error(ErrorCode::kDimensionMismatch, "measure does not match the sample space");
  }
  if (beta.sign() < 0) throw Error(ErrorCode::kInvalidArgument, "spread coefficient is negative");
  PriceOracle o(OracleKind::kSupSpread, std::move(order));
  o.measure_ = std::move(mu);
  o.beta_ = std::move(beta);
  return o;
}

Rational PriceOracle::operator()(const Claim& f) const {
  switch (kind_) {
    case OracleKind::kLinear:
      return integrate(f, measure_);
    case OracleKind::kCompletion:
      return completion_price(*market_, f, options_);
    case OracleKind::kSupSpread: {
      Rational sup;
      for (std::size_t s : order_.off_core()) sup = max(sup, abs(f[s]));
      return integrate(f, measure_) + beta_ * sup;
    }
  }
  return 0;
}

namespace {

void require_nonnegative(const CommonOrder& order, const Claim& f) {
  if (f.size() != order.space().size()) {
    throw Error(ErrorCode::kDimensionMismatch, "claim does not match the sample space");
  }
  for (std::size_t s : order.off_core()) {
    if (f[s].sign() < 0) {
      throw Error(ErrorCode::kNegativeClaim, f.to_string() + " is negative in state " +
                                                 order.space().label(s));
    }
  }
}

Rational ratio(const Rational& sum_of_prices, const Rational& price_of_sum) {
  if (sum_of_prices.is_zero()) return 0;
  return (sum_of_prices - price_of_sum) / sum_of_prices;
}

/// Distinct claims, evaluated once each.
class ClaimTable {
 public:
  std::size_t intern(const Claim& c) {
    auto [it, inserted] = index_.try_emplace(c, claims_.size());
    if (inserted) claims_.push_back(c);
    return it->second;
  }
  const Claim& claim(std::size_t id) const { return claims_[id]; }
  std::size_t size() const { return claims_.size(); }

 private:
  std::map<Claim, std::size_t> index_;
  std::vector<Claim> claims_;
};

struct Family {
  std::vector<std::size_t> members;
  std::size_t sum;
};

/// Calls visit(block_of) for every set partition of {0..d-1}, encoded as a
/// restricted growth string.
template <class Visit>
void for_each_partition(std::size_t d, Visit&& visit) {
  std::vector<std::size_t> a(d, 0), b(d, 1);  // b[i] = 1 + max(a[0..i-1])
  for (;;) {
    visit(a);
    std::size_t i = d;
    while (i-- > 1) {
      if (a[i] < b[i]) break;
    }
    if (i == 0 || i >= d) return;
    ++a[i];
    for (std::size_t j = i + 1; j < d; ++j) {
      a[j] = 0;
      b[j] = std::max(b[i], a[i] + 1);
    }
  }
}

}  // namespace

Rational power_at(const PriceOracle& oracle, const std::vector<Claim>& family) {
  if (family.empty()) throw Error(ErrorCode::kInvalidArgument, "empty claim family");
  Claim total = Claim::constant(oracle.order().space().size(), 0);
  Rational sum_of_prices;
  for (const auto& f : family) {
    require_nonnegative(oracle.order(), f);
    sum_of_prices += oracle(f);
    total += f;
  }
  return ratio(sum_of_prices, oracle(total));
}

PowerEstimate power_lower_bound(const PriceOracle& oracle, const Market& market,
                                std::size_t probe_budget, std::uint64_t seed,
                                Execution execution) {
  if (probe_budget == 0) throw Error(ErrorCode::kInvalidArgument, "probe budget must be positive");
  const CommonOrder& order = oracle.order();
  const std::size_t n = order.space().size();
  const auto& free_states = order.off_core();
  const std::size_t d = free_states.size();

  ClaimTable table;
  std::vector<Family> families;

  auto block_claim = [&](const std::vector<std::size_t>& block_of, std::size_t block) {
    Claim c = Claim::constant(n, 0);
    for (std::size_t j = 0; j < d; ++j) {
      if (block_of[j] == block) c[free_states[j]] = 1;
    }
    return c;
  };
  auto add_partition = [&](const std::vector<std::size_t>& block_of) {
    std::size_t blocks = 0;
    for (std::size_t b : block_of) blocks = std::max(blocks, b + 1);
    Family fam;
    for (std::size_t b = 0; b < blocks; ++b) fam.members.push_back(table.intern(block_claim(block_of, b)));
    fam.sum = table.intern(block_claim(std::vector<std::size_t>(d, 0), 0));
    families.push_back(std::move(fam));
  };
  auto add_family = [&](const std::vector<Claim>& claims) {
    Family fam;
    Claim total = Claim::constant(n, 0);
    for (const auto& c : claims) {
      require_nonnegative(order, c);
      fam.members.push_back(table.intern(c));
      total += c;
    }
    fam.sum = table.intern(total);
    families.push_back(std::move(fam));
  };

  Rng rng(seed);
  if (d <= 10) {
    for_each_partition(d, add_partition);
  } else {
    for (std::size_t i = 0; i < probe_budget; ++i) {
      std::vector<std::size_t> block_of(d);
      const auto blocks = static_cast<std::int64_t>(rng.between(1, static_cast<std::int64_t>(d)));
      for (auto& b : block_of) b = static_cast<std::size_t>(rng.between(0, blocks - 1));
      // Relabel to a restricted growth string so empty blocks disappear.
      std::map<std::size_t, std::size_t> relabel;
      for (auto& b : block_of) b = relabel.try_emplace(b, relabel.size()).first->second;
      add_partition(block_of);
    }
  }

  if (!market.assets().empty()) {
    std::vector<Claim> parts;
    for (const auto& a : market.assets()) {
      Claim p = positive_part(a.payoff);
      for (std::size_t s : order.core()) p[s] = 0;
      parts.push_back(std::move(p));
    }
    add_family(parts);
  }

  for (std::size_t i = 0; i < probe_budget; ++i) {
    const auto size = static_cast<std::size_t>(rng.between(2, 4));
    std::vector<Claim> claims;
    for (std::size_t j = 0; j < size; ++j) {
      Claim c = Claim::constant(n, 0);
      for (std::size_t s : free_states) c[s] = rng.rational(0, 4, 4);
      claims.push_back(std::move(c));
    }
    add_family(claims);
  }

  std::vector<Rational> values(table.size());
  for_each_index(table.size(), execution,
                 [&](std::size_t i) { values[i] = oracle(table.claim(i)); });

  std::vector<Rational> ratios(families.size());
  for_each_index(families.size(), execution, [&](std::size_t i) {
    Rational sum;
    for (std::size_t id : families[i].members) sum += values[id];
    ratios[i] = ratio(sum, values[families[i].sum]);
  });

  auto witness_of = [&](std::size_t i) {
    std::vector<Claim> w;
    for (std::size_t id : families[i].members) w.push_back(table.claim(id));
    return w;
  };
  auto witness_less = [&](std::size_t i, std::size_t j) {
    return std::lexicographical_compare(
        families[i].members.begin(), families[i].members.end(), families[j].members.begin(),
        families[j].members.end(),
        [&](std::size_t a, std::size_t b) { return table.claim(a) < table.claim(b); });
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < families.size(); ++i) {
    if (ratios[best] < ratios[i] || (ratios[i] == ratios[best] && witness_less(i, best))) {
      best = i;
    }
  }
  return PowerEstimate{ratios[best], witness_of(best), probe_budget};
}

std::optional<PriceOracle> linear_completion(const Market& market, const lp::Options& opts) {
  const PricingPolytope poly = build_polytope(market, opts);
  const MeasureCertificate cert = strictly_positive_measure(poly);
  if (cert.kind != CertificateKind::kStrictlyPositive) return std::nullopt;
  return PriceOracle::linear(market.order(), *cert.measure);
}

std::vector<StudyRow> refinement_study(const Rational& beta, std::int64_t k_max) {
  if (beta.sign() <= 0) throw Error(ErrorCode::kInvalidArgument, "beta must be positive");
  if (k_max < 2) throw Error(ErrorCode::kInvalidArgument, "k_max must be at least 2");
  std::vector<StudyRow> rows;
  for (std::int64_t k = 2; k <= k_max; ++k) {
    std::vector<std::string> labels;
    for (std::int64_t i = 1; i <= k; ++i) labels.push_back("w" + std::to_string(i));
    CommonOrder order(SampleSpace(std::move(labels)), {});
    const auto size = static_cast<std::size_t>(k);
    PriceOracle oracle =
        PriceOracle::sup_spread(order, Measure(size, Rational(1, k)), beta);
    std::vector<Claim> family;
    for (std::size_t s = 0; s < size; ++s) family.push_back(Claim::indicator(size, s));
    rows.push_back({k, power_at(oracle, family)});
  }
  return rows;
}

}  // namespace friction
