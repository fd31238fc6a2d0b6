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

#include "friction/market.hpp"

#include <algorithm>
#include <set>

#include "friction/error.hpp"
#include "friction/random.hpp"

namespace friction {

Market::Market(CommonOrder order, std::vector<Asset> assets)
    : order_(std::move(order)), assets_(std::move(assets)) {
  std::set<std::string> names;
  for (const auto& a : assets_) {
    if (a.name.empty()) throw Error(ErrorCode::kInvalidArgument, "asset with empty name");
    if (!names.insert(a.name).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate asset name '" + a.name + "'");
    }
    if (a.payoff.size() != order_.space().size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "payoff of asset '" + a.name + "' has " + std::to_string(a.payoff.size()) +
                      " entries, expected " + std::to_string(order_.space().size()));
    }
  }
}

Market Market::with_asks(const std::vector<Rational>& asks) const {
  if (asks.size() != assets_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one ask per asset expected");
  }
  std::vector<Asset> repriced = assets_;
  for (std::size_t i = 0; i < asks.size(); ++i) repriced[i].ask = asks[i];
  return Market(order_, std::move(repriced));
}

namespace {

void require_size(const Market& m, const Claim& c) {
  if (c.size() != m.num_states()) {
    throw Error(ErrorCode::kDimensionMismatch, "claim has " + std::to_string(c.size()) +
                                                   " entries, expected " +
                                                   std::to_string(m.num_states()));
  }
}

// Variables: w_1..w_k, s, lambda [, t free].
lp::Problem representation_problem(const Market& m, const Claim& target, bool cash_shift) {
  const std::size_t k = m.assets().size();
  lp::Problem p;
  for (const auto& a : m.assets()) p.add_variable(a.ask);
  const std::size_t s = p.add_variable(1);
  const std::size_t lambda = p.add_variable(1);
  std::optional<std::size_t> t;
  if (cash_shift) t = p.add_variable(-1, std::nullopt);
  for (std::size_t state = 0; state < m.num_states(); ++state) {
    lp::Row row(p.num_variables());
    for (std::size_t i = 0; i < k; ++i) row[i] = m.assets()[i].payoff[state];
    row[s] = 1;
    row[lambda] = 1;
    if (t) row[*t] = -1;
    p.add_eq(std::move(row), target[state]);
  }
  lp::Row budget(p.num_variables());
  for (std::size_t i = 0; i < k; ++i) budget[i] = 1;
  budget[s] = 1;
  p.add_le(std::move(budget), 1);
  return p;
}

// Variables: z_1..z_k, u [, a free]. Constraint sum z X + u - a >= g off the core.
lp::Problem hedge_problem(const Market& m, const Claim& g, bool shift) {
  const std::size_t k = m.assets().size();
  lp::Problem p;
  for (const auto& a : m.assets()) p.add_variable(a.ask);
  const std::size_t u = p.add_variable(1);
  std::optional<std::size_t> a;
  if (shift) a = p.add_variable(-1, std::nullopt);
  for (std::size_t state : m.order().off_core()) {
    lp::Row row(p.num_variables());
    for (std::size_t i = 0; i < k; ++i) row[i] = m.assets()[i].payoff[state];
    row[u] = 1;
    if (a) row[*a] = -1;
    p.add_ge(std::move(row), g[state]);
  }
  return p;
}

HedgeQuote hedge(const Market& m, const Claim& g, bool shift, const lp::Options& opts) {
  require_size(m, g);
  const lp::Problem p = hedge_problem(m, g, shift);
  const lp::Solution sol = lp::solve(p, opts);
  if (sol.status == lp::Status::kUnbounded) {
    throw Error(ErrorCode::kUnboundedBelow,
                shift ? "completion price is unbounded below (no pricing measure exists)"
                      : "superhedging price is unbounded below (negative ask)");
  }
  if (!sol.optimal()) throw Error(ErrorCode::kInconsistentMarket, "hedging LP infeasible");
  const std::size_t k = m.assets().size();
  HedgeQuote q;
  q.value = *sol.value;
  q.holdings.assign(sol.point.begin(), sol.point.begin() + static_cast<std::ptrdiff_t>(k));
  q.cash = sol.point[k];
  if (shift) q.shift = sol.point[k + 1];
  return q;
}

}  // namespace

bool is_representable(const Market& market, const Claim& target, const lp::Options& opts) {
  require_size(market, target);
  return lp::solve(representation_problem(market, target, false), opts).optimal();
}

PriceQuote price(const Market& market, const Claim& target, const lp::Options& opts) {
  require_size(market, target);
  const lp::Solution sol = lp::solve(representation_problem(market, target, false), opts);
  if (!sol.optimal()) {
    throw Error(ErrorCode::kNotRepresentable, target.to_string() + " is not a traded claim");
  }
  const std::size_t k = market.assets().size();
  PriceQuote q;
  q.value = *sol.value;
  q.weights.assign(sol.point.begin(), sol.point.begin() + static_cast<std::ptrdiff_t>(k));
  q.numeraire = sol.point[k];
  q.cash = sol.point[k + 1];
  return q;
}

Rational cash_additive_part(const Market& market, const Claim& target, const lp::Options& opts) {
  if (!is_representable(market, target, opts)) {
    throw Error(ErrorCode::kNotRepresentable, target.to_string() + " is not a traded claim");
  }
  const lp::Solution sol = lp::solve(representation_problem(market, target, true), opts);
  // Portfolio weights are bounded, so the shifted problem is bounded as well.
  if (!sol.optimal()) throw Error(ErrorCode::kInconsistentMarket, "cash-shift LP not optimal");
  return *sol.value;
}

HedgeQuote superhedge_quote(const Market& market, const Claim& g, const lp::Options& opts) {
  return hedge(market, g, false, opts);
}

Rational superhedge(const Market& market, const Claim& g, const lp::Options& opts) {
  return superhedge_quote(market, g, opts).value;
}

HedgeQuote completion_quote(const Market& market, const Claim& f, const lp::Options& opts) {
  return hedge(market, f, true, opts);
}

Rational completion_price(const Market& market, const Claim& f, const lp::Options& opts) {
  return completion_quote(market, f, opts).value;
}

ConeDistance cone_distance(const Market& market, const Claim& f, const lp::Options& opts) {
  require_size(market, f);
  const std::size_t k = market.assets().size();
  lp::Problem p;
  for (std::size_t i = 0; i < k; ++i) p.add_variable(0);
  const std::size_t tau = p.add_variable(1, std::nullopt);
  for (std::size_t state : market.order().off_core()) {
    // f - sum z (X - ask) <= tau
    lp::Row row(p.num_variables());
    for (std::size_t i = 0; i < k; ++i) {
      row[i] = market.assets()[i].ask - market.assets()[i].payoff[state];
    }
    row[tau] = -1;
    p.add_le(std::move(row), -f[state]);
  }
  const lp::Solution sol = lp::solve(p, opts);
  ConeDistance out;
  if (sol.optimal()) {
    out.value = *sol.value;
    out.holdings.assign(sol.point.begin(), sol.point.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out;
}

std::vector<Claim> call_overwrite_extension(const Market& market,
                                            const std::vector<Strike>& strike_grid) {
  std::vector<Rational> finite;
  for (const auto& k : strike_grid) {
    if (k.is_infinite()) continue;
    if (k.level->sign() < 0) {
      throw Error(ErrorCode::kNegativeStrike, "strike " + k.level->to_string() + " is negative");
    }
    finite.push_back(*k.level);
  }
  std::sort(finite.begin(), finite.end());
  finite.erase(std::unique(finite.begin(), finite.end()), finite.end());

  std::vector<Claim> out;
  std::set<Claim> seen;
  auto push = [&](Claim c) {
    if (seen.insert(c).second) out.push_back(std::move(c));
  };
  for (const auto& a : market.assets()) {
    for (const auto& k : finite) push(wedge(a.payoff, k));
    push(a.payoff);
  }
  return out;
}

// ---------------------------------------------------------------------------

ValidationReport validate(const Market& market, std::size_t sample_count, std::uint64_t seed,
                          const lp::Options& opts) {
  // Float solves carry rounding, so comparisons get a scaled slack there.
  const bool exact = opts.arithmetic == lp::Arithmetic::kExact;
  const Rational tol = exact ? Rational(0) : Rational::from_double(opts.tolerance);
  auto slack = [&](const Rational& v) { return tol * max(Rational(1), abs(v)); };
  auto below = [&](const Rational& a, const Rational& b) { return a + slack(b) < b; };

  ValidationReport report;
  const std::size_t n = market.num_states();
  const std::size_t k = market.assets().size();
  const CommonOrder& order = market.order();

  report.numeraire_price = price(market, Claim::constant(n, 1), opts).value;
  report.numeraire_price_ok = abs(report.numeraire_price - 1) <= slack(Rational(1));
  if (!report.numeraire_price_ok) {
    report.messages.push_back("numeraire priced at " + report.numeraire_price.to_string() +
                              " instead of 1; market rejected");
    return report;
  }

  struct Item {
    std::string label;
    Claim claim;
    Rational price;
  };
  std::vector<Item> items;
  auto add = [&](std::string label, Claim c) {
    if (!is_representable(market, c, opts)) return;
    Rational v = price(market, c, opts).value;
    items.push_back({std::move(label), std::move(c), std::move(v)});
  };

  add("0", Claim::constant(n, 0));
  add("1", Claim::constant(n, 1));
  for (const auto& a : market.assets()) {
    add(a.name, a.payoff);
    // Bracketing constants and cash top-ups.
    Rational lo = a.payoff[order.off_core().front()];
    Rational hi = lo;
    for (std::size_t s : order.off_core()) {
      lo = min(lo, a.payoff[s]);
      hi = max(hi, a.payoff[s]);
    }
    if (lo.sign() >= 0) add("const(" + lo.to_string() + ")", Claim::constant(n, lo));
    if (hi.sign() >= 0) add("const(" + hi.to_string() + ")", Claim::constant(n, hi));
    add(a.name + "+1/2", a.payoff + Rational(1, 2));
    add(a.name + "+1", a.payoff + Rational(1));
  }

  Rng rng(seed);
  for (std::size_t i = 0; i < sample_count; ++i) {
    // Weights on the k generators, the numeraire and an unused slot.
    std::vector<std::int64_t> raw(k + 2);
    std::int64_t total = 0;
    for (auto& r : raw) total += (r = rng.between(0, 4));
    if (total == 0) total = 1;
    Rational cash = Rational(raw[k], total);
    if (rng.coin()) cash += rng.rational(0, 2, 4);
    Claim c = Claim::constant(n, cash);
    for (std::size_t j = 0; j < k; ++j) {
      if (raw[j] != 0) c += Rational(raw[j], total) * market.assets()[j].payoff;
    }
    add("sample#" + std::to_string(i), std::move(c));
  }

  for (const auto& it : items) {
    if (strictly_positive(order, it.claim) && !below(Rational(0), it.price)) {
      report.arbitrage_violations.push_back({it.label, it.claim, it.price});
    }
  }
  for (const auto& x : items) {
    for (const auto& y : items) {
      if (&x == &y) continue;
      if (dominates(order, x.claim, y.claim) && below(x.price, y.price)) {
        report.monotonicity_violations.push_back(
            {x.label, y.label, x.claim, y.claim, x.price, y.price});
      }
    }
  }
  if (!report.arbitrage_violations.empty()) {
    report.messages.push_back(std::to_string(report.arbitrage_violations.size()) +
                              " strictly positive claim(s) priced at or below zero");
  }
  if (!report.monotonicity_violations.empty()) {
    report.messages.push_back(std::to_string(report.monotonicity_violations.size()) +
                              " dominated pair(s) priced out of order");
  }
  return report;
}

}  // namespace friction
