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

#include "friction/measures.hpp"

#include <algorithm>
#include <set>

#include "friction/error.hpp"

namespace friction {

PricingPolytope PricingPolytope::from_market(const Market& market, const lp::Options& opts) {
  std::vector<Claim> payoffs;
  std::vector<Rational> asks;
  for (const auto& a : market.assets()) {
    payoffs.push_back(a.payoff);
    asks.push_back(a.ask);
  }
  PricingPolytope poly(market.order(), std::move(payoffs), std::move(asks), opts);
  const lp::Solution sol = lp::solve(poly.base_problem(), opts);
  if (sol.optimal()) poly.feasible_point_ = sol.point;
  return poly;
}

PricingPolytope build_polytope(const Market& market, const lp::Options& opts) {
  PricingPolytope poly = PricingPolytope::from_market(market, opts);
  if (poly.empty()) {
    throw Error(ErrorCode::kInconsistentMarket,
                "no pricing measure exists; the market cannot be a valid price system");
  }
  return poly;
}

const Measure& PricingPolytope::feasible_point() const {
  if (!feasible_point_) throw Error(ErrorCode::kEmptyPolytope, "pricing polytope is empty");
  return *feasible_point_;
}

lp::Problem PricingPolytope::base_problem() const {
  const std::size_t n = num_states();
  lp::Problem p;
  for (std::size_t s = 0; s < n; ++s) p.add_variable(0);
  p.add_eq(lp::Row(n, Rational(1)), 1);
  for (std::size_t s : order_.core()) {
    lp::Row row(n);
    row[s] = 1;
    p.add_eq(std::move(row), 0);
  }
  for (std::size_t i = 0; i < payoffs_.size(); ++i) p.add_le(payoffs_[i].values(), asks_[i]);
  return p;
}

bool PricingPolytope::contains(const Measure& m) const {
  return m.size() == num_states() && lp::is_feasible(base_problem(), m);
}

namespace {

void require_nonempty(const PricingPolytope& poly) {
  if (poly.empty()) throw Error(ErrorCode::kEmptyPolytope, "pricing polytope is empty");
}

void require_size(const PricingPolytope& poly, const Claim& x) {
  if (x.size() != poly.num_states()) {
    throw Error(ErrorCode::kDimensionMismatch, "claim does not match the sample space");
  }
}

lp::Solution optimize(const PricingPolytope& poly, const Claim& x, bool maximize) {
  lp::Problem p = poly.base_problem();
  p.objective = x.values();
  const lp::Solution sol = maximize ? lp::maximize(p, poly.options()) : lp::solve(p, poly.options());
  if (!sol.optimal()) throw Error(ErrorCode::kEmptyPolytope, "pricing polytope is empty");
  return sol;
}

/// max eps s.t. m in polytope and row_j . m >= eps for every j.
lp::Solution max_common_floor(const PricingPolytope& poly, const std::vector<lp::Row>& rows) {
  lp::Problem p = poly.base_problem();
  const std::size_t eps = p.add_variable(-1);
  for (const auto& r : rows) {
    lp::Row row = r;
    row.resize(p.num_variables());
    for (auto& v : row) v = -v;
    row[eps] = 1;
    p.add_le(std::move(row), 0);
  }
  return lp::solve(p, poly.options());
}

}  // namespace

Rational attainment_value(const PricingPolytope& polytope, const Claim& x) {
  require_nonempty(polytope);
  require_size(polytope, x);
  return *optimize(polytope, x, true).value;
}

ValueBounds fundamental_value_bounds(const PricingPolytope& polytope, const Claim& x) {
  require_nonempty(polytope);
  require_size(polytope, x);
  return {*optimize(polytope, x, false).value, *optimize(polytope, x, true).value};
}

NpbResult npb_check(const PricingPolytope& polytope, Execution execution) {
  require_nonempty(polytope);
  const auto& states = polytope.order().off_core();
  NpbResult out;
  out.profile.states = states;
  out.profile.max_mass.resize(states.size());
  for_each_index(states.size(), execution, [&](std::size_t i) {
    out.profile.max_mass[i] =
        attainment_value(polytope, Claim::indicator(polytope.num_states(), states[i]));
  });
  out.holds = std::all_of(out.profile.max_mass.begin(), out.profile.max_mass.end(),
                          [](const Rational& v) { return v.sign() > 0; });
  return out;
}

MeasureCertificate pricing_measure(const PricingPolytope& polytope) {
  MeasureCertificate c;
  if (polytope.empty()) return c;
  c.kind = CertificateKind::kPricing;
  c.measure = polytope.feasible_point();
  return c;
}

MeasureCertificate strictly_positive_measure(const PricingPolytope& polytope) {
  require_nonempty(polytope);
  std::vector<lp::Row> rows;
  for (std::size_t s : polytope.order().off_core()) {
    rows.push_back(Claim::indicator(polytope.num_states(), s).values());
  }
  const lp::Solution sol = max_common_floor(polytope, rows);
  MeasureCertificate c;
  if (!sol.optimal()) throw Error(ErrorCode::kEmptyPolytope, "pricing polytope is empty");
  const Rational floor = sol.point.back();
  if (floor.sign() <= 0) return c;
  c.kind = CertificateKind::kStrictlyPositive;
  c.measure = Measure(sol.point.begin(), sol.point.end() - 1);
  c.floor = floor;
  return c;
}

Rational bubble(const Market& market, const PricingPolytope& polytope, const Claim& x,
                const std::vector<Strike>& strike_grid) {
  const Rational pia = cash_additive_part(market, x, polytope.options());
  Rational top = x[0];
  for (std::size_t s = 0; s < x.size(); ++s) top = max(top, x[s]);
  std::vector<Strike> grid = strike_grid;
  grid.push_back(Strike{top});
  grid.push_back(Strike::infinity());
  std::optional<Rational> best;
  for (const auto& k : grid) {
    Claim truncated = x;
    if (!k.is_infinite()) {
      if (k.level->sign() < 0) {
        throw Error(ErrorCode::kNegativeStrike, "strike " + k.level->to_string() + " is negative");
      }
      truncated = wedge(x, *k.level);
    }
    Rational v = attainment_value(polytope, truncated);
    if (!best || *best < v) best = std::move(v);
  }
  return pia - *best;
}

Rational markup(const Market& market, const MeasureCertificate& certificate, const Claim& x,
                const lp::Options& opts) {
  if (!certificate.measure) {
    throw Error(ErrorCode::kInvalidArgument, "certificate carries no measure");
  }
  const Rational fundamental = integrate(x, *certificate.measure);
  if (fundamental.is_zero()) {
    if (x == Claim::constant(x.size(), 0)) return 0;
    throw Error(ErrorCode::kZeroFundamentalValue,
                x.to_string() + " has zero fundamental value under the certificate measure");
  }
  return price(market, x, opts).value / fundamental - 1;
}

RestrictedExtension restricted_extension_check(const Market& market,
                                               const PricingPolytope& polytope,
                                               const std::vector<Strike>& strike_grid,
                                               Execution execution) {
  require_nonempty(polytope);
  const std::size_t n = market.num_states();
  std::vector<Strike> grid = strike_grid;
  std::set<Rational> seen_values;
  for (const auto& a : market.assets()) {
    for (const auto& v : a.payoff.values()) {
      if (v.sign() >= 0 && seen_values.insert(v).second) grid.push_back(Strike{v});
    }
  }
  std::vector<Claim> candidates = call_overwrite_extension(market, grid);
  for (const auto& k : grid) {
    candidates.push_back(k.is_infinite() ? Claim::constant(n, 1)
                                         : Claim::constant(n, min(Rational(1), *k.level)));
  }
  candidates.push_back(Claim::constant(n, 1));

  RestrictedExtension out;
  std::set<Claim> unique;
  for (auto& c : candidates) {
    if (strictly_positive(market.order(), c) && unique.insert(c).second) {
      out.claims.push_back({std::move(c), Rational(0)});
    }
  }
  for_each_index(out.claims.size(), execution, [&](std::size_t i) {
    out.claims[i].sup_truncated_value = attainment_value(polytope, wedge(out.claims[i].claim, 1));
  });
  out.extendable = std::all_of(out.claims.begin(), out.claims.end(),
                               [](const auto& w) { return w.sup_truncated_value.sign() > 0; });

  std::vector<lp::Row> rows;
  for (const auto& w : out.claims) rows.push_back(wedge(w.claim, 1).values());
  const lp::Solution sol = max_common_floor(polytope, rows);
  if (!sol.optimal()) throw Error(ErrorCode::kEmptyPolytope, "pricing polytope is empty");
  out.common_floor = sol.point.back();
  out.strictly_positive = out.common_floor.sign() > 0;
  if (out.strictly_positive) out.measure = Measure(sol.point.begin(), sol.point.end() - 1);
  return out;
}

std::vector<Measure> enumerate_vertices(const PricingPolytope& polytope) {
  const auto& free_states = polytope.order().off_core();
  const std::size_t d = free_states.size();
  if (d > 10) {
    throw Error(ErrorCode::kInvalidArgument, "vertex enumeration limited to 10 free states");
  }
  const std::size_t n = polytope.num_states();

  // Inequalities over the free coordinates: -m_j <= 0, then generator rows.
  std::vector<lp::Row> lhs;
  lp::Row rhs;
  for (std::size_t j = 0; j < d; ++j) {
    lp::Row row(d);
    row[j] = -1;
    lhs.push_back(std::move(row));
    rhs.push_back(0);
  }
  for (std::size_t i = 0; i < polytope.payoffs().size(); ++i) {
    lp::Row row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = polytope.payoffs()[i][free_states[j]];
    lhs.push_back(std::move(row));
    rhs.push_back(polytope.asks()[i]);
  }

  std::set<Measure> vertices;
  const std::size_t rows = lhs.size();
  const std::size_t pick = d - 1;
  std::vector<bool> mask(rows, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(std::min(pick, rows)), true);
  if (pick > rows) return {};
  do {
    std::vector<lp::Row> a{lp::Row(d, Rational(1))};
    lp::Row b{Rational(1)};
    for (std::size_t r = 0; r < rows; ++r) {
      if (!mask[r]) continue;
      a.push_back(lhs[r]);
      b.push_back(rhs[r]);
    }
    const auto sol = lp::solve_square(std::move(a), std::move(b));
    if (!sol) continue;
    bool ok = true;
    for (std::size_t r = 0; r < rows && ok; ++r) ok = lp::dot(lhs[r], *sol) <= rhs[r];
    if (!ok) continue;
    Measure m(n);
    for (std::size_t j = 0; j < d; ++j) m[free_states[j]] = (*sol)[j];
    vertices.insert(std::move(m));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return {vertices.begin(), vertices.end()};
}

}  // namespace friction
