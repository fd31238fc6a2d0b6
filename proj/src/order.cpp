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

#include <algorithm>
#include <sstream>

#include "friction/error.hpp"
#include "friction/random.hpp"

namespace friction {

SampleSpace::SampleSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::kInvalidArgument, "sample space has no states");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorCode::kInvalidArgument, "empty state label");
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate state label '" + l + "'");
    }
  }
}

std::size_t SampleSpace::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::kInvalidArgument, "unknown state '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

// ---------------------------------------------------------------------------

Claim Claim::constant(std::size_t size, const Rational& value) {
  return Claim(std::vector<Rational>(size, value));
}

Claim Claim::indicator(std::size_t size, std::size_t state) {
  Claim c = constant(size, Rational(0));
  c[state] = Rational(1);
  return c;
}

namespace {
void require_same_size(const Claim& a, const Claim& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "claims of size " + std::to_string(a.size()) +
                                                   " and " + std::to_string(b.size()));
  }
}
}  // namespace

Claim& Claim::operator+=(const Claim& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < size(); ++i) values_[i] += rhs[i];
  return *this;
}

Claim& Claim::operator-=(const Claim& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < size(); ++i) values_[i] -= rhs[i];
  return *this;
}

Claim& Claim::operator*=(const Rational& scale) {
  for (auto& v : values_) v *= scale;
  return *this;
}

Claim& Claim::operator+=(const Rational& shift) {
  for (auto& v : values_) v += shift;
  return *this;
}

std::string Claim::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << values_[i];
  os << ')';
  return os.str();
}

Claim wedge(const Claim& f, const Rational& k) {
  Claim out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = min(out[i], k);
  return out;
}

Claim abs(const Claim& f) {
  Claim out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = abs(out[i]);
  return out;
}

Claim pointwise_max(const Claim& f, const Claim& g) {
  require_same_size(f, g);
  Claim out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = max(f[i], g[i]);
  return out;
}

Claim positive_part(const Claim& f) { return pointwise_max(f, Claim::constant(f.size(), 0)); }

Rational integrate(const Claim& f, const std::vector<Rational>& measure) {
  if (f.size() != measure.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "claim and measure differ in size");
  }
  Rational out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!measure[i].is_zero()) out += f[i] * measure[i];
  }
  return out;
}

// ---------------------------------------------------------------------------

CommonOrder::CommonOrder(SampleSpace space, std::set<std::size_t> core, Unchecked)
    : space_(std::move(space)), core_(std::move(core)) {
  for (std::size_t i = 0; i < space_.size(); ++i) {
    if (!core_.count(i)) off_core_.push_back(i);
  }
}

CommonOrder::CommonOrder(SampleSpace space, std::set<std::size_t> core)
    : CommonOrder(std::move(space), std::move(core), Unchecked{}) {
  for (std::size_t s : core_) {
    if (s >= space_.size()) throw Error(ErrorCode::kInvalidArgument, "core state out of range");
  }
  if (off_core_.empty()) {
    throw Error(ErrorCode::kAllStatesNegligible,
                "every state is negligible, so 1 >* 0 cannot hold");
  }
}

CommonOrder CommonOrder::unchecked_for_testing(SampleSpace space, std::set<std::size_t> core) {
  return CommonOrder(std::move(space), std::move(core), Unchecked{});
}

std::vector<std::string> CommonOrder::core_labels() const {
  std::vector<std::string> out;
  for (std::size_t s : core_) out.push_back(space_.label(s));
  return out;
}

CommonOrder order_from_negligible_sets(const SampleSpace& space,
                                       const std::vector<std::set<std::string>>& generators) {
  std::set<std::size_t> core;
  for (const auto& g : generators) {
    for (const auto& label : g) core.insert(space.index_of(label));
  }
  return CommonOrder(space, std::move(core));
}

CommonOrder order_from_priors(const SampleSpace& space, const PriorFamily& family) {
  if (family.priors.empty()) {
    throw Error(ErrorCode::kInvalidPriorFamily, "prior family is empty");
  }
  std::vector<bool> charged(space.size(), false);
  for (const auto& p : family.priors) {
    if (p.size() != space.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "prior does not match the sample space");
    }
    Rational total;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].sign() < 0) throw Error(ErrorCode::kInvalidPriorFamily, "negative prior mass");
      if (p[i].sign() > 0) charged[i] = true;
      total += p[i];
    }
    if (total != Rational(1)) {
      throw Error(ErrorCode::kInvalidPriorFamily, "prior sums to " + total.to_string());
    }
  }
  std::set<std::size_t> core;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!charged[i]) core.insert(i);
  }
  return CommonOrder(space, std::move(core));
}

bool dominates(const CommonOrder& order, const Claim& f, const Claim& g) {
  if (f.size() != order.space().size() || g.size() != order.space().size()) {
    throw Error(ErrorCode::kDimensionMismatch, "claim does not match the sample space");
  }
  for (std::size_t s : order.off_core()) {
    if (f[s] < g[s]) return false;
  }
  return true;
}

bool strictly_positive(const CommonOrder& order, const Claim& f) {
  const Claim zero = Claim::constant(order.space().size(), 0);
  return dominates(order, f, zero) && !dominates(order, zero, f);
}

std::vector<Rational> representing_probability(const CommonOrder& order) {
  std::vector<Rational> p(order.space().size());
  const auto k = static_cast<std::int64_t>(order.off_core().size());
  for (std::size_t s : order.off_core()) p[s] = Rational(1, k);
  return p;
}

// ---------------------------------------------------------------------------

bool AxiomReport::all_passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const auto& a) { return a.passed(); });
}

const AxiomResult& AxiomReport::find(const std::string& name) const {
  for (const auto& a : axioms) {
    if (a.name == name) return a;
  }
  throw Error(ErrorCode::kInvalidArgument, "no axiom named '" + name + "'");
}

namespace {

Claim random_claim(Rng& rng, std::size_t n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = rng.rational(-5, 5, 4);
  return Claim(std::move(v));
}

void record(AxiomResult& r, bool ok, const std::string& witness) {
  ++r.checks;
  if (ok) return;
  if (r.failures++ == 0) r.witness = witness;
}

}  // namespace

AxiomReport check_axioms(const CommonOrder& order, const std::vector<ClaimTriple>& samples,
                         std::size_t random_count, std::uint64_t seed) {
  const std::size_t n = order.space().size();
  Rng rng(seed);
  AxiomResult unit, pointwise, affine, truncation, robust;
  unit.name = "unit-positive";
  pointwise.name = "pointwise";
  affine.name = "affine";
  truncation.name = "truncation";
  robust.name = "robust";

  const Claim zero = Claim::constant(n, 0);
  const Claim one = Claim::constant(n, 1);
  record(unit, strictly_positive(order, one), "1 >* 0 fails");

  std::vector<ClaimTriple> triples = samples;
  for (std::size_t i = 0; i < random_count; ++i) {
    Claim g = random_claim(rng, n);
    // f >=* g by construction: nonnegative lift off the core, arbitrary on it.
    Claim f = g;
    for (std::size_t s = 0; s < n; ++s) {
      f[s] = order.negligible(s) ? rng.rational(-5, 5, 4) : g[s] + rng.rational(0, 3, 4);
    }
    triples.push_back({std::move(f), std::move(g), random_claim(rng, n)});
  }

  const std::vector<Rational> eps_grid = {Rational(1), Rational(1, 2), Rational(1, 10),
                                          Rational(1, 1000), Rational(1, 1000000)};

  for (const auto& [f, g, h] : triples) {
    for (const auto& [x, y] : {std::pair{f, g}, std::pair{pointwise_max(f, g), g},
                               std::pair{pointwise_max(h, f), h}}) {
      bool pointwise_ge = true;
      for (std::size_t s = 0; s < n; ++s) pointwise_ge = pointwise_ge && x[s] >= y[s];
      if (pointwise_ge) {
        record(pointwise, dominates(order, x, y), x.to_string() + " >= " + y.to_string());
      }
    }

    if (dominates(order, f, g)) {
      for (int k = 0; k < 3; ++k) {
        const Rational b = rng.rational(0, 10, 4);
        Claim shift = random_claim(rng, n);
        for (std::size_t s = 0; s < n; ++s) shift[s] = shift[s] * 2;  // [-10, 10]
        Claim lhs = f, rhs = g;
        for (std::size_t s = 0; s < n; ++s) {
          lhs[s] = b * f[s] + shift[s];
          rhs[s] = b * g[s] + shift[s];
        }
        record(affine, dominates(order, lhs, rhs),
               "b=" + b.to_string() + " h=" + shift.to_string() + " f=" + f.to_string() +
                   " g=" + g.to_string());
      }
    }

    for (const Claim* c : {&f, &g, &h}) {
      if (strictly_positive(order, *c)) {
        const Claim t = wedge(*c, 1);
        record(truncation, strictly_positive(order, t), "f=" + c->to_string() + " f^1=" + t.to_string());
      }

      std::vector<Rational> eps = eps_grid;
      Rational lowest = 0;
      for (std::size_t s : order.off_core()) lowest = min(lowest, (*c)[s]);
      if (lowest.sign() < 0) eps.push_back(-lowest / 2);
      bool all_shifts_positive = true;
      for (const auto& e : eps) {
        all_shifts_positive = all_shifts_positive && strictly_positive(order, *c + e);
      }
      record(robust, all_shifts_positive == dominates(order, *c, zero),
             "f=" + c->to_string());
    }
  }

  AxiomReport report;
  report.axioms = {unit, pointwise, affine, truncation, robust};
  return report;
}

}  // namespace friction
