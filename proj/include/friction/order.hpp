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

// The common order of a finite economy.
//
// On a finite sample space every collection of negligible sets that is
// closed under subsets and finite unions is generated by a single largest
// negligible set, the "core". Together with the robustness axiom
// (f + eps >* 0 for every eps > 0 implies f >=* 0) this pins the order down
// completely:
//
//   f >=* g   iff   f(w) >= g(w) for every state w outside the core.
//
// Orders without the robustness axiom cannot be expressed this way and are
// not modelled.

#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "friction/rational.hpp"

namespace friction {

class SampleSpace {
 public:
  /// Labels must be non-empty and pairwise distinct; at least one state.
  explicit SampleSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Throws Error(kInvalidArgument) for an unknown label.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const SampleSpace&, const SampleSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A payoff over the sample space, in numeraire units.
class Claim {
 public:
  Claim() = default;
  explicit Claim(std::vector<Rational> values) : values_(std::move(values)) {}

  static Claim constant(std::size_t size, const Rational& value);
  static Claim indicator(std::size_t size, std::size_t state);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  Rational& operator[](std::size_t i) { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }

  Claim& operator+=(const Claim& rhs);
  Claim& operator-=(const Claim& rhs);
  Claim& operator*=(const Rational& scale);
  Claim& operator+=(const Rational& shift);

  friend Claim operator+(Claim lhs, const Claim& rhs) { return lhs += rhs; }
  friend Claim operator-(Claim lhs, const Claim& rhs) { return lhs -= rhs; }
  friend Claim operator*(const Rational& s, Claim c) { return c *= s; }
  friend Claim operator+(Claim c, const Rational& t) { return c += t; }

  friend bool operator==(const Claim&, const Claim&) = default;
  friend auto operator<=>(const Claim& a, const Claim& b) { return a.values_ <=> b.values_; }

  std::string to_string() const;

 private:
  std::vector<Rational> values_;
};

/// Pointwise minimum with a constant (a call overwrite at strike k).
Claim wedge(const Claim& f, const Rational& k);
Claim abs(const Claim& f);
Claim pointwise_max(const Claim& f, const Claim& g);
Claim positive_part(const Claim& f);
Rational integrate(const Claim& f, const std::vector<Rational>& measure);

class CommonOrder {
 public:
  /// Throws Error(kAllStatesNegligible) if `core` covers every state.
  CommonOrder(SampleSpace space, std::set<std::size_t> core);

  /// Skips every invariant check. Only for exercising failure reporting
  /// (e.g. a core equal to the whole space).
  static CommonOrder unchecked_for_testing(SampleSpace space, std::set<std::size_t> core);

  const SampleSpace& space() const { return space_; }
  const std::set<std::size_t>& core() const { return core_; }
  bool negligible(std::size_t state) const { return core_.count(state) > 0; }
  /// States outside the core, ascending.
  const std::vector<std::size_t>& off_core() const { return off_core_; }
  std::vector<std::string> core_labels() const;

  friend bool operator==(const CommonOrder& a, const CommonOrder& b) {
    return a.space_ == b.space_ && a.core_ == b.core_;
  }

 private:
  struct Unchecked {};
  CommonOrder(SampleSpace space, std::set<std::size_t> core, Unchecked);

  SampleSpace space_;
  std::set<std::size_t> core_;
  std::vector<std::size_t> off_core_;
};

/// Non-empty list of probability vectors, each with nonnegative entries
/// summing to exactly one.
struct PriorFamily {
  std::vector<std::vector<Rational>> priors;
};

CommonOrder order_from_negligible_sets(const SampleSpace& space,
                                       const std::vector<std::set<std::string>>& generators);

/// Core = states that every prior assigns zero mass.
CommonOrder order_from_priors(const SampleSpace& space, const PriorFamily& family);

/// f >=* g. Throws Error(kDimensionMismatch).
bool dominates(const CommonOrder& order, const Claim& f, const Claim& g);

/// f >* 0: f >=* 0 and not 0 >=* f.
bool strictly_positive(const CommonOrder& order, const Claim& f);

/// Probability uniform off the core and zero on it. Its null sets are exactly
/// the negligible sets, so f >=* g iff P(f < g) = 0.
std::vector<Rational> representing_probability(const CommonOrder& order);

/// Per-family result of check_axioms.
struct AxiomResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Human-readable description of the first failure.
  std::string witness;

  bool passed() const { return failures == 0; }
};

struct AxiomReport {
  /// Fixed order: unit-positive, pointwise, affine, truncation, robust.
  std::vector<AxiomResult> axioms;

  bool all_passed() const;
  const AxiomResult& find(const std::string& name) const;
};

struct ClaimTriple {
  Claim f;
  Claim g;
  Claim h;
};

/// Evaluates the order axioms on the supplied triples and on `random_count`
/// internally generated claims drawn from `seed`:
///   unit-positive  1 >* 0
///   pointwise      f >= g implies f >=* g
///   affine         f >=* g implies b f + h >=* b g + h   (b >= 0, h sampled in [-10, 10])
///   truncation     f >* 0 implies min(f, 1) >* 0
///   robust         f >=* 0 iff f + eps >* 0 for all sampled eps > 0
AxiomReport check_axioms(const CommonOrder& order, const std::vector<ClaimTriple>& samples,
                         std::size_t random_count = 100, std::uint64_t seed = 1);

}  // namespace friction
