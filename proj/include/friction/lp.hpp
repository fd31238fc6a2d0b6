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

// Dense two-phase primal simplex over exact rationals.
//
// Pivoting follows Bland's rule throughout: the entering column is the
// lowest-indexed column with a negative reduced cost, and the leaving row is
// the minimum-ratio row whose basic variable has the lowest index. The rule
// never cycles, so no perturbation is used and identical problems always
// produce identical solutions.
//
// A floating-point mode runs the same algorithm on doubles. Its single
// tolerance only decides signs (entering, ratio test, feasibility); exact
// mode consults no tolerance at all.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "friction/rational.hpp"

namespace friction::lp {

using Row = std::vector<Rational>;

enum class Status { kOptimal, kInfeasible, kUnbounded };

std::string_view status_name(Status status);

enum class Arithmetic { kExact, kFloat };

struct Options {
  Arithmetic arithmetic = Arithmetic::kExact;
  double tolerance = 1e-9;
};

/// minimize objective·x  s.t.  A x <= b,  E x = d,  x_j >= lower_j (or free).
struct Problem {
  Row objective;
  std::vector<Row> ineq_lhs;
  Row ineq_rhs;
  std::vector<Row> eq_lhs;
  Row eq_rhs;
  /// One entry per variable; nullopt marks a free variable. An empty vector
  /// means every variable is bounded below by zero.
  std::vector<std::optional<Rational>> lower;

  std::size_t num_variables() const { return objective.size(); }

  /// Convenience builders; they append and return the new index.
  std::size_t add_variable(Rational cost, std::optional<Rational> lower_bound = Rational(0));
  void add_le(Row lhs, Rational rhs);
  void add_ge(Row lhs, Rational rhs);
  void add_eq(Row lhs, Rational rhs);
};

struct Solution {
  Status status = Status::kInfeasible;
  /// Present iff status == kOptimal.
  std::optional<Rational> value;
  /// Empty unless status == kOptimal.
  std::vector<Rational> point;

  bool optimal() const { return status == Status::kOptimal; }
};

/// Throws Error(kMalformedProblem) on dimension mismatch or zero variables.
Solution solve(const Problem& problem, const Options& options = {});

/// Same as solve with the objective negated; the reported value is the
/// maximum of the original objective.
Solution maximize(const Problem& problem, const Options& options = {});

/// Exact check that `x` satisfies every constraint and bound of `problem`.
bool is_feasible(const Problem& problem, const std::vector<Rational>& x);

Rational dot(const Row& a, const std::vector<Rational>& b);

/// Gaussian elimination over the rationals for a square system. Returns
/// nullopt when the matrix is singular.
std::optional<std::vector<Rational>> solve_square(std::vector<Row> matrix, Row rhs);

}  // namespace friction::lp
