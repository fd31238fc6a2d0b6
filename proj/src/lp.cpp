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

#include "friction/lp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "friction/error.hpp"

namespace friction::lp {

std::string_view status_name(Status status) {
  switch (status) {
    case Status::kOptimal: return "Optimal";
    case Status::kInfeasible: return "Infeasible";
    case Status::kUnbounded: return "Unbounded";
  }
  return "Unknown";
}

std::size_t Problem::add_variable(Rational cost, std::optional<Rational> lower_bound) {
  if (lower.size() < objective.size()) lower.resize(objective.size(), Rational(0));
  objective.push_back(std::move(cost));
  lower.push_back(std::move(lower_bound));
  for (auto& row : ineq_lhs) row.resize(objective.size());
  for (auto& row : eq_lhs) row.resize(objective.size());
  return objective.size() - 1;
}

void Problem::add_le(Row lhs, Rational rhs) {
  lhs.resize(objective.size());
  ineq_lhs.push_back(std::move(lhs));
  ineq_rhs.push_back(std::move(rhs));
}

void Problem::add_ge(Row lhs, Rational rhs) {
  for (auto& v : lhs) v = -v;
  add_le(std::move(lhs), -rhs);
}

void Problem::add_eq(Row lhs, Rational rhs) {
  lhs.resize(objective.size());
  eq_lhs.push_back(std::move(lhs));
  eq_rhs.push_back(std::move(rhs));
}

Rational dot(const Row& a, const std::vector<Rational>& b) {
  Rational out;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) out += a[i] * b[i];
  }
  return out;
}

namespace {

void check_well_formed(const Problem& p) {
  const std::size_t n = p.num_variables();
  if (n == 0) throw Error(ErrorCode::kMalformedProblem, "problem has no variables");
  if (p.ineq_lhs.size() != p.ineq_rhs.size()) {
    throw Error(ErrorCode::kMalformedProblem, "inequality rows and bounds differ in count");
  }
  if (p.eq_lhs.size() != p.eq_rhs.size()) {
    throw Error(ErrorCode::kMalformedProblem, "equality rows and targets differ in count");
  }
  for (const auto& row : p.ineq_lhs) {
    if (row.size() != n) {
      throw Error(ErrorCode::kMalformedProblem,
                  "inequality row of width " + std::to_string(row.size()) + ", expected " +
                      std::to_string(n));
    }
  }
  for (const auto& row : p.eq_lhs) {
    if (row.size() != n) {
      throw Error(ErrorCode::kMalformedProblem,
                  "equality row of width " + std::to_string(row.size()) + ", expected " +
                      std::to_string(n));
    }
  }
  if (!p.lower.empty() && p.lower.size() != n) {
    throw Error(ErrorCode::kMalformedProblem, "lower-bound vector has the wrong width");
  }
}

struct ExactCompare {
  bool negative(const Rational& x) const { return x.sign() < 0; }
  bool positive(const Rational& x) const { return x.sign() > 0; }
  bool zero(const Rational& x) const { return x.is_zero(); }
  bool less(const Rational& a, const Rational& b) const { return a < b; }
};

struct FloatCompare {
  double tol;
  bool negative(double x) const { return x < -tol; }
  bool positive(double x) const { return x > tol; }
  bool zero(double x) const { return std::fabs(x) <= tol; }
  bool less(double a, double b) const { return a < b - tol; }
};

double to_field(const Rational& r, double) { return r.to_double(); }
Rational to_field(const Rational& r, const Rational&) { return r; }

/// Maps an original variable to one or two nonnegative standard-form columns.
struct ColumnMap {
  std::size_t plus;
  std::optional<std::size_t> minus;  // set for free variables
  Rational shift;                    // lower bound, zero for free variables
};

template <class T, class Cmp>
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols, Cmp cmp)
      : rows_(rows), cols_(cols), a_(rows * (cols + 1)), cost_(cols + 1), basis_(rows),
        blocked_(cols, false), cmp_(cmp) {}

  T& at(std::size_t r, std::size_t c) { return a_[r * (cols_ + 1) + c]; }
  const T& at(std::size_t r, std::size_t c) const { return a_[r * (cols_ + 1) + c]; }
  T& rhs(std::size_t r) { return at(r, cols_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::vector<T>& cost() { return cost_; }
  void block(std::size_t c) { blocked_[c] = true; }

  void pivot(std::size_t r, std::size_t c) {
    const T piv = at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const T factor = at(i, c);
      if (cmp_.zero(factor)) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!cmp_.zero(at(r, j))) at(i, j) -= factor * at(r, j);
      }
    }
    const T factor = cost_[c];
    if (!cmp_.zero(factor)) {
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!cmp_.zero(at(r, j))) cost_[j] -= factor * at(r, j);
      }
    }
    basis_[r] = c;
  }

  /// Runs Bland-rule pivots until optimal (true) or unbounded (false).
  bool run() {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!blocked_[j] && cmp_.negative(cost_[j])) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      const std::size_t c = *enter;
      std::optional<std::size_t> leave;
      T best{};
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!cmp_.positive(at(i, c))) continue;
        T ratio = at(i, cols_) / at(i, c);
        if (!leave || cmp_.less(ratio, best) ||
            (!cmp_.less(best, ratio) && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, c);
    }
  }

  void remove_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> a_;
  std::vector<T> cost_;
  std::vector<std::size_t> basis_;
  std::vector<bool> blocked_;
  Cmp cmp_;
};

template <class T, class Cmp>
Solution solve_impl(const Problem& p, Cmp cmp) {
  const std::size_t n = p.num_variables();
  const T unit = to_field(Rational(1), T{});

  std::vector<ColumnMap> map;
  std::size_t ny = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const bool free_var = !p.lower.empty() && !p.lower[j].has_value();
    ColumnMap m{ny++, std::nullopt, Rational(0)};
    if (free_var) {
      m.minus = ny++;
    } else if (!p.lower.empty()) {
      m.shift = *p.lower[j];
    }
    map.push_back(m);
  }

  const std::size_t n_ineq = p.ineq_lhs.size();
  const std::size_t n_eq = p.eq_lhs.size();
  const std::size_t m_rows = n_ineq + n_eq;
  const std::size_t slack0 = ny;
  const std::size_t n_struct = ny + n_ineq;

  // Assemble rows in standard form with a nonnegative right-hand side.
  std::vector<std::vector<T>> rows(m_rows, std::vector<T>(n_struct + 1));
  std::vector<bool> slack_basic(m_rows, false);
  auto fill = [&](std::size_t r, const Row& lhs, const Rational& b, bool with_slack) {
    Rational rhs = b;
    for (std::size_t j = 0; j < n; ++j) {
      if (lhs[j].is_zero()) continue;
      rhs -= lhs[j] * map[j].shift;
      rows[r][map[j].plus] = to_field(lhs[j], T{});
      if (map[j].minus) rows[r][*map[j].minus] = to_field(-lhs[j], T{});
    }
    if (with_slack) rows[r][slack0 + r] = unit;
    rows[r][n_struct] = to_field(rhs, T{});
    if (rhs.sign() < 0) {
      for (auto& v : rows[r]) v = -v;
    } else if (with_slack) {
      slack_basic[r] = true;
    }
  };
  for (std::size_t i = 0; i < n_ineq; ++i) fill(i, p.ineq_lhs[i], p.ineq_rhs[i], true);
  for (std::size_t i = 0; i < n_eq; ++i) fill(n_ineq + i, p.eq_lhs[i], p.eq_rhs[i], false);

  std::size_t n_art = 0;
  for (std::size_t r = 0; r < m_rows; ++r) n_art += slack_basic[r] ? 0 : 1;
  const std::size_t n_cols = n_struct + n_art;

  Tableau<T, Cmp> tab(m_rows, n_cols, cmp);
  {
    std::size_t art = n_struct;
    for (std::size_t r = 0; r < m_rows; ++r) {
      for (std::size_t j = 0; j < n_struct; ++j) tab.at(r, j) = rows[r][j];
      tab.rhs(r) = rows[r][n_struct];
      if (slack_basic[r]) {
        tab.basis()[r] = slack0 + r;
      } else {
        tab.at(r, art) = unit;
        tab.basis()[r] = art++;
      }
    }
  }

  // Phase 1: minimize the sum of artificials.
  if (n_art > 0) {
    auto& cost = tab.cost();
    for (auto& v : cost) v = T{};
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      if (tab.basis()[r] < n_struct) continue;
      for (std::size_t j = 0; j < n_struct; ++j) cost[j] -= tab.at(r, j);
      cost[n_cols] -= tab.rhs(r);
    }
    tab.run();  // bounded below by zero
    if (cmp.negative(tab.cost()[n_cols])) return Solution{Status::kInfeasible, std::nullopt, {}};
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = 0; r < tab.rows();) {
      if (tab.basis()[r] < n_struct) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_struct; ++j) {
        if (!cmp.zero(tab.at(r, j))) {
          col = j;
          break;
        }
      }
      if (col) {
        tab.pivot(r, *col);
        ++r;
      } else {
        tab.remove_row(r);  // redundant equality
      }
    }
    for (std::size_t j = n_struct; j < n_cols; ++j) tab.block(j);
  }

  // Phase 2.
  std::vector<T> c(n_cols + 1);
  for (std::size_t j = 0; j < n; ++j) {
    c[map[j].plus] = to_field(p.objective[j], T{});
    if (map[j].minus) c[*map[j].minus] = to_field(-p.objective[j], T{});
  }
  auto& cost = tab.cost();
  cost = c;
  cost[n_cols] = T{};
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    const T cb = c[tab.basis()[r]];
    if (cmp.zero(cb)) continue;
    for (std::size_t j = 0; j <= n_cols; ++j) {
      if (!cmp.zero(tab.at(r, j))) cost[j] -= cb * tab.at(r, j);
    }
  }
  if (!tab.run()) return Solution{Status::kUnbounded, std::nullopt, {}};

  std::vector<T> y(n_cols);
  for (std::size_t r = 0; r < tab.rows(); ++r) y[tab.basis()[r]] = tab.rhs(r);

  Solution out;
  out.status = Status::kOptimal;
  out.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    if constexpr (std::is_same_v<T, Rational>) {
      Rational v = y[map[j].plus];
      if (map[j].minus) v -= y[*map[j].minus];
      out.point[j] = v + map[j].shift;
    } else {
      double v = y[map[j].plus];
      if (map[j].minus) v -= y[*map[j].minus];
      out.point[j] = Rational::from_double(v) + map[j].shift;
    }
  }
  out.value = dot(p.objective, out.point);
  return out;
}

}  // namespace

bool is_feasible(const Problem& p, const std::vector<Rational>& x) {
  if (x.size() != p.num_variables()) return false;
  for (std::size_t i = 0; i < p.ineq_lhs.size(); ++i) {
    if (dot(p.ineq_lhs[i], x) > p.ineq_rhs[i]) return false;
  }
  for (std::size_t i = 0; i < p.eq_lhs.size(); ++i) {
    if (dot(p.eq_lhs[i], x) != p.eq_rhs[i]) return false;
  }
  for (std::size_t j = 0; j < p.lower.size(); ++j) {
    if (p.lower[j] && x[j] < *p.lower[j]) return false;
  }
  if (p.lower.empty()) {
    for (const auto& v : x) {
      if (v.sign() < 0) return false;
    }
  }
  return true;
}

Solution solve(const Problem& problem, const Options& options) {
  check_well_formed(problem);
  if (options.arithmetic == Arithmetic::kFloat) {
    return solve_impl<double>(problem, FloatCompare{options.tolerance});
  }
  Solution out = solve_impl<Rational>(problem, ExactCompare{});
  if (out.optimal() && !is_feasible(problem, out.point)) {
    throw std::logic_error("simplex returned an infeasible point");
  }
  return out;
}

Solution maximize(const Problem& problem, const Options& options) {
  Problem negated = problem;
  for (auto& c : negated.objective) c = -c;
  Solution out = solve(negated, options);
  if (out.value) out.value = -*out.value;
  return out;
}

std::optional<std::vector<Rational>> solve_square(std::vector<Row> a, Row b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace friction::lp
