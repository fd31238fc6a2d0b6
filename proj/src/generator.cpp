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

#include <algorithm>
#include <stdexcept>

#include "friction/error.hpp"
#include "friction/market_file.hpp"
#include "friction/measures.hpp"
#include "friction/random.hpp"

namespace friction {

namespace {

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

/// Random non-empty subset of `from` with at most `max_size` elements.
std::vector<std::size_t> pick(std::vector<std::size_t> from, std::size_t max_size, Rng& rng) {
  shuffle(from, rng);
  from.resize(1 + rng.below(max_size));
  std::sort(from.begin(), from.end());
  return from;
}

MarketFile draw(Rng& rng, std::size_t n, std::size_t k) {
  MarketFile file;
  for (std::size_t i = 0; i < n; ++i) file.states.push_back("s" + std::to_string(i + 1));

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::vector<bool> in_core(n, false);
  if (n >= 2 && rng.below(3) == 0) {
    auto core = pick(all, n - 1, rng);
    for (std::size_t s : core) in_core[s] = true;
    // One or two generator sets covering the core.
    if (core.size() >= 2 && rng.coin()) {
      const std::size_t cut = 1 + rng.below(core.size() - 1);
      std::vector<std::string> a, b;
      for (std::size_t i = 0; i < core.size(); ++i) (i < cut ? a : b).push_back(file.states[core[i]]);
      file.negligible = {a, b};
    } else {
      std::vector<std::string> a;
      for (std::size_t s : core) a.push_back(file.states[s]);
      file.negligible = {a};
    }
  }
  std::vector<std::size_t> free_states;
  for (std::size_t s = 0; s < n; ++s) {
    if (!in_core[s]) free_states.push_back(s);
  }

  // Anchor measures live on `support`; the uniform one always among them.
  std::vector<std::size_t> support = free_states;
  if (free_states.size() >= 2 && rng.coin()) support = pick(free_states, free_states.size() - 1, rng);
  std::vector<bool> in_support(n, false);
  for (std::size_t s : support) in_support[s] = true;
  std::vector<std::size_t> outside;
  for (std::size_t s : free_states) {
    if (!in_support[s]) outside.push_back(s);
  }

  std::vector<Measure> anchors;
  anchors.emplace_back(n);
  for (std::size_t s : support) anchors[0][s] = Rational(1, static_cast<std::int64_t>(support.size()));
  const auto extra = rng.between(1, 2);
  for (std::int64_t a = 0; a < extra; ++a) {
    Measure m(n);
    Rational total;
    for (std::size_t s : support) {
      m[s] = rng.between(0, 4);
      total += m[s];
    }
    if (total.is_zero()) continue;
    for (auto& v : m) v /= total;
    anchors.push_back(std::move(m));
  }

  for (std::size_t j = 0; j < k; ++j) {
    AssetSpec a;
    a.name = "A" + std::to_string(j + 1);
    a.payoff.assign(n, Rational(0));
    if (!outside.empty() && rng.below(4) == 0) {
      // Constant payoff plus extra load outside the anchor support.
      const Rational base = rng.between(1, 3);
      for (auto& v : a.payoff) v = base;
      for (std::size_t s : pick(outside, outside.size(), rng)) a.payoff[s] += rng.rational(1, 3, 2);
    } else {
      for (auto& v : a.payoff) v = rng.rational(0, 4, 2);
      const bool positive_on_support = std::any_of(
          support.begin(), support.end(), [&](std::size_t s) { return a.payoff[s].sign() > 0; });
      if (!positive_on_support) a.payoff[support[rng.below(support.size())]] = 1;
    }
    a.ask = integrate(Claim(a.payoff), anchors[0]);
    for (const auto& m : anchors) a.ask = max(a.ask, integrate(Claim(a.payoff), m));
    file.assets.push_back(std::move(a));
  }
  file.strikes = {Strike{Rational(1)}, Strike{Rational(2)}};
  return file;
}

}  // namespace

MarketFile generate_market(std::uint64_t seed, std::size_t n_states, std::size_t k_assets) {
  if (n_states == 0) throw Error(ErrorCode::kInvalidArgument, "at least one state required");
  // Construction makes rejection rare; the loop only guards the invariant.
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + attempt);
    MarketFile file = draw(rng, n_states, k_assets);
    const Market market = to_market(file);
    if (validate(market).accepted() && !PricingPolytope::from_market(market).empty()) return file;
  }
  throw std::logic_error("generate_market: no valid market after 1000 attempts");
}

}  // namespace friction
