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

// Line-oriented market files. See docs/format.md for the grammar.
//
//   friction-market 1
//   states u d c
//   negligible c
//   asset A ask 6/5 payoff 2 0 0
//   prior 1/2 1/2 0
//   strikes 1 2 inf

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "friction/market.hpp"

namespace friction {

inline constexpr int kMarketFileVersion = 1;

struct AssetSpec {
  std::string name;
  Rational ask;
  std::vector<Rational> payoff;

  friend bool operator==(const AssetSpec&, const AssetSpec&) = default;
};

struct MarketFile {
  int version = kMarketFileVersion;
  std::vector<std::string> states;
  /// Generator sets of the negligible ideal, as written.
  std::vector<std::vector<std::string>> negligible;
  std::vector<AssetSpec> assets;
  std::vector<std::vector<Rational>> priors;
  std::vector<Strike> strikes;

  friend bool operator==(const MarketFile&, const MarketFile&) = default;
};

/// Throws ParseError with line and field context.
MarketFile parse_market_file(std::string_view text);
MarketFile read_market_file(const std::string& path);

/// Canonical text; parse_market_file(serialize_market_file(f)) == f.
std::string serialize_market_file(const MarketFile& file);

/// The negligible core is the union of the generator sets and, when priors
/// are given, of the states every prior leaves uncharged.
Market to_market(const MarketFile& file);

/// FNV-1a 64 of the canonical text, as 16 hex digits.
std::string market_digest(const MarketFile& file);

/// Random market that passes validation and has a nonempty pricing
/// polytope. Identical seeds give identical files on every platform.
///
/// Payoffs are small nonnegative rationals. Asks are the largest integral of
/// the payoff over a few anchor measures supported on a random set of
/// non-negligible states (the uniform one among them), so every ask is at
/// least the uniform integral and the cash-additive part of each generator
/// is attained by a pricing measure. When the support set is proper, some
/// assets load extra payoff outside it at the same ask, which can rule out
/// strictly positive pricing measures.
MarketFile generate_market(std::uint64_t seed, std::size_t n_states, std::size_t k_assets);

}  // namespace friction
