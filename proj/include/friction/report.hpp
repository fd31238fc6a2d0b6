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

// Analysis of a whole market and its rendering as a report document.
// docs/report.md describes the fields; docs/report.schema.json validates the
// machine format.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "friction/market.hpp"
#include "friction/market_file.hpp"
#include "friction/measures.hpp"
#include "friction/parallel.hpp"
#include "friction/power.hpp"

namespace friction {

inline constexpr const char* kReportSchema = "friction-report/1";

using Json = nlohmann::ordered_json;

struct AnalysisOptions {
  lp::Options lp;
  std::size_t validation_samples = 64;
  std::size_t power_budget = 16;
  std::uint64_t seed = 1;
  Execution execution = Execution::kParallel;
  /// Vertices are listed when there are at most this many free states.
  std::size_t vertex_limit = 8;
};

struct AssetAnalysis {
  std::string name;
  Rational ask;
  Rational price;
  Rational cash_additive_part;
  ValueBounds fundamental;
  /// Absent when the measure gives the payoff zero value.
  std::optional<Rational> markup;
  Rational bubble;
};

struct AnalysisReport {
  std::string digest;
  std::vector<std::string> states;
  std::vector<std::string> core;
  ValidationReport validation;
  bool polytope_nonempty = false;
  std::optional<std::vector<Measure>> vertices;
  NpbResult npb;
  std::vector<ConeDistance> cone_distances;  // one per off-core state
  std::vector<Rational> indicator_completions;
  bool nflvr = false;
  MeasureCertificate pricing;
  MeasureCertificate certificate;
  /// "strictly-positive" or "pricing": the measure behind the mark-ups.
  std::string markup_measure;
  std::vector<AssetAnalysis> assets;
  PowerEstimate completion_power;
  bool linear_completion = false;
  RestrictedExtension extension;
  std::vector<Strike> strikes;
};

/// Full analysis of a market that passed validation. Throws
/// Error(kInconsistentMarket) if the pricing polytope is empty.
AnalysisReport analyze_market(const MarketFile& file, const AnalysisOptions& opts = {});

/// Renders a Rational into a report string.
using RationalFormat = std::function<std::string(const Rational&)>;

/// "p/q".
std::string fraction(const Rational& r);
/// "p/q (d.dddddd)".
std::string fraction_and_decimal(const Rational& r);

Json measure_json(const Measure& m, const RationalFormat& fmt);
Json claim_json(const Claim& c, const RationalFormat& fmt);
Json validation_json(const ValidationReport& v, const RationalFormat& fmt);
Json certificate_json(const MeasureCertificate& c, const RationalFormat& fmt);
Json extension_json(const RestrictedExtension& e, const std::vector<std::string>& states,
                    const RationalFormat& fmt);
Json power_json(const PowerEstimate& p, const RationalFormat& fmt);
Json analysis_json(const AnalysisReport& r, const RationalFormat& fmt);

/// Document header shared by every command.
Json report_header(const std::string& command, const std::string& mode);

/// Indented "key: value" rendering for the human format.
std::string render_human(const Json& doc);

}  // namespace friction
