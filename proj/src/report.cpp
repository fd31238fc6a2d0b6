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

#include "friction/report.hpp"

#include <algorithm>
#include <sstream>

#include "friction/error.hpp"

namespace friction {

AnalysisReport analyze_market(const MarketFile& file, const AnalysisOptions& opts) {
  const Market market = to_market(file);
  const auto& free_states = market.order().off_core();
  const std::size_t n = market.num_states();

  AnalysisReport r;
  r.digest = market_digest(file);
  r.states = file.states;
  r.core = market.order().core_labels();
  r.strikes = file.strikes;
  r.validation = validate(market, opts.validation_samples, opts.seed, opts.lp);

  const PricingPolytope poly = PricingPolytope::from_market(market, opts.lp);
  r.polytope_nonempty = !poly.empty();
  if (poly.empty()) {
    throw Error(ErrorCode::kInconsistentMarket, "pricing polytope is empty");
  }
  if (free_states.size() <= opts.vertex_limit) r.vertices = enumerate_vertices(poly);
  r.npb = npb_check(poly, opts.execution);

  r.cone_distances.resize(free_states.size());
  r.indicator_completions.resize(free_states.size());
  for_each_index(free_states.size(), opts.execution, [&](std::size_t i) {
    const Claim e = Claim::indicator(n, free_states[i]);
    r.cone_distances[i] = cone_distance(market, e, opts.lp);
    r.indicator_completions[i] = completion_price(market, e, opts.lp);
  });
  r.nflvr = std::all_of(r.cone_distances.begin(), r.cone_distances.end(),
                        [](const ConeDistance& c) { return !c.member(); });

  r.pricing = pricing_measure(poly);
  r.certificate = strictly_positive_measure(poly);
  const MeasureCertificate& basis =
      r.certificate.kind == CertificateKind::kStrictlyPositive ? r.certificate : r.pricing;
  r.markup_measure =
      r.certificate.kind == CertificateKind::kStrictlyPositive ? "strictly-positive" : "pricing";

  r.assets.resize(market.assets().size());
  for_each_index(market.assets().size(), opts.execution, [&](std::size_t i) {
    const Asset& a = market.assets()[i];
    AssetAnalysis& out = r.assets[i];
    out.name = a.name;
    out.ask = a.ask;
    out.price = price(market, a.payoff, opts.lp).value;
    out.cash_additive_part = cash_additive_part(market, a.payoff, opts.lp);
    out.fundamental = fundamental_value_bounds(poly, a.payoff);
    try {
      out.markup = markup(market, basis, a.payoff, opts.lp);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kZeroFundamentalValue) throw;
    }
    out.bubble = bubble(market, poly, a.payoff, file.strikes);
  });

  r.completion_power = power_lower_bound(PriceOracle::completion(market, opts.lp), market,
                                         opts.power_budget, opts.seed, opts.execution);
  r.linear_completion = linear_completion(market, opts.lp).has_value();
  r.extension = restricted_extension_check(market, poly, file.strikes, opts.execution);
  return r;
}

std::string fraction(const Rational& r) { return r.to_string(); }

std::string fraction_and_decimal(const Rational& r) {
  return r.to_string() + " (" + r.to_decimal(6) + ")";
}

Json measure_json(const Measure& m, const RationalFormat& fmt) {
  Json out = Json::array();
  for (const auto& v : m) out.push_back(fmt(v));
  return out;
}

Json claim_json(const Claim& c, const RationalFormat& fmt) { return measure_json(c.values(), fmt); }

Json validation_json(const ValidationReport& v, const RationalFormat& fmt) {
  Json out;
  out["accepted"] = v.accepted();
  out["numeraire_price_ok"] = v.numeraire_price_ok;
  out["numeraire_price"] = fmt(v.numeraire_price);
  Json mon = Json::array();
  for (const auto& m : v.monotonicity_violations) {
    mon.push_back({{"better", m.better_label},
                   {"worse", m.worse_label},
                   {"better_claim", claim_json(m.better, fmt)},
                   {"worse_claim", claim_json(m.worse, fmt)},
                   {"better_price", fmt(m.better_price)},
                   {"worse_price", fmt(m.worse_price)}});
  }
  out["monotonicity_violations"] = mon;
  Json arb = Json::array();
  for (const auto& a : v.arbitrage_violations) {
    arb.push_back({{"claim", a.label}, {"payoff", claim_json(a.claim, fmt)}, {"price", fmt(a.price)}});
  }
  out["arbitrage_violations"] = arb;
  out["messages"] = v.messages;
  return out;
}

namespace {

std::string kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::kPricing:
      return "Pricing";
    case CertificateKind::kStrictlyPositive:
      return "StrictlyPositive";
    case CertificateKind::kEmpty:
      return "Empty";
  }
  return "Empty";
}

Json optional_rational(const std::optional<Rational>& v, const RationalFormat& fmt) {
  return v ? Json(fmt(*v)) : Json(nullptr);
}

Json strikes_json(const std::vector<Strike>& strikes, const RationalFormat& fmt) {
  Json out = Json::array();
  for (const auto& k : strikes) out.push_back(k.is_infinite() ? std::string("inf") : fmt(*k.level));
  return out;
}

}  // namespace

Json certificate_json(const MeasureCertificate& c, const RationalFormat& fmt) {
  Json out;
  out["kind"] = kind_name(c.kind);
  out["measure"] = c.measure ? measure_json(*c.measure, fmt) : Json(nullptr);
  out["floor"] = optional_rational(c.floor, fmt);
  return out;
}

Json extension_json(const RestrictedExtension& e, const std::vector<std::string>&,
                    const RationalFormat& fmt) {
  Json out;
  out["extendable"] = e.extendable;
  out["strictly_positive"] = e.strictly_positive;
  out["common_floor"] = fmt(e.common_floor);
  out["measure"] = e.measure ? measure_json(*e.measure, fmt) : Json(nullptr);
  Json claims = Json::array();
  for (const auto& w : e.claims) {
    claims.push_back(
        {{"claim", claim_json(w.claim, fmt)}, {"sup_truncated_value", fmt(w.sup_truncated_value)}});
  }
  out["claims"] = claims;
  return out;
}

Json power_json(const PowerEstimate& p, const RationalFormat& fmt) {
  Json out;
  out["lower_bound"] = fmt(p.lower_bound);
  Json witness = Json::array();
  for (const auto& c : p.witness) witness.push_back(claim_json(c, fmt));
  out["witness"] = witness;
  out["probe_budget"] = p.probe_budget;
  return out;
}

Json report_header(const std::string& command, const std::string& mode) {
  Json out;
  out["schema"] = kReportSchema;
  out["command"] = command;
  out["mode"] = mode;
  return out;
}

Json analysis_json(const AnalysisReport& r, const RationalFormat& fmt) {
  Json out;
  std::vector<std::string> free_labels;
  for (const auto& s : r.states) {
    if (std::find(r.core.begin(), r.core.end(), s) == r.core.end()) free_labels.push_back(s);
  }

  Json polytope;
  polytope["nonempty"] = r.polytope_nonempty;
  if (r.vertices) {
    Json vs = Json::array();
    for (const auto& v : *r.vertices) vs.push_back(measure_json(v, fmt));
    polytope["vertices"] = vs;
  } else {
    polytope["vertices"] = nullptr;
  }
  Json profile = Json::object();
  for (std::size_t i = 0; i < r.npb.profile.states.size(); ++i) {
    profile[free_labels[i]] = fmt(r.npb.profile.max_mass[i]);
  }
  polytope["support_profile"] = profile;
  out["polytope"] = polytope;

  out["npb"] = {{"verdict", r.npb.holds ? "holds" : "fails"}};

  Json cone = Json::object();
  Json completions = Json::object();
  for (std::size_t i = 0; i < free_labels.size(); ++i) {
    const auto& d = r.cone_distances[i].value;
    cone[free_labels[i]] = d ? fmt(*d) : std::string("-inf");
    completions[free_labels[i]] = fmt(r.indicator_completions[i]);
  }
  out["nflvr"] = {{"verdict", r.nflvr ? "holds" : "fails"},
                  {"cone_distance", cone},
                  {"indicator_completion", completions}};

  out["certificate"] = certificate_json(r.certificate, fmt);
  out["pricing_measure"] = certificate_json(r.pricing, fmt);

  Json assets = Json::array();
  for (const auto& a : r.assets) {
    assets.push_back({{"name", a.name},
                      {"ask", fmt(a.ask)},
                      {"price", fmt(a.price)},
                      {"cash_additive_part", fmt(a.cash_additive_part)},
                      {"fundamental_value",
                       {{"lower", fmt(a.fundamental.lower)}, {"upper", fmt(a.fundamental.upper)}}},
                      {"markup", optional_rational(a.markup, fmt)},
                      {"bubble", fmt(a.bubble)}});
  }
  out["markup_measure"] = r.markup_measure;
  out["assets"] = assets;

  out["power"] = {{"completion", power_json(r.completion_power, fmt)},
                  {"linear_completion", r.linear_completion ? "present" : "absent"}};
  Json ext = extension_json(r.extension, r.states, fmt);
  ext["strikes"] = strikes_json(r.strikes, fmt);
  out["extension"] = ext;
  return out;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool all_scalars(const Json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const Json& j) { return is_scalar(j); });
}

std::string inline_array(const Json& arr) {
  std::string s = "[";
  bool first = true;
  for (const auto& v : arr) {
    if (!first) s += ", ";
    first = false;
    s += v.is_array() ? inline_array(v) : scalar_text(v);
  }
  return s + "]";
}

bool flat_nested(const Json& arr) {
  return std::all_of(arr.begin(), arr.end(),
                     [](const Json& j) { return is_scalar(j) || (j.is_array() && all_scalars(j)); });
}

void render(const Json& node, int indent, std::ostringstream& os);

void render_value(const std::string& prefix, const Json& v, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_scalar(v)) {
    os << pad << prefix << ' ' << scalar_text(v) << '\n';
  } else if (v.is_array() && flat_nested(v)) {
    os << pad << prefix << ' ' << inline_array(v) << '\n';
  } else if (v.empty()) {
    os << pad << prefix << " none\n";
  } else {
    os << pad << prefix << '\n';
    render(v, indent + 2, os);
  }
}

void render(const Json& node, int indent, std::ostringstream& os) {
  if (node.is_object()) {
    for (const auto& [key, v] : node.items()) render_value(key + ":", v, indent, os);
  } else {
    for (const auto& v : node) render_value("-", v, indent, os);
  }
}

}  // namespace

std::string render_human(const Json& doc) {
  std::ostringstream os;
  render(doc, 0, os);
  return os.str();
}

}  // namespace friction
