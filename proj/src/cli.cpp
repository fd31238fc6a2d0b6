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

#include "friction/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "friction/error.hpp"
#include "friction/market_file.hpp"
#include "friction/report.hpp"

namespace friction {

namespace {

/// Raised for bad flag values that CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Market rejected by validation; carries the report to print.
struct Rejected {
  Json doc;
};

struct Settings {
  bool exact = false;
  bool use_float = false;
  double tolerance = 1e-9;
  std::string format = "human";
  bool serial = false;
  std::size_t budget = 16;
  std::uint64_t seed = 1;
  std::string path;
  std::string claim;

  lp::Options lp() const {
    lp::Options o;
    o.tolerance = tolerance;
    o.arithmetic = mode() == "float" ? lp::Arithmetic::kFloat : lp::Arithmetic::kExact;
    return o;
  }
  std::string mode() const {
    if (exact) return "exact";
    if (use_float) return "float";
    const char* env = std::getenv(kModeEnvironmentVariable);
    if (env == nullptr || std::string(env).empty()) return "exact";
    return env;
  }
  bool machine() const { return format == "machine"; }
  RationalFormat fmt() const { return machine() ? fraction : fraction_and_decimal; }
  Execution execution() const { return serial ? Execution::kSerial : Execution::kParallel; }
};

struct Loaded {
  MarketFile file;
  Market market;
};

Json market_json(const Loaded& m) {
  Json out;
  out["digest"] = market_digest(m.file);
  out["states"] = m.file.states;
  out["core"] = m.market.order().core_labels();
  Json assets = Json::array();
  for (const auto& a : m.market.assets()) assets.push_back(a.name);
  out["assets"] = assets;
  return out;
}

Json header(const std::string& command, const Settings& s, const Loaded& m) {
  Json doc = report_header(command, s.mode());
  doc["market"] = market_json(m);
  return doc;
}

/// Parses and validates the market file. Throws Rejected with the printable
/// validation report when validation fails.
Loaded load(const std::string& command, const Settings& s) {
  MarketFile file = read_market_file(s.path);
  Market market = to_market(file);
  Loaded m{std::move(file), std::move(market)};
  if (command == "validate") return m;
  const ValidationReport v = validate(m.market, 64, s.seed, s.lp());
  if (!v.accepted()) {
    Json doc = header(command, s, m);
    doc["validation"] = validation_json(v, s.fmt());
    throw Rejected{std::move(doc)};
  }
  return m;
}

Claim parse_claim(const Settings& s, std::size_t states) {
  std::vector<Rational> values;
  std::size_t pos = 0;
  while (pos <= s.claim.size()) {
    const std::size_t comma = std::min(s.claim.find(',', pos), s.claim.size());
    const std::string item = s.claim.substr(pos, comma - pos);
    auto v = Rational::parse(item);
    if (!v) throw UsageError("--claim: '" + item + "' is not an exact number");
    values.push_back(*v);
    pos = comma + 1;
  }
  if (values.size() != states) {
    throw UsageError("--claim has " + std::to_string(values.size()) + " values for " +
                     std::to_string(states) + " states");
  }
  return Claim(std::move(values));
}

Json holdings_json(const Market& market, const std::vector<Rational>& z, const RationalFormat& fmt) {
  Json out = Json::object();
  for (std::size_t i = 0; i < z.size(); ++i) out[market.assets()[i].name] = fmt(z[i]);
  return out;
}

Json polytope_json(const Loaded& m, const PricingPolytope& poly, const NpbResult& npb,
                   const RationalFormat& fmt) {
  Json out;
  out["nonempty"] = !poly.empty();
  if (m.market.order().off_core().size() <= 8) {
    Json vs = Json::array();
    for (const auto& v : enumerate_vertices(poly)) vs.push_back(measure_json(v, fmt));
    out["vertices"] = vs;
  } else {
    out["vertices"] = nullptr;
  }
  Json profile = Json::object();
  for (std::size_t i = 0; i < npb.profile.states.size(); ++i) {
    profile[m.market.space().label(npb.profile.states[i])] = fmt(npb.profile.max_mass[i]);
  }
  out["support_profile"] = profile;
  return out;
}

PricingPolytope checked_polytope(const Loaded& m, const Settings& s) {
  PricingPolytope poly = PricingPolytope::from_market(m.market, s.lp());
  if (poly.empty()) {
    throw Error(ErrorCode::kInconsistentMarket, "validated market has an empty pricing polytope");
  }
  return poly;
}

Json run_command(const std::string& command, const Settings& s, std::ostream& err) {
  const RationalFormat fmt = s.fmt();
  const Loaded m = load(command, s);
  Json doc = header(command, s, m);
  const lp::Options opts = s.lp();

  if (command == "validate") {
    const ValidationReport v = validate(m.market, 64, s.seed, opts);
    doc["validation"] = validation_json(v, fmt);
    if (!v.accepted()) throw Rejected{std::move(doc)};
  } else if (command == "analyze") {
    AnalysisOptions ao;
    ao.lp = opts;
    ao.power_budget = s.budget;
    ao.seed = s.seed;
    ao.execution = s.execution();
    const auto start = std::chrono::steady_clock::now();
    const AnalysisReport r = analyze_market(m.file, ao);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    doc["validation"] = validation_json(r.validation, fmt);
    const Json analysis = analysis_json(r, fmt);
    for (const auto& [key, value] : analysis.items()) doc[key] = value;
    // Wall-clock time would break byte-stable machine reports.
    if (!s.machine()) doc["timing"] = {{"seconds", std::to_string(elapsed.count())}};
  } else if (command == "price") {
    const Claim f = parse_claim(s, m.market.num_states());
    doc["claim"] = claim_json(f, fmt);
    if (is_representable(m.market, f, opts)) {
      const PriceQuote q = price(m.market, f, opts);
      doc["representable"] = true;
      doc["method"] = "representation";
      doc["value"] = fmt(q.value);
      doc["witness"] = {{"weights", holdings_json(m.market, q.weights, fmt)},
                        {"numeraire", fmt(q.numeraire)},
                        {"cash", fmt(q.cash)}};
    } else {
      // Outside the traded set the price is its superhedging extension.
      const HedgeQuote q = superhedge_quote(m.market, f, opts);
      doc["representable"] = false;
      doc["method"] = "superhedge";
      doc["value"] = fmt(q.value);
      doc["witness"] = {{"holdings", holdings_json(m.market, q.holdings, fmt)},
                        {"cash", fmt(q.cash)}};
    }
  } else if (command == "superhedge") {
    const Claim g = parse_claim(s, m.market.num_states());
    const HedgeQuote q = superhedge_quote(m.market, g, opts);
    doc["claim"] = claim_json(g, fmt);
    doc["value"] = fmt(q.value);
    doc["witness"] = {{"holdings", holdings_json(m.market, q.holdings, fmt)}, {"cash", fmt(q.cash)}};
  } else if (command == "complete") {
    const Claim f = parse_claim(s, m.market.num_states());
    const HedgeQuote q = completion_quote(m.market, f, opts);
    doc["claim"] = claim_json(f, fmt);
    doc["value"] = fmt(q.value);
    doc["witness"] = {{"holdings", holdings_json(m.market, q.holdings, fmt)},
                      {"cash", fmt(q.cash)},
                      {"shift", fmt(q.shift)}};
  } else if (command == "measures") {
    const PricingPolytope poly = checked_polytope(m, s);
    const NpbResult npb = npb_check(poly, s.execution());
    doc["polytope"] = polytope_json(m, poly, npb, fmt);
    doc["npb"] = {{"verdict", npb.holds ? "holds" : "fails"}};
    doc["pricing_measure"] = certificate_json(pricing_measure(poly), fmt);
    doc["certificate"] = certificate_json(strictly_positive_measure(poly), fmt);
  } else if (command == "power") {
    checked_polytope(m, s);
    const PowerEstimate p = power_lower_bound(PriceOracle::completion(m.market, opts), m.market,
                                              s.budget, s.seed, s.execution());
    const auto linear = linear_completion(m.market, opts);
    doc["seed"] = s.seed;
    doc["completion"] = power_json(p, fmt);
    doc["linear_completion"] = {
        {"present", linear.has_value()},
        {"measure", linear ? measure_json(linear->measure(), fmt) : Json(nullptr)}};
  } else if (command == "extend") {
    const PricingPolytope poly = checked_polytope(m, s);
    Json ext = extension_json(restricted_extension_check(m.market, poly, m.file.strikes,
                                                         s.execution()),
                              m.file.states, fmt);
    Json strikes = Json::array();
    for (const auto& k : m.file.strikes) {
      strikes.push_back(k.is_infinite() ? std::string("inf") : fmt(*k.level));
    }
    ext["strikes"] = strikes;
    doc["extension"] = ext;
  } else {
    err << "error: unknown command '" << command << "'\n";
    throw UsageError("unknown command");
  }
  return doc;
}

void emit(const Json& doc, const Settings& s, std::ostream& out) {
  if (s.machine()) {
    out << doc.dump(2) << '\n';
  } else {
    out << render_human(doc);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sublinear pricing on a finite sample space: validation, superhedging, "
               "pricing measures and market power."};
  app.name("friction");
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  auto* exact = app.add_flag("--exact", s.exact, "Exact rational arithmetic (default)");
  auto* flt = app.add_flag("--float", s.use_float, "Floating-point LPs with tolerance --tol");
  exact->excludes(flt);
  app.add_option("--tol", s.tolerance, "Tolerance in float mode")->check(CLI::PositiveNumber);
  app.add_option("--format", s.format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--serial", s.serial, "Run every kernel on one thread");

  auto market_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("market", s.path, "Market file")->required();
    return c;
  };
  market_cmd("validate", "Check the numeraire price, monotonicity and no arbitrage");
  auto* analyze = market_cmd("analyze", "Full analysis report");
  for (const std::string name : {"price", "superhedge", "complete"}) {
    const std::string help = name == "price"        ? "Price of a claim with its representation"
                             : name == "superhedge" ? "Cheapest superhedge of a claim"
                                                    : "Completion price of a claim";
    market_cmd(name, help)
        ->add_option("--claim", s.claim, "Comma separated payoff, one value per state")
        ->required();
  }
  market_cmd("measures", "Pricing polytope and strictly positive certificate");
  auto* power = market_cmd("power", "Market power lower bound of the completion");
  market_cmd("extend", "Call-overwrite extension check over the file's strike grid");
  for (auto* c : {analyze, power}) {
    c->add_option("--budget", s.budget, "Random probe families")->check(CLI::PositiveNumber);
    c->add_option("--seed", s.seed, "Probe seed");
  }

  std::uint64_t gen_seed = 1;
  std::size_t gen_states = 3, gen_assets = 2;
  auto* gen = app.add_subcommand("gen", "Random valid market file");
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--states", gen_states, "Number of states")->check(CLI::PositiveNumber);
  gen->add_option("--assets", gen_assets, "Number of assets");

  std::string beta_text = "1";
  std::int64_t k_max = 10;
  auto* study = app.add_subcommand("study", "Market power of k-state refinements");
  study->add_option("--beta", beta_text, "Spread coefficient (exact number)");
  study->add_option("--kmax", k_max, "Largest number of states");

  std::vector<const char*> argv{"friction"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  const std::string mode = s.mode();
  if (mode != "exact" && mode != "float") {
    err << "error: " << kModeEnvironmentVariable << " must be 'exact' or 'float', not '" << mode
        << "'\n";
    return kExitInvalidInput;
  }

  try {
    if (gen->parsed()) {
      out << serialize_market_file(generate_market(gen_seed, gen_states, gen_assets));
      return kExitOk;
    }
    if (study->parsed()) {
      const auto beta = Rational::parse(beta_text);
      if (!beta) throw UsageError("--beta: '" + beta_text + "' is not an exact number");
      Json doc = report_header("study", mode);
      doc["beta"] = s.fmt()(*beta);
      Json rows = Json::array();
      for (const auto& row : refinement_study(*beta, k_max)) {
        rows.push_back({{"states", row.states}, {"power", s.fmt()(row.power)}});
      }
      doc["rows"] = rows;
      emit(doc, s, out);
      return kExitOk;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    emit(run_command(command, s, err), s, out);
    return kExitOk;
  } catch (const Rejected& r) {
    emit(r.doc, s, out);
    return kExitRejected;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kParseError:
      case ErrorCode::kDimensionMismatch:
      case ErrorCode::kAllStatesNegligible:
      case ErrorCode::kInvalidPriorFamily:
      case ErrorCode::kInvalidArgument:
      case ErrorCode::kNegativeStrike:
      case ErrorCode::kNegativeClaim:
        return kExitInvalidInput;
      default:
        return kExitInconsistent;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInconsistent;
  }
}

}  // namespace friction
