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

// Acceptance checks. Prints one PASS/FAIL line per check and exits nonzero
// if any fails. `--only NAME` runs a single check. Every comparison is exact
// except the stated 0.95 power threshold.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "friction/cli.hpp"
#include "friction/measures.hpp"
#include "friction/power.hpp"
#include "friction/random.hpp"
#include "support/markets.hpp"

namespace friction {
namespace {

constexpr std::uint64_t kCorpusSize = 200;
const std::vector<std::string> kGolden{"G1", "G2", "G3"};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

struct Check {
  std::string name;
  std::string title;
  std::function<void(Outcome&)> run;
};

const std::vector<Market>& corpus() {
  static const std::vector<Market> markets = [] {
    std::vector<Market> out;
    for (std::uint64_t seed = 1; seed <= kCorpusSize; ++seed) {
      out.push_back(testing::random_market(seed));
    }
    return out;
  }();
  return markets;
}

std::vector<Market> corpus_and_fixtures() {
  std::vector<Market> all = corpus();
  for (const auto& g : kGolden) all.push_back(testing::fixture(g));
  return all;
}

std::string str(const Rational& r) { return r.to_string(); }

void exact_duality(Outcome& o) {
  std::size_t generators = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const Market& m = corpus()[i];
    const PricingPolytope p = build_polytope(m);
    for (const auto& a : m.assets()) {
      ++generators;
      const Rational pia = cash_additive_part(m, a.payoff);
      const Rational att = attainment_value(p, a.payoff);
      o.expect(pia == att, "seed " + std::to_string(i + 1) + " asset " + a.name + ": " + str(pia) +
                               " vs " + str(att));
    }
  }
  o.detail << corpus().size() << " markets, " << generators << " generators, gap tolerance 0";
}

void nflvr_equivalence(Outcome& o) {
  std::size_t holds = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const Market& m = corpus()[i];
    const PricingPolytope p = build_polytope(m);
    bool cone = true, completion = true;
    for (std::size_t s : m.order().off_core()) {
      const Claim e = Claim::indicator(m.num_states(), s);
      const ConeDistance d = cone_distance(m, e);
      cone = cone && d.value && d.value->sign() > 0;
      completion = completion && completion_price(m, e).sign() > 0;
    }
    const bool npb = npb_check(p).holds;
    holds += npb ? 1 : 0;
    o.expect(cone == completion && completion == npb,
             "seed " + std::to_string(i + 1) + " disagrees");
  }
  o.detail << corpus().size() << " markets, " << holds << " with the property, "
           << corpus().size() - holds << " without";
}

void completion_collapse(Outcome& o) {
  const auto markets = corpus_and_fixtures();
  std::size_t completable = 0;
  for (std::size_t i = 0; i < markets.size(); ++i) {
    const Market& m = markets[i];
    const PricingPolytope p = build_polytope(m);
    const bool npb = npb_check(p).holds;
    const bool positive = strictly_positive_measure(p).kind == CertificateKind::kStrictlyPositive;
    const bool linear = linear_completion(m).has_value();
    completable += linear ? 1 : 0;
    o.expect(npb == positive && positive == linear, "market #" + std::to_string(i + 1));
  }
  o.detail << markets.size() << " markets (corpus and G1-G3), " << completable << " completable";
}

void golden_fixtures(Outcome& o) {
  using testing::claim;
  const Rational half(1, 2);
  {
    const Market g1 = testing::fixture("G1");
    const PricingPolytope p = build_polytope(g1);
    o.expect(enumerate_vertices(p) == std::vector<Measure>{{0, 1}}, "G1 polytope");
    o.expect(!npb_check(p).holds, "G1 verdict");
    o.expect(!linear_completion(g1).has_value(), "G1 completion");
    const ConeDistance d = cone_distance(g1, claim({1, 0}));
    o.expect(d.value && *d.value == Rational(0), "G1 cone distance");
  }
  {
    const Market g2 = testing::fixture("G2");
    const PricingPolytope p = build_polytope(g2);
    o.expect(npb_check(p).profile.max_mass == std::vector<Rational>{Rational(3, 5), 1}, "G2 profile");
    const MeasureCertificate c = strictly_positive_measure(p);
    o.expect(c.floor && *c.floor == half, "G2 floor");
    o.expect(c.measure && *c.measure == Measure{half, half}, "G2 measure");
    o.expect(cash_additive_part(g2, claim({2, 0})) == Rational(6, 5), "G2 cash-additive part");
    const MeasureCertificate at_half{CertificateKind::kStrictlyPositive, Measure{half, half}, half};
    o.expect(markup(g2, at_half, claim({2, 0})) == Rational(1, 5), "G2 mark-up");
  }
  {
    const Market g3 = testing::fixture("G3");
    const PricingPolytope p = build_polytope(g3);
    bool vanishes = true;
    for (const auto& v : enumerate_vertices(p)) vanishes = vanishes && v[2].is_zero();
    o.expect(vanishes && !p.contains({0, half, half}), "G3 negligible mass");
    o.expect(superhedge(g3, claim({0, 1, 7})) == Rational(1), "G3 superhedge");
  }
  o.detail << "G1, G2, G3 exact";
}

Claim random_claim(Rng& rng, std::size_t n) {
  Claim c = Claim::constant(n, 0);
  for (std::size_t s = 0; s < n; ++s) c[s] = rng.rational(-5, 5, 4);
  return c;
}

void order_axioms(Outcome& o) {
  Rng rng(2024);
  std::size_t checks = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(6);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i));
    const SampleSpace space(labels);
    std::vector<std::set<std::string>> generators;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (rng.below(3) == 0) generators.push_back({labels[rng.below(n - 1)]});
    }
    const CommonOrder order = order_from_negligible_sets(space, generators);

    std::vector<Claim> claims;
    for (int k = 0; k < 200; ++k) {
      Claim c = random_claim(rng, n);
      // Mix in dominated and truncation-sensitive shapes.
      if (k % 4 == 1) c = positive_part(c);
      if (k % 4 == 2) c = claims.back() + Claim::constant(n, rng.rational(0, 2, 3));
      claims.push_back(std::move(c));
    }
    std::vector<ClaimTriple> triples;
    for (std::size_t k = 0; k + 2 < claims.size(); k += 3) {
      triples.push_back({claims[k], claims[k + 1], claims[k + 2]});
    }
    const AxiomReport r = check_axioms(order, triples, 200, static_cast<std::uint64_t>(t + 1));
    for (const auto& a : r.axioms) {
      checks += a.checks;
      o.expect(a.passed(), "order #" + std::to_string(t) + " " + a.name + ": " + a.witness);
    }

    const auto p = representing_probability(order);
    for (int k = 0; k < 200; ++k) {
      const Claim& f = claims[rng.below(claims.size())];
      const Claim& g = claims[rng.below(claims.size())];
      Rational mass;  // P(f < g)
      for (std::size_t s = 0; s < n; ++s) {
        if (f[s] < g[s]) mass += p[s];
      }
      o.expect(dominates(order, f, g) == mass.is_zero(), "representation on order #" + std::to_string(t));
    }
  }
  o.detail << "50 orders, " << checks << " axiom checks, 10000 representation pairs";
}

void monotone_measures(Outcome& o) {
  Rng rng(77);
  std::size_t vertices = 0;
  for (const auto& name : kGolden) {
    const Market m = testing::fixture(name);
    const auto vs = enumerate_vertices(build_polytope(m));
    vertices += vs.size();
    for (int k = 0; k < 100; ++k) {
      const Claim g = random_claim(rng, m.num_states());
      Claim f = g;
      for (std::size_t s = 0; s < f.size(); ++s) {
        f[s] += m.order().negligible(s) ? rng.rational(-9, 0, 2) : rng.rational(0, 3, 4);
      }
      if (!dominates(m.order(), f, g)) {
        o.fail("sampler produced an undominated pair");
        continue;
      }
      for (const auto& v : vs) o.expect(integrate(f, v) >= integrate(g, v), name + " vertex");
    }
  }
  o.detail << vertices << " vertices, 100 dominated pairs per fixture";
}

void bubble_collapse(Outcome& o) {
  std::size_t evaluated = 0;
  auto check = [&](const Market& m, const std::vector<Strike>& grid, const std::string& label) {
    const PricingPolytope p = build_polytope(m);
    std::vector<Claim> items{Claim::constant(m.num_states(), 1)};
    for (const auto& a : m.assets()) items.push_back(a.payoff);
    for (const auto& x : items) {
      ++evaluated;
      const Rational b = bubble(m, p, x, grid);
      o.expect(b.is_zero(), label + " bubble " + str(b));
    }
  };
  for (const auto& name : kGolden) {
    check(testing::fixture(name), testing::fixture_file(name).strikes, name);
  }
  for (std::uint64_t seed = 1; seed <= kCorpusSize; ++seed) {
    check(corpus()[seed - 1], testing::random_market_file(seed).strikes,
          "seed " + std::to_string(seed));
  }
  o.detail << evaluated << " claims, all exactly 0";
}

// The closed form exactly as stated in the acceptance criterion.
Rational stated_closed_form(std::int64_t k, const Rational& beta) {
  const Rational kb = Rational(k) * beta;
  return (1 + kb - Rational(1, k) - beta) / (1 + kb);
}

void power_asymptotics(Outcome& o) {
  const Rational beta(1);
  const auto rows = refinement_study(beta, 50);
  auto at = [&](std::int64_t k) { return rows[static_cast<std::size_t>(k - 2)].power; };
  o.expect(at(2) == Rational(1, 3), "k=2 gives " + str(at(2)) + ", expected 1/3");
  o.expect(at(10) == Rational(99, 110), "k=10 gives " + str(at(10)) + ", expected 99/110");
  std::size_t mismatches = 0;
  for (const auto& r : rows) mismatches += r.power == stated_closed_form(r.states, beta) ? 0 : 1;
  o.expect(mismatches == 0, std::to_string(mismatches) + " of " + std::to_string(rows.size()) +
                                " rows differ from the stated closed form");
  bool above = false;
  for (const auto& r : rows) above = above || r.power > Rational(95, 100);
  o.expect(above, "never above 0.95 for k <= 50");
  o.detail << "k=2: " << str(at(2)) << ", k=10: " << str(at(10)) << ", k=50: " << str(at(50))
           << "; observed values follow (k-1)b/(1+kb)";
}

void determinism(Outcome& o) {
  std::size_t runs = 0;
  for (const std::string name : {"G1", "G2", "G3", "badnumeraire"}) {
    std::string first;
    for (int rep = 0; rep < 3; ++rep) {
      std::ostringstream out, err;
      const std::vector<std::string> args{"analyze", testing::fixture_path(name), "--format",
                                          "machine"};
      run_cli(args, out, err);
      ++runs;
      if (rep == 0) {
        first = out.str();
        o.expect(!first.empty(), name + " produced no report");
      } else {
        o.expect(out.str() == first, name + " report changed between runs");
      }
    }
  }
  o.detail << runs << " analyze runs over 4 fixtures, byte comparison";
}

}  // namespace
}  // namespace friction

int main(int argc, char** argv) {
  using namespace friction;
  const std::vector<Check> checks{
      {"exact-duality", "cash-additive part equals attainment value", exact_duality},
      {"nflvr-equivalence", "cone distance, completion and no-pure-bubble agree", nflvr_equivalence},
      {"completion-collapse", "no pure bubble iff strictly positive measure iff linear completion",
       completion_collapse},
      {"golden-fixtures", "G1-G3 reference values", golden_fixtures},
      {"order-axioms", "order axioms and representing probability", order_axioms},
      {"monotone-measures", "fixture vertices are monotone", monotone_measures},
      {"bubble-collapse", "bubbles vanish on finite markets", bubble_collapse},
      {"power-asymptotics", "refinement study values", power_asymptotics},
      {"determinism", "analyze reports are byte-identical", determinism},
  };
  std::string only;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--only") only = argv[i + 1];
  }

  bool all = true;
  bool matched = false;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    if (!only.empty() && c.name != only) continue;
    matched = true;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    all = all && o.pass;
    std::cout << '[' << (i + 1) << "/9] " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << " ("
              << c.title << "): " << o.detail.str() << " [" << secs.count() << " s]" << std::endl;
  }
  if (!matched) {
    std::cerr << "unknown check '" << only << "'\n";
    return 2;
  }
  return all ? 0 : 1;
}
