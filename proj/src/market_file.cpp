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

#include "friction/market_file.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "friction/error.hpp"

namespace friction {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Rational number(int line, const std::string& field, const std::string& text) {
  auto v = Rational::parse(text);
  if (!v) {
    throw ParseError(line, field,
                     "'" + text + "' is not an exact number (use p/q or a finite decimal)");
  }
  return *v;
}

}  // namespace

MarketFile parse_market_file(std::string_view text) {
  MarketFile file;
  bool header = false;
  bool have_states = false;
  std::set<std::string> names;
  int line_no = 0;
  int last_line = 1;  // where end-of-input errors point
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;
    last_line = line_no;

    const std::string& key = words[0];
    if (!header) {
      if (key != "friction-market" || words.size() != 2) {
        throw ParseError(line_no, "header", "expected 'friction-market <version>'");
      }
      if (words[1] != std::to_string(kMarketFileVersion)) {
        throw ParseError(line_no, "version", "unsupported schema version '" + words[1] + "'");
      }
      header = true;
      continue;
    }
    if (key == "states") {
      if (have_states) throw ParseError(line_no, "states", "states declared twice");
      if (words.size() < 2) throw ParseError(line_no, "states", "at least one state required");
      std::set<std::string> seen;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!seen.insert(words[i]).second) {
          throw ParseError(line_no, "states", "duplicate state '" + words[i] + "'");
        }
        file.states.push_back(words[i]);
      }
      have_states = true;
      continue;
    }
    if (!have_states) {
      throw ParseError(line_no, key, "'states' must come before '" + key + "'");
    }
    const std::set<std::string> known(file.states.begin(), file.states.end());
    if (key == "negligible") {
      if (words.size() < 2) throw ParseError(line_no, "negligible", "empty negligible set");
      std::vector<std::string> set;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!known.count(words[i])) {
          throw ParseError(line_no, "negligible", "unknown state '" + words[i] + "'");
        }
        set.push_back(words[i]);
      }
      file.negligible.push_back(std::move(set));
    } else if (key == "asset") {
      // asset <name> ask <price> payoff <v_1> ... <v_n>
      if (words.size() < 5 || words[2] != "ask" || words[4] != "payoff") {
        throw ParseError(line_no, "asset", "expected 'asset <name> ask <price> payoff <values>'");
      }
      AssetSpec a;
      a.name = words[1];
      if (!names.insert(a.name).second) {
        throw ParseError(line_no, "asset.name", "duplicate asset '" + a.name + "'");
      }
      a.ask = number(line_no, "asset.ask", words[3]);
      if (words.size() - 5 != file.states.size()) {
        throw ParseError(line_no, "asset.payoff",
                         std::to_string(words.size() - 5) + " values for " +
                             std::to_string(file.states.size()) + " states");
      }
      for (std::size_t i = 5; i < words.size(); ++i) {
        a.payoff.push_back(
            number(line_no, "asset.payoff[" + std::to_string(i - 5) + "]", words[i]));
      }
      file.assets.push_back(std::move(a));
    } else if (key == "prior") {
      if (words.size() - 1 != file.states.size()) {
        throw ParseError(line_no, "prior", std::to_string(words.size() - 1) + " values for " +
                                               std::to_string(file.states.size()) + " states");
      }
      std::vector<Rational> p;
      Rational total;
      for (std::size_t i = 1; i < words.size(); ++i) {
        p.push_back(number(line_no, "prior[" + std::to_string(i - 1) + "]", words[i]));
        if (p.back().sign() < 0) {
          throw ParseError(line_no, "prior[" + std::to_string(i - 1) + "]", "negative mass");
        }
        total += p.back();
      }
      if (total != Rational(1)) {
        throw ParseError(line_no, "prior", "masses sum to " + total.to_string() + ", not 1");
      }
      file.priors.push_back(std::move(p));
    } else if (key == "strikes") {
      for (std::size_t i = 1; i < words.size(); ++i) {
        const std::string field = "strikes[" + std::to_string(i - 1) + "]";
        if (words[i] == "inf") {
          file.strikes.push_back(Strike::infinity());
          continue;
        }
        Rational k = number(line_no, field, words[i]);
        if (k.sign() < 0) throw ParseError(line_no, field, "negative strike");
        file.strikes.push_back(Strike{k});
      }
    } else {
      throw ParseError(line_no, key, "unknown keyword '" + key + "'");
    }
  }
  if (!header) throw ParseError(last_line, "header", "missing 'friction-market' header");
  if (!have_states) throw ParseError(last_line, "states", "missing 'states' line");
  return file;
}

MarketFile read_market_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "path", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_market_file(ss.str());
}

std::string serialize_market_file(const MarketFile& file) {
  std::ostringstream os;
  os << "friction-market " << file.version << '\n';
  os << "states";
  for (const auto& s : file.states) os << ' ' << s;
  os << '\n';
  for (const auto& set : file.negligible) {
    os << "negligible";
    for (const auto& s : set) os << ' ' << s;
    os << '\n';
  }
  for (const auto& a : file.assets) {
    os << "asset " << a.name << " ask " << a.ask << " payoff";
    for (const auto& v : a.payoff) os << ' ' << v;
    os << '\n';
  }
  for (const auto& p : file.priors) {
    os << "prior";
    for (const auto& v : p) os << ' ' << v;
    os << '\n';
  }
  if (!file.strikes.empty()) {
    os << "strikes";
    for (const auto& k : file.strikes) {
      os << ' ';
      if (k.is_infinite()) {
        os << "inf";
      } else {
        os << *k.level;
      }
    }
    os << '\n';
  }
  return os.str();
}

Market to_market(const MarketFile& file) {
  SampleSpace space(file.states);
  std::vector<std::set<std::string>> generators;
  for (const auto& set : file.negligible) generators.emplace_back(set.begin(), set.end());
  if (!file.priors.empty()) {
    const CommonOrder from_priors = order_from_priors(space, PriorFamily{file.priors});
    const auto labels = from_priors.core_labels();
    generators.emplace_back(labels.begin(), labels.end());
  }
  CommonOrder order = order_from_negligible_sets(space, generators);
  std::vector<Asset> assets;
  for (const auto& a : file.assets) assets.push_back({a.name, Claim(a.payoff), a.ask});
  return Market(std::move(order), std::move(assets));
}

std::string market_digest(const MarketFile& file) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_market_file(file)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace friction
