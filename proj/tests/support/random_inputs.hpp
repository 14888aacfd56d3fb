// Licensed under the Apache License, Version 2.0 (the 'License');
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an 'AS IS' BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Seeded random generators for property tests.

#ifndef LTRGEN_TESTS_SUPPORT_RANDOM_INPUTS_HPP_
#define LTRGEN_TESTS_SUPPORT_RANDOM_INPUTS_HPP_

#include <random>
#include <string>
#include <vector>

#include "ltrgen/grammar.hpp"
#include "ltrgen/model.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline int uniform(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Index tuple of `arity` variables drawn from `pool`.
inline std::vector<std::string> random_vars(Rng &rng, std::size_t arity,
                                            const std::vector<std::string> &pool) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arity; ++i)
    out.push_back(pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)]);
  return out;
}

// Random preterminal yield of `cat`, ignoring indices. False when the
// depth or length budget runs out or a category has no rule.
inline bool sample_yield(Rng &rng, const ltrgen::Grammar &g, const ltrgen::PhrasalCat &cat,
                         int depth, int max_len, std::vector<ltrgen::CatKey> &out) {
  using namespace ltrgen;
  auto same_label = [](const PhrasalCat &a, const PhrasalCat &b) {
    if (a.name != b.name || a.arity() != b.arity() || a.gaps.size() != b.gaps.size())
      return false;
    for (std::size_t i = 0; i < a.gaps.size(); ++i)
      if (a.gaps[i].name != b.gaps[i].name || a.gaps[i].arity() != b.gaps[i].arity())
        return false;
    return true;
  };
  if (depth == 0) return false;
  std::vector<const GrammarRule *> options;
  for (const auto &r : g.rules())
    if (same_label(r.lhs, cat)) options.push_back(&r);
  if (options.empty()) return false;
  const GrammarRule &rule = *options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
  for (const auto &sym : rule.rhs) {
    if (const auto *lex = std::get_if<LexCat>(&sym)) {
      out.push_back(key_of(*lex));
    } else if (const auto *ph = std::get_if<PhrasalCat>(&sym)) {
      if (!sample_yield(rng, g, *ph, depth - 1, max_len, out)) return false;
    }
    if (static_cast<int>(out.size()) > max_len) return false;
  }
  return true;
}

struct GrammarCase {
  ltrgen::Grammar grammar;
  ltrgen::PhrasalCat start;
  std::vector<ltrgen::TokenCats> tokens;
  std::vector<ltrgen::LexCat> categories;  // same length as tokens
};

// Small grammar over phrasal S/2, X/1, Y/2, a gapped X(A)/Z(B) with its
// epsilon filler, and lexical a/1, b/2, c/1.
inline GrammarCase random_grammar_case(Rng &rng, int max_rules = 6,
                                       int max_tokens = 5, int max_cats = 3) {
  using namespace ltrgen;
  const std::vector<std::string> pool{"A", "B", "C"};
  const std::vector<std::pair<std::string, std::size_t>> lexical{
      {"a", 1}, {"b", 2}, {"c", 1}};
  auto phrasal = [&](int which) {
    PhrasalCat c;
    switch (which) {
      case 0: c = {"S", random_vars(rng, 2, pool), {}}; break;
      case 1: c = {"X", random_vars(rng, 1, pool), {}}; break;
      case 2: c = {"Y", random_vars(rng, 2, pool), {}}; break;
      default:
        c = {"X", random_vars(rng, 1, pool), {{"Z", random_vars(rng, 1, pool), {}}}};
        break;
    }
    return c;
  };

  std::vector<GrammarRule> rules;
  int n_rules = uniform(rng, 1, max_rules);
  for (int r = 0; r < n_rules; ++r) {
    GrammarRule rule;
    rule.lhs = phrasal(r == 0 ? 0 : uniform(rng, 0, 3));
    if (uniform(rng, 0, 9) == 0) {
      rule.rhs.push_back(Epsilon{});
    } else {
      int len = uniform(rng, 1, 3);
      for (int k = 0; k < len; ++k) {
        if (uniform(rng, 0, 1) == 0) {
          const auto &[name, arity] = lexical[uniform(rng, 0, 2)];
          rule.rhs.push_back(LexCat{name, random_vars(rng, arity, pool)});
        } else {
          rule.rhs.push_back(phrasal(uniform(rng, 0, 3)));
        }
      }
    }
    rules.push_back(std::move(rule));
  }
  // Occasionally add the gap filler so slashed categories can close.
  if (uniform(rng, 0, 2) == 0)
    rules.push_back({{"Z", {"A"}, {{"Z", {"A"}, {}}}}, {Epsilon{}}});

  GrammarCase out;
  out.grammar = Grammar(std::move(rules));
  out.start = {"S", {"A", "B"}, {}};

  // Most inputs follow a random skeleton derivation so that parses exist.
  std::vector<CatKey> yield;
  if (uniform(rng, 0, 4) != 0) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      yield.clear();
      if (sample_yield(rng, out.grammar, out.start, 6, max_tokens, yield) &&
          !yield.empty())
        break;
      yield.clear();
    }
  }
  int n = yield.empty() ? uniform(rng, 1, max_tokens) : static_cast<int>(yield.size());
  const std::vector<std::string> input_pool{"A", "B", "P", "Q"};
  for (int i = 0; i < n; ++i) {
    TokenCats t;
    t.word = "w" + std::to_string(i);
    if (!yield.empty()) t.cats.insert(yield[i]);
    int k = uniform(rng, yield.empty() ? 1 : 0, max_cats - (yield.empty() ? 0 : 1));
    for (int j = 0; j < k; ++j) {
      const auto &[name, arity] = lexical[uniform(rng, 0, 2)];
      t.cats.insert({name, arity});
    }
    // Category input uses the derived category, else the first listed one.
    const CatKey &first = yield.empty() ? *t.cats.begin() : yield[i];
    out.categories.push_back({first.name, random_vars(rng, first.arity, input_pool)});
    out.tokens.push_back(std::move(t));
  }
  return out;
}

// Template with arities <= 4 and side lengths 1..6 over a small
// variable pool with arbitrary names.
inline ltrgen::Template random_template(Rng &rng) {
  static const std::vector<std::string> names{"A", "B", "C", "Q", "R", "X1", "Zz", "AB"};
  static const std::vector<std::string> cats{"iv", "tv", "n", "p", "adv", "d"};
  std::vector<std::string> pool(names.begin(),
                                names.begin() + uniform(rng, 1, static_cast<int>(names.size())));
  auto side = [&] {
    std::vector<ltrgen::LexCat> out;
    int len = uniform(rng, 1, 6);
    for (int i = 0; i < len; ++i)
      out.push_back({cats[uniform(rng, 0, static_cast<int>(cats.size()) - 1)],
                     random_vars(rng, uniform(rng, 0, 4), pool)});
    return out;
  };
  ltrgen::Template t;
  t.source = side();
  t.target = side();
  return t;
}

}  // namespace testsupport

#endif  // LTRGEN_TESTS_SUPPORT_RANDOM_INPUTS_HPP_
