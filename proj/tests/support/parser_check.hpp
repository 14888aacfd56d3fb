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
// Parser-versus-oracle comparisons shared by unit and acceptance tests.

#ifndef LTRGEN_TESTS_SUPPORT_PARSER_CHECK_HPP_
#define LTRGEN_TESTS_SUPPORT_PARSER_CHECK_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ltrgen/grammar.hpp"
#include "oracle/brute_parser.hpp"

namespace testsupport {

inline std::set<std::string> start_names(const ltrgen::PhrasalCat &start) {
  auto v = start.all_vars();
  return {v.begin(), v.end()};
}

// Sorted canonical keys; duplicates are kept so they show up as a mismatch.
inline std::vector<std::string> keys(const std::vector<ltrgen::ParseNode> &trees,
                                     const std::set<std::string> &keep) {
  std::vector<std::string> out;
  for (const auto &t : trees) out.push_back(oracle::canonical_tree_key(t, keep));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> keys(const std::vector<ltrgen::ParseResult> &rs,
                                     const std::set<std::string> &keep) {
  std::vector<ltrgen::ParseNode> trees;
  for (const auto &r : rs) trees.push_back(r.tree);
  return keys(trees, keep);
}

// Empty string on agreement, otherwise a description of the mismatch.
inline std::string compare_words(const ltrgen::Grammar &g, const ltrgen::PhrasalCat &start,
                                 const std::vector<ltrgen::TokenCats> &tokens) {
  oracle::Input in;
  in.mode = oracle::Mode::kWords;
  in.length = static_cast<int>(tokens.size());
  in.words = tokens;
  auto keep = start_names(start);
  auto expected = keys(oracle::derivations(g, start, in), keep);
  auto results = ltrgen::parse_all(g, start, tokens);
  auto actual = keys(results, keep);
  for (const auto &r : results)
    if (!oracle::is_valid_derivation(g, r.tree))
      return "invalid tree " + ltrgen::format_tree(r.tree);
  if (expected == actual) return "";
  return "oracle " + std::to_string(expected.size()) + " trees, parser " +
         std::to_string(actual.size());
}

inline std::string compare_categories(const ltrgen::Grammar &g, const ltrgen::PhrasalCat &start,
                                      const std::vector<ltrgen::LexCat> &cats) {
  oracle::Input in;
  in.mode = oracle::Mode::kCategories;
  in.length = static_cast<int>(cats.size());
  in.categories = cats;
  auto keep = start_names(start);
  auto expected = keys(oracle::derivations(g, start, in), keep);
  auto results = ltrgen::parse_cats(g, start, cats);
  auto actual = keys(results, keep);
  // Reported bindings must agree with the preterminals of each parse.
  for (const auto &r : results)
    for (std::size_t i = 0; i < cats.size(); ++i)
      for (std::size_t a = 0; a < cats[i].arity(); ++a) {
        auto it = r.bindings.find(cats[i].indices[a]);
        if (it == r.bindings.end() || it->second != r.preterminals[i].indices[a])
          return "binding of " + cats[i].indices[a] + " disagrees with " +
                 ltrgen::format_tree(r.tree);
      }
  if (expected == actual) return "";
  return "oracle " + std::to_string(expected.size()) + " trees, parser " +
         std::to_string(actual.size());
}

inline std::string compare_expansions(const ltrgen::Grammar &g, const ltrgen::PhrasalCat &start,
                                      int max_len) {
  auto keep = start_names(start);
  std::set<std::string> expected;
  for (int len = 1; len <= max_len; ++len) {
    oracle::Input in;
    in.mode = oracle::Mode::kAnything;
    in.length = len;
    for (const auto &t : oracle::derivations(g, start, in)) {
      std::vector<ltrgen::LexCat> seq;
      std::vector<const ltrgen::ParseNode *> stack{&t};
      while (!stack.empty()) {
        const auto *n = stack.back();
        stack.pop_back();
        if (n->kind == ltrgen::ParseNode::Kind::kPreterminal) seq.push_back(n->lexical);
        for (auto it = n->children.rbegin(); it != n->children.rend(); ++it)
          stack.push_back(&*it);
      }
      expected.insert(oracle::canonical_sequence_key(seq, keep));
    }
  }
  std::vector<std::string> actual;
  for (const auto &seq : ltrgen::enumerate_expansions(g, start, max_len))
    actual.push_back(oracle::canonical_sequence_key(seq, keep));
  std::sort(actual.begin(), actual.end());
  if (std::vector<std::string>(expected.begin(), expected.end()) == actual) return "";
  return "oracle " + std::to_string(expected.size()) + " sequences, parser " +
         std::to_string(actual.size());
}

}  // namespace testsupport

#endif  // LTRGEN_TESTS_SUPPORT_PARSER_CHECK_HPP_
