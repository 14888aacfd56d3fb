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
// Indexed context-free grammars with slash categories, and the parser
// that maps phrasal categories onto lexical category sequences.
//
// Grammar file syntax, one rule per line:
//
//   VP(A,B)/NP(D) -> VP(A,B,E) PP(A,D)/NP(D)
//   NP(D)/NP(D) -> eps
//
// Uppercase-initial symbols are phrasal, lowercase-initial are lexical
// preterminals, `eps` is the empty string and must stand alone. Variables
// are scoped to their rule. Gap threading is explicit: slashed categories
// and their epsilon fillers are written out by the grammar author.

#ifndef LTRGEN_GRAMMAR_HPP_
#define LTRGEN_GRAMMAR_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ltrgen/model.hpp"

namespace ltrgen {

struct Epsilon {
  auto operator<=>(const Epsilon &) const = default;
};

using Symbol = std::variant<PhrasalCat, LexCat, Epsilon>;

std::string format_symbol(const Symbol &sym);

struct GrammarRule {
  PhrasalCat lhs;
  std::vector<Symbol> rhs;
};

std::string format_rule(const GrammarRule &rule);

class Grammar {
 public:
  Grammar() = default;
  // Validates epsilon placement and collects the preterminal set.
  explicit Grammar(std::vector<GrammarRule> rules);

  const std::vector<GrammarRule> &rules() const { return rules_; }
  // Every (name, arity) occurring as a lexical symbol on a right-hand side.
  const std::set<CatKey> &preterminals() const { return preterminals_; }
  // Distinct left-hand side categories in first-appearance order, with
  // variables renamed canonically.
  std::vector<PhrasalCat> start_categories() const;

 private:
  std::vector<GrammarRule> rules_;
  std::set<CatKey> preterminals_;
};

GrammarRule parse_rule_line(std::string_view line);
// Throws SyntaxError carrying the 1-based line number.
Grammar load_grammar(std::string_view text);

// ---------------------------------------------------------------------------
// Parsing

// A node of a derivation tree. Phrasal nodes have children; preterminal
// nodes carry the matched input word (empty when parsing categories);
// epsilon nodes are empty leaves.
struct ParseNode {
  enum class Kind { kPhrasal, kPreterminal, kEpsilon };

  Kind kind = Kind::kPhrasal;
  PhrasalCat phrasal;
  LexCat lexical;
  std::string word;
  int begin = 0;
  int end = 0;
  std::vector<ParseNode> children;
};

// Bracketed rendering, e.g. (NP(F) (n(F) observador)). Epsilon is "eps".
std::string format_tree(const ParseNode &node);

struct ParseResult {
  // Preterminals left to right, one per input token.
  std::vector<LexCat> preterminals;
  ParseNode tree;
  // Resolution of every named input variable (start and, when parsing
  // categories, the input categories' variables).
  std::map<IndexVar, IndexVar> bindings;
};

struct TokenCats {
  std::string word;
  std::set<CatKey> cats;
};

// All derivations of the token sequence from `start`. The start
// category's variables are rigid: they are never bound to each other, and
// they name the indices of the result. Variables introduced by rules are
// named A, B, ... skipping the start's names, by first occurrence in the
// preterminals and then the tree. A node may not dominate another node
// with the same category label (name, arity and gaps) over the same span;
// this bounds unary and epsilon cycles. Results are deduplicated and come
// in leftmost-derivation order (rules in file order, split points
// ascending).
std::vector<ParseResult> parse_all(const Grammar &g, const PhrasalCat &start,
                                   const std::vector<TokenCats> &tokens);

// Like parse_all, with categories as terminals. A terminal matches a
// preterminal when names and arities agree and the index tuples unify.
// Variables shared by name with `start` are rigid; the other input
// variables are flexible and their resolution is reported in `bindings`.
std::vector<ParseResult> parse_cats(const Grammar &g, const PhrasalCat &start,
                                    const std::vector<LexCat> &cats);

// Distinct preterminal sequences of length 1..max_len derivable from
// `start`, ordered by length then discovery. Start variables keep their
// names; other variables are named canonically, skipping those names.
std::vector<std::vector<LexCat>> enumerate_expansions(const Grammar &g,
                                                      const PhrasalCat &start,
                                                      int max_len);

}  // namespace ltrgen

#endif  // LTRGEN_GRAMMAR_HPP_
