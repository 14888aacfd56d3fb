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
// Term algebra for lexical transfer rules: categories, items, rules and
// templates, with canonical variable renaming and the text formats.

#ifndef LTRGEN_MODEL_HPP_
#define LTRGEN_MODEL_HPP_

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ltrgen {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based; 0 means unknown.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string &message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string &detail() const { return detail_; }

  // Returns a copy positioned on `line` (used by file readers).
  SyntaxError at_line(int line) const;

 private:
  std::string detail_;
  int line_;
  int column_;
};

// Index variables are plain identifiers: [A-Z][A-Za-z0-9]*.
using IndexVar = std::string;

bool is_valid_var_name(std::string_view name);

// Name of the n-th variable (0-based) of the canonical alphabet:
// A, B, ..., Z, AA, AB, ...
std::string canonical_var_name(std::size_t n);

// A lexical category such as iv(A,B,C). Identity is (name, arity).
struct LexCat {
  std::string name;
  std::vector<IndexVar> indices;

  std::size_t arity() const { return indices.size(); }
  auto operator<=>(const LexCat &) const = default;
};

// A phrasal category with optional gaps, e.g. VP(A,B)/NP(D).
// Gaps are themselves gap-free phrasal categories.
struct PhrasalCat {
  std::string name;
  std::vector<IndexVar> indices;
  std::vector<PhrasalCat> gaps;

  std::size_t arity() const { return indices.size(); }
  // Indices followed by the indices of every gap.
  std::vector<IndexVar> all_vars() const;
  auto operator<=>(const PhrasalCat &) const = default;
};

// (name, arity): the identity of a lexical category, as listed in
// lexicons and matched against grammar preterminals.
struct CatKey {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const CatKey &) const = default;
};

std::string format_cat_key(const CatKey &key);  // "iv/3"
inline CatKey key_of(const LexCat &cat) { return {cat.name, cat.arity()}; }

struct LexicalItem {
  std::string word;
  LexCat cat;
  auto operator<=>(const LexicalItem &) const = default;
};

// Lexical transfer rule. Variable scope is the whole rule.
struct Ltr {
  std::vector<LexicalItem> source;
  std::vector<LexicalItem> target;
  auto operator<=>(const Ltr &) const = default;
};

// A rule with its words removed.
struct Template {
  std::vector<LexCat> source;
  std::vector<LexCat> target;
  auto operator<=>(const Template &) const = default;
};

enum class Side { kSource, kTarget };

// A template where one side is lexical and the other a disjunction of
// phrasal categories. Generation uses target-phrasal templates only.
struct PhrasalTemplate {
  std::vector<LexCat> lexical;
  std::vector<PhrasalCat> alternatives;
  Side phrasal_side = Side::kTarget;
  auto operator<=>(const PhrasalTemplate &) const = default;
};

// ---------------------------------------------------------------------------
// Text formats

std::string format_cat(const LexCat &cat);
std::string format_cat(const PhrasalCat &cat);
std::string format_item(const LexicalItem &item);
std::string format_ltr(const Ltr &ltr);
std::string format_template(const Template &t);
std::string format_phrasal_template(const PhrasalTemplate &pt);

LexCat parse_lex_cat(std::string_view text);
PhrasalCat parse_phrasal_cat(std::string_view text);
Ltr parse_ltr_line(std::string_view line);
Template parse_template_line(std::string_view line);
PhrasalTemplate parse_phrasal_template_line(std::string_view line);

// Collapses runs of whitespace and trims; the reference spacing used by
// the formatters is reproduced by parse followed by format.
std::string normalize_ws(std::string_view line);

// A logical line of a rule file: optional tab-separated label before the
// body (candidate id, inventory count) and the trailing `#` comment.
struct RuleLine {
  int line_number = 0;
  std::string label;
  std::string body;
  std::string comment;
};

// Splits a file into rule lines, skipping blanks and whole-line comments.
std::vector<RuleLine> split_rule_lines(std::string_view text);

std::vector<Ltr> parse_ltr_file(std::string_view text);
std::vector<Template> parse_template_file(std::string_view text);
std::vector<PhrasalTemplate> parse_phrasal_template_file(std::string_view text);

// ---------------------------------------------------------------------------
// Canonical renaming

// Renames variables by order of first occurrence, source side first then
// target, using the canonical alphabet. Idempotent.
Template canonicalize(const Template &t);
Ltr canonicalize(const Ltr &ltr);
// Lexical side first, then alternatives in order. Duplicate alternatives
// (after renaming) are dropped.
PhrasalTemplate canonicalize(const PhrasalTemplate &pt);

bool alpha_equivalent(const Template &a, const Template &b);
bool alpha_equivalent(const Ltr &a, const Ltr &b);

Template strip_words(const Ltr &ltr);

// Applies a variable renaming; names absent from the map are kept.
LexCat rename(const LexCat &cat, const std::map<IndexVar, IndexVar> &names);
PhrasalCat rename(const PhrasalCat &cat,
                  const std::map<IndexVar, IndexVar> &names);
Template rename(const Template &t, const std::map<IndexVar, IndexVar> &names);

// Instantiates a template with words; sizes must match.
Ltr instantiate(const Template &t, const std::vector<std::string> &source_words,
                const std::vector<std::string> &target_words);

}  // namespace ltrgen

#endif  // LTRGEN_MODEL_HPP_
