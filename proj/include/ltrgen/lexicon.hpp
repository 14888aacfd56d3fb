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

#ifndef LTRGEN_LEXICON_HPP_
#define LTRGEN_LEXICON_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ltrgen/grammar.hpp"
#include "ltrgen/model.hpp"

namespace ltrgen {

enum class DiagnosticKind {
  kUnknownWord,
  kAmbiguity,
  kMultipleParses,
  kNoTemplate,
  kNoParse,
};

std::string_view diagnostic_name(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind;
  std::string detail;

  auto operator<=>(const Diagnostic &) const = default;
};

// "UnknownWord(zzz)"
std::string format_diagnostic(const Diagnostic &d);

class UnknownWordError : public Error {
 public:
  explicit UnknownWordError(std::string word)
      : Error("unknown word '" + word + "'"), word_(std::move(word)) {}
  const std::string &word() const { return word_; }

 private:
  std::string word_;
};

enum class UnknownPolicy { kBlock, kWildcard };

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(bool fold_case) : fold_case_(fold_case) {}

  void add(const std::string &word, const CatKey &cat);
  bool contains(const std::string &word) const;
  // Empty when absent.
  const std::set<CatKey> &categories(const std::string &word) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, std::set<CatKey>> &entries() const { return entries_; }
  bool fold_case() const { return fold_case_; }

 private:
  std::string key(const std::string &word) const;

  bool fold_case_ = false;
  std::map<std::string, std::set<CatKey>> entries_;
};

// `word cat/arity [cat/arity ...]` per line, `#` comments.
Lexicon load_lexicon(std::string_view text, bool fold_case = false);
// One `word cat/arity ...` line per word, sorted.
std::string format_lexicon(const Lexicon &lex);

// Known words get their entry; unknown words throw under kBlock and match
// every preterminal of `grammar` under kWildcard.
std::set<CatKey> lookup(const Lexicon &lex, const std::string &word,
                        UnknownPolicy policy, const Grammar &grammar);

// UnknownWord when absent; Ambiguity when the word has two or more
// categories.
std::vector<Diagnostic> ambiguity_flags(const Lexicon &lex,
                                        const std::string &word);

}  // namespace ltrgen

#endif  // LTRGEN_LEXICON_HPP_
