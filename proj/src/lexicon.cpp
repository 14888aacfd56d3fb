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

#include "ltrgen/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace ltrgen {

std::string_view diagnostic_name(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::kUnknownWord: return "UnknownWord";
    case DiagnosticKind::kAmbiguity: return "Ambiguity";
    case DiagnosticKind::kMultipleParses: return "MultipleParses";
    case DiagnosticKind::kNoTemplate: return "NoTemplate";
    case DiagnosticKind::kNoParse: return "NoParse";
  }
  return "?";
}

std::string format_diagnostic(const Diagnostic &d) {
  return std::string(diagnostic_name(d.kind)) + "(" + d.detail + ")";
}

std::string Lexicon::key(const std::string &word) const {
  if (!fold_case_) return word;
  std::string out = word;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

void Lexicon::add(const std::string &word, const CatKey &cat) {
  entries_[key(word)].insert(cat);
}

bool Lexicon::contains(const std::string &word) const {
  return entries_.count(key(word)) > 0;
}

const std::set<CatKey> &Lexicon::categories(const std::string &word) const {
  static const std::set<CatKey> kEmpty;
  auto it = entries_.find(key(word));
  return it == entries_.end() ? kEmpty : it->second;
}

Lexicon load_lexicon(std::string_view text, bool fold_case) {
  Lexicon lex(fold_case);
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = line.substr(0, line.find('#'));
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word)) continue;
    std::string item;
    int count = 0;
    while (fields >> item) {
      std::size_t slash = item.rfind('/');
      CatKey cat;
      const char *first = item.data() + slash + 1;
      const char *last = item.data() + item.size();
      auto [ptr, ec] = slash == std::string::npos
                           ? std::from_chars_result{first, std::errc::invalid_argument}
                           : std::from_chars(first, last, cat.arity);
      if (slash == std::string::npos || slash == 0 || ec != std::errc() ||
          ptr != last || !std::islower(static_cast<unsigned char>(item[0])))
        throw SyntaxError("expected 'category/arity', got '" + item + "'",
                          number, static_cast<int>(line.find(item)) + 1);
      cat.name = item.substr(0, slash);
      lex.add(word, cat);
      ++count;
    }
    if (count == 0)
      throw SyntaxError("word '" + word + "' has no categories", number, 1);
  }
  return lex;
}

std::string format_lexicon(const Lexicon &lex) {
  std::string out;
  for (const auto &[word, cats] : lex.entries()) {
    out += word;
    for (const auto &c : cats) out += " " + format_cat_key(c);
    out += "\n";
  }
  return out;
}

std::set<CatKey> lookup(const Lexicon &lex, const std::string &word,
                        UnknownPolicy policy, const Grammar &grammar) {
  if (lex.contains(word)) return lex.categories(word);
  if (policy == UnknownPolicy::kBlock) throw UnknownWordError(word);
  return grammar.preterminals();
}

std::vector<Diagnostic> ambiguity_flags(const Lexicon &lex,
                                        const std::string &word) {
  if (!lex.contains(word)) return {{DiagnosticKind::kUnknownWord, word}};
  const auto &cats = lex.categories(word);
  if (cats.size() < 2) return {};
  std::string detail = word + ":";
  for (const auto &c : cats) detail += " " + format_cat_key(c);
  return {{DiagnosticKind::kAmbiguity, detail}};
}

}  // namespace ltrgen
