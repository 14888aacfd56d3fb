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
// Candidate rule generation from word equivalences.
//
// The enumerative path instantiates inventory templates whose categories
// match the words' lexicon entries. The generative path selects phrasal
// templates by their lexical side, then parses the target words with each
// phrasal alternative as the start symbol; every parse yields a candidate
// whose target items are the words paired with the parse's preterminals.

#ifndef LTRGEN_GENERATION_HPP_
#define LTRGEN_GENERATION_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ltrgen/extraction.hpp"
#include "ltrgen/grammar.hpp"
#include "ltrgen/lexicon.hpp"
#include "ltrgen/model.hpp"

namespace ltrgen {

// Placeholder token -> phrasal category name (sth -> NP).
using Placeholders = std::map<std::string, std::string>;

Placeholders default_placeholders();
// `token NAME` per line, `#` comments.
Placeholders load_placeholders(std::string_view text);

struct GapMarker {
  Side side;
  int position;  // index of the following word in the side's word list
  std::string category;
  std::string token;  // placeholder as written, e.g. "sth"

  auto operator<=>(const GapMarker &) const = default;
};

struct WordEquivalence {
  std::vector<std::string> source_words;
  std::vector<std::string> target_words;
  std::vector<GapMarker> gap_markers;
};

// `tokens <-> tokens`; placeholder tokens become gap markers.
WordEquivalence parse_word_equivalence(std::string_view line,
                                       const Placeholders &placeholders);
std::string format_word_equivalence(const WordEquivalence &we,
                                    const Placeholders &placeholders);

struct Candidate {
  Ltr ltr;  // canonical
  std::string provenance;
  std::vector<Diagnostic> diagnostics;
};

struct GenerationResult {
  std::vector<Candidate> candidates;
  // Equivalence-level findings: UnknownWord on the source side,
  // NoTemplate, NoParse.
  std::vector<Diagnostic> diagnostics;
};

struct Lexicons {
  const Lexicon &source;  // unknown words block generation
  const Lexicon &target;  // unknown words match any category
};

// Unknown target words match every category in `wildcard`.
GenerationResult generate_enumerative(const WordEquivalence &we,
                                      const Inventory &inv,
                                      const Lexicons &lex,
                                      const std::set<CatKey> &wildcard);
// Wildcard set: the target categories used anywhere in the inventory.
GenerationResult generate_enumerative(const WordEquivalence &we,
                                      const Inventory &inv,
                                      const Lexicons &lex);

struct SelectedTemplate {
  std::size_t index;  // into the phrasal template list
  std::vector<std::size_t> alternatives;  // those matching the gap markers
};

// Throws UnknownWordError for an unknown source word.
std::vector<SelectedTemplate> select_phrasal_templates(
    const WordEquivalence &we, const std::vector<PhrasalTemplate> &pts,
    const Lexicon &source_lexicon);

GenerationResult generate_generative(const WordEquivalence &we,
                                     const std::vector<PhrasalTemplate> &pts,
                                     const Lexicons &lex, const Grammar &g);

// Positional zip of words and instantiated preterminals.
std::vector<LexicalItem> assemble_rhs(const std::vector<std::string> &words,
                                      const std::vector<LexCat> &preterminals);

// Merges candidate lists, dropping alpha-equivalent duplicates and
// refreshing the MultipleParses flag.
GenerationResult merge_results(GenerationResult a, const GenerationResult &b);

// ---------------------------------------------------------------------------
// Abstraction

struct AbstractionClass {
  PhrasalTemplate phrasal;  // canonical, single alternative
  std::vector<std::size_t> members;  // indices into the input templates
};

// Every phrasal template obtained by replacing the whole `side` of `t` with
// a grammar category that derives it, subject to self-containment: the
// side's variables shared with the other side must all resolve to the
// category's own variables, and distinct variables of the side must stay
// distinct.
std::vector<PhrasalTemplate> abstraction_candidates(const Template &t,
                                                    const Grammar &g,
                                                    Side side);

// Groups the templates by their abstractions, in first-appearance order.
std::vector<AbstractionClass> abstraction_classes(
    const std::vector<Template> &ts, const Grammar &g, Side side);

// The distinct phrasal templates of abstraction_classes.
std::vector<PhrasalTemplate> abstract_templates(const std::vector<Template> &ts,
                                                const Grammar &g, Side side);

// Lexical templates obtained by expanding each alternative up to max_len
// preterminals; canonical and deduplicated.
std::vector<Template> derive_lexical_templates(const PhrasalTemplate &pt,
                                               const Grammar &g, int max_len);

}  // namespace ltrgen

#endif  // LTRGEN_GENERATION_HPP_
