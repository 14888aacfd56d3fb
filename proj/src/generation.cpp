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

#include "ltrgen/generation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ltrgen {

Placeholders default_placeholders() {
  return {{"sth", "NP"}, {"sb", "NP"}, {"algo", "NP"}, {"algn", "NP"}};
}

Placeholders load_placeholders(std::string_view text) {
  Placeholders out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line.substr(0, line.find('#')));
    std::string token, category, extra;
    if (!(fields >> token)) continue;
    if (!(fields >> category) || (fields >> extra) ||
        !std::isupper(static_cast<unsigned char>(category[0])))
      throw SyntaxError("expected 'token CATEGORY'", number, 1);
    out[token] = category;
  }
  return out;
}

WordEquivalence parse_word_equivalence(std::string_view line,
                                       const Placeholders &placeholders) {
  std::string text(line);
  std::size_t arrow = text.find("<->");
  std::size_t arrow_len = 3;
  if (arrow == std::string::npos) {
    arrow = text.find("\xE2\x86\x94");
    arrow_len = 3;
  }
  if (arrow == std::string::npos)
    throw SyntaxError("expected '<->' between the two sides", 0, 1);

  WordEquivalence we;
  auto read_side = [&](std::string_view part, Side side,
                       std::vector<std::string> &words, int column) {
    std::istringstream in{std::string(part)};
    std::string tok;
    while (in >> tok) {
      auto it = placeholders.find(tok);
      if (it != placeholders.end()) {
        we.gap_markers.push_back(
            {side, static_cast<int>(words.size()), it->second, tok});
      } else {
        words.push_back(tok);
      }
    }
    if (words.empty())
      throw SyntaxError("side has no words besides placeholders", 0, column);
  };
  read_side(std::string_view(text).substr(0, arrow), Side::kSource,
            we.source_words, 1);
  read_side(std::string_view(text).substr(arrow + arrow_len), Side::kTarget,
            we.target_words, static_cast<int>(arrow + arrow_len) + 1);
  return we;
}

std::string format_word_equivalence(const WordEquivalence &we,
                                    const Placeholders &placeholders) {
  // The token as written, else the first placeholder for the category.
  auto token_for = [&](const GapMarker &m) {
    if (!m.token.empty()) return m.token;
    for (const auto &[tok, cat] : placeholders)
      if (cat == m.category) return tok;
    return m.category;
  };
  auto side_text = [&](const std::vector<std::string> &words, Side side) {
    std::string out;
    for (std::size_t i = 0; i <= words.size(); ++i) {
      for (const auto &m : we.gap_markers) {
        if (m.side == side && m.position == static_cast<int>(i)) {
          if (!out.empty()) out += ' ';
          out += token_for(m);
        }
      }
      if (i < words.size()) {
        if (!out.empty()) out += ' ';
        out += words[i];
      }
    }
    return out;
  };
  return side_text(we.source_words, Side::kSource) + " <-> " +
         side_text(we.target_words, Side::kTarget);
}

std::vector<LexicalItem> assemble_rhs(const std::vector<std::string> &words,
                                      const std::vector<LexCat> &preterminals) {
  if (words.size() != preterminals.size())
    throw Error("assemble_rhs: " + std::to_string(words.size()) +
                " words but " + std::to_string(preterminals.size()) +
                " categories");
  std::vector<LexicalItem> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    out.push_back({words[i], preterminals[i]});
  return out;
}

namespace {

// Source words must all be known; returns the UnknownWord diagnostics.
std::vector<Diagnostic> blocked_source_words(const WordEquivalence &we,
                                             const Lexicon &source) {
  std::vector<Diagnostic> out;
  for (const auto &w : we.source_words)
    if (!source.contains(w)) out.push_back({DiagnosticKind::kUnknownWord, w});
  return out;
}

// Ambiguous source words and unknown target words; attached to every
// candidate of an equivalence.
std::vector<Diagnostic> word_diagnostics(const WordEquivalence &we,
                                         const Lexicons &lex) {
  std::vector<Diagnostic> out;
  for (const auto &w : we.source_words)
    for (auto &d : ambiguity_flags(lex.source, w)) out.push_back(std::move(d));
  for (const auto &w : we.target_words)
    if (!lex.target.contains(w))
      out.push_back({DiagnosticKind::kUnknownWord, w + " (target, any category)"});
  return out;
}

void refresh_multiple_parses(GenerationResult &r) {
  for (auto &c : r.candidates) {
    std::erase_if(c.diagnostics, [](const Diagnostic &d) {
      return d.kind == DiagnosticKind::kMultipleParses;
    });
    if (r.candidates.size() > 1)
      c.diagnostics.push_back({DiagnosticKind::kMultipleParses,
                               std::to_string(r.candidates.size()) +
                                   " candidates"});
  }
}

// Appends unless an alpha-equivalent rule is already present.
bool add_candidate(GenerationResult &r, std::set<std::string> &seen,
                   Candidate c) {
  c.ltr = canonicalize(c.ltr);
  if (!seen.insert(format_ltr(c.ltr)).second) return false;
  r.candidates.push_back(std::move(c));
  return true;
}

std::set<IndexVar> vars_of(const std::vector<LexCat> &cats) {
  std::set<IndexVar> out;
  for (const auto &c : cats) out.insert(c.indices.begin(), c.indices.end());
  return out;
}

// Renames every variable of `cats` not in `keep` to a name outside
// `avoid`, consistently.
std::vector<LexCat> rename_apart(const std::vector<LexCat> &cats,
                                 const std::set<IndexVar> &keep,
                                 std::set<IndexVar> avoid) {
  avoid.insert(keep.begin(), keep.end());
  for (const auto &c : cats) avoid.insert(c.indices.begin(), c.indices.end());
  std::map<IndexVar, IndexVar> names;
  std::size_t next = 0;
  for (const auto &c : cats) {
    for (const auto &v : c.indices) {
      if (keep.count(v) || names.count(v)) continue;
      while (avoid.count(canonical_var_name(next))) ++next;
      names[v] = canonical_var_name(next++);
    }
  }
  std::vector<LexCat> out;
  for (const auto &c : cats) out.push_back(rename(c, names));
  return out;
}

std::multiset<std::string> gap_signature(const PhrasalCat &cat) {
  std::multiset<std::string> out;
  for (const auto &g : cat.gaps) out.insert(g.name);
  return out;
}

std::multiset<std::string> gap_signature(const WordEquivalence &we) {
  std::multiset<std::string> out;
  for (const auto &m : we.gap_markers)
    if (m.side == Side::kTarget) out.insert(m.category);
  return out;
}

}  // namespace

GenerationResult merge_results(GenerationResult a, const GenerationResult &b) {
  std::set<std::string> seen;
  for (const auto &c : a.candidates) seen.insert(format_ltr(c.ltr));
  for (const auto &c : b.candidates) add_candidate(a, seen, c);
  for (const auto &d : b.diagnostics)
    if (std::find(a.diagnostics.begin(), a.diagnostics.end(), d) ==
        a.diagnostics.end())
      a.diagnostics.push_back(d);
  if (!a.candidates.empty()) {
    std::erase_if(a.diagnostics, [](const Diagnostic &d) {
      return d.kind == DiagnosticKind::kNoTemplate ||
             d.kind == DiagnosticKind::kNoParse;
    });
  }
  refresh_multiple_parses(a);
  return a;
}

GenerationResult generate_enumerative(const WordEquivalence &we,
                                      const Inventory &inv,
                                      const Lexicons &lex,
                                      const std::set<CatKey> &wildcard) {
  GenerationResult result;
  result.diagnostics = blocked_source_words(we, lex.source);
  if (!result.diagnostics.empty()) return result;

  auto target_cats = [&](const std::string &w) {
    return lex.target.contains(w) ? lex.target.categories(w) : wildcard;
  };
  std::vector<std::set<CatKey>> tcats;
  for (const auto &w : we.target_words) tcats.push_back(target_cats(w));

  std::vector<Diagnostic> word_diags = word_diagnostics(we, lex);
  std::set<std::string> seen;
  for (const auto &entry : inv) {
    const Template &t = entry.templ;
    if (t.source.size() != we.source_words.size() ||
        t.target.size() != we.target_words.size())
      continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < t.source.size(); ++i)
      ok = lex.source.categories(we.source_words[i]).count(key_of(t.source[i])) > 0;
    for (std::size_t i = 0; ok && i < t.target.size(); ++i)
      ok = tcats[i].count(key_of(t.target[i])) > 0;
    if (!ok) continue;
    add_candidate(result, seen,
                  {instantiate(t, we.source_words, we.target_words),
                   "template:" + std::to_string(entry.rank), word_diags});
  }
  if (result.candidates.empty())
    result.diagnostics.push_back(
        {DiagnosticKind::kNoTemplate, "no inventory template matches"});
  refresh_multiple_parses(result);
  return result;
}

GenerationResult generate_enumerative(const WordEquivalence &we,
                                      const Inventory &inv,
                                      const Lexicons &lex) {
  std::set<CatKey> wildcard;
  for (const auto &e : inv)
    for (const auto &c : e.templ.target) wildcard.insert(key_of(c));
  return generate_enumerative(we, inv, lex, wildcard);
}

std::vector<SelectedTemplate> select_phrasal_templates(
    const WordEquivalence &we, const std::vector<PhrasalTemplate> &pts,
    const Lexicon &source_lexicon) {
  for (const auto &w : we.source_words)
    if (!source_lexicon.contains(w)) throw UnknownWordError(w);

  std::multiset<std::string> wanted = gap_signature(we);
  std::vector<SelectedTemplate> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const PhrasalTemplate &pt = pts[i];
    if (pt.phrasal_side != Side::kTarget) continue;
    if (pt.lexical.size() != we.source_words.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; ok && k < pt.lexical.size(); ++k)
      ok = source_lexicon.categories(we.source_words[k])
               .count(key_of(pt.lexical[k])) > 0;
    if (!ok) continue;
    SelectedTemplate sel{i, {}};
    for (std::size_t a = 0; a < pt.alternatives.size(); ++a)
      if (gap_signature(pt.alternatives[a]) == wanted) sel.alternatives.push_back(a);
    if (!sel.alternatives.empty()) out.push_back(std::move(sel));
  }
  return out;
}

GenerationResult generate_generative(const WordEquivalence &we,
                                     const std::vector<PhrasalTemplate> &pts,
                                     const Lexicons &lex, const Grammar &g) {
  GenerationResult result;
  result.diagnostics = blocked_source_words(we, lex.source);
  if (!result.diagnostics.empty()) return result;

  std::vector<SelectedTemplate> selected =
      select_phrasal_templates(we, pts, lex.source);
  if (selected.empty()) {
    result.diagnostics.push_back(
        {DiagnosticKind::kNoTemplate, "no phrasal template matches"});
    return result;
  }

  std::vector<TokenCats> tokens;
  for (const auto &w : we.target_words)
    tokens.push_back({w, lookup(lex.target, w, UnknownPolicy::kWildcard, g)});

  std::vector<Diagnostic> word_diags = word_diagnostics(we, lex);
  std::set<std::string> seen;
  for (const auto &sel : selected) {
    const PhrasalTemplate &pt = pts[sel.index];
    std::set<IndexVar> lexical_vars = vars_of(pt.lexical);
    std::vector<LexicalItem> source;
    for (std::size_t k = 0; k < pt.lexical.size(); ++k)
      source.push_back({we.source_words[k], pt.lexical[k]});

    for (std::size_t a : sel.alternatives) {
      const PhrasalCat &start = pt.alternatives[a];
      std::vector<IndexVar> start_vars = start.all_vars();
      std::set<IndexVar> keep(start_vars.begin(), start_vars.end());
      auto parses = parse_all(g, start, tokens);
      for (std::size_t p = 0; p < parses.size(); ++p) {
        std::vector<LexCat> pre =
            rename_apart(parses[p].preterminals, keep, lexical_vars);
        Candidate c{Ltr{source, assemble_rhs(we.target_words, pre)},
                    "pt:" + std::to_string(sel.index + 1) +
                        " alt:" + std::to_string(a + 1) +
                        " parse:" + std::to_string(p + 1),
                    word_diags};
        add_candidate(result, seen, std::move(c));
      }
      if (parses.empty())
        result.diagnostics.push_back(
            {DiagnosticKind::kNoParse,
             "pt:" + std::to_string(sel.index + 1) + " " + format_cat(start)});
    }
  }
  refresh_multiple_parses(result);
  return result;
}

// ---------------------------------------------------------------------------
// Abstraction

std::vector<PhrasalTemplate> abstraction_candidates(const Template &t,
                                                    const Grammar &g,
                                                    Side side) {
  const std::vector<LexCat> &span = side == Side::kTarget ? t.target : t.source;
  const std::vector<LexCat> &other = side == Side::kTarget ? t.source : t.target;
  std::set<IndexVar> span_vars = vars_of(span);
  std::set<IndexVar> outside = vars_of(other);
  std::set<IndexVar> used = span_vars;
  used.insert(outside.begin(), outside.end());

  std::vector<PhrasalTemplate> out;
  std::set<std::string> seen;
  for (const PhrasalCat &shape : g.start_categories()) {
    // Give the start category names disjoint from the template's.
    std::map<IndexVar, IndexVar> apart;
    std::size_t next = 0;
    for (const auto &v : shape.all_vars()) {
      if (apart.count(v)) continue;
      while (used.count(canonical_var_name(next))) ++next;
      apart[v] = canonical_var_name(next++);
    }
    PhrasalCat start = rename(shape, apart);
    std::set<IndexVar> start_vars;
    for (const auto &[from, to] : apart) start_vars.insert(to);

    for (const ParseResult &r : parse_cats(g, start, span)) {
      std::map<IndexVar, IndexVar> preimage;  // start var -> span var
      std::set<IndexVar> images;
      bool ok = true;
      for (const auto &v : span_vars) {
        const IndexVar &image = r.bindings.at(v);
        if (!images.insert(image).second) ok = false;  // merged variables
        if (start_vars.count(image)) {
          preimage[image] = v;
        } else if (outside.count(v)) {
          ok = false;  // shared variable not exposed by the category
        }
      }
      if (!ok) continue;
      PhrasalTemplate pt{other, {rename(start, preimage)}, side};
      pt = canonicalize(pt);
      if (seen.insert(format_phrasal_template(pt)).second)
        out.push_back(std::move(pt));
    }
  }
  return out;
}

std::vector<AbstractionClass> abstraction_classes(
    const std::vector<Template> &ts, const Grammar &g, Side side) {
  std::vector<AbstractionClass> out;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (auto &pt : abstraction_candidates(ts[i], g, side)) {
      std::string key = format_phrasal_template(pt);
      auto it = index.find(key);
      if (it == index.end()) {
        it = index.emplace(key, out.size()).first;
        out.push_back({std::move(pt), {}});
      }
      out[it->second].members.push_back(i);
    }
  }
  return out;
}

std::vector<PhrasalTemplate> abstract_templates(const std::vector<Template> &ts,
                                                const Grammar &g, Side side) {
  std::vector<PhrasalTemplate> out;
  for (auto &cls : abstraction_classes(ts, g, side))
    out.push_back(std::move(cls.phrasal));
  return out;
}

std::vector<Template> derive_lexical_templates(const PhrasalTemplate &pt,
                                               const Grammar &g, int max_len) {
  std::vector<Template> out;
  std::set<std::string> seen;
  std::set<IndexVar> lexical_vars = vars_of(pt.lexical);
  for (const auto &alt : pt.alternatives) {
    std::vector<IndexVar> alt_vars = alt.all_vars();
    std::set<IndexVar> keep(alt_vars.begin(), alt_vars.end());
    for (const auto &seq : enumerate_expansions(g, alt, max_len)) {
      std::vector<LexCat> expansion = rename_apart(seq, keep, lexical_vars);
      Template t = pt.phrasal_side == Side::kTarget
                       ? Template{pt.lexical, expansion}
                       : Template{expansion, pt.lexical};
      t = canonicalize(t);
      if (seen.insert(format_template(t)).second) out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace ltrgen
