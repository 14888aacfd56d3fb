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

#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ltrgen/extraction.hpp"
#include "ltrgen/generation.hpp"

using namespace ltrgen;

namespace {

std::string slurp(const std::string &name) {
  std::ifstream in(std::string(LTRGEN_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char *kSit = "sit in on sth <-> participar como observador en algo";
const char *kComplementRule =
    "sit:iv(A,B,C) & in:adv(C) & on:p(A,D) <-> participar:iv(A,B,E) & "
    "como:p(E,F) & observador:n(F) & en:p(A,D)";
const char *kVerbModifierRule =
    "sit:iv(A,B,C) & in:adv(C) & on:p(A,D) <-> participar:iv(A,B) & "
    "como:p(A,E) & observador:n(E) & en:p(A,D)";
const char *kNounModifierRule =
    "sit:iv(A,B,C) & in:adv(C) & on:p(A,D) <-> participar:iv(A,B,E) & "
    "como:p(E,F) & observador:n(F) & en:p(F,D)";

bool has(const GenerationResult &r, const char *ltr) {
  Ltr want = parse_ltr_line(ltr);
  return std::any_of(r.candidates.begin(), r.candidates.end(),
                     [&](const Candidate &c) { return alpha_equivalent(c.ltr, want); });
}

bool has_diag(const std::vector<Diagnostic> &ds, DiagnosticKind k) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic &d) { return d.kind == k; });
}

struct Fixture {
  Lexicon en = load_lexicon(slurp("en.lex"));
  Lexicon es = load_lexicon(slurp("es.lex"));
  Grammar es_grammar = load_grammar(slurp("es.grammar"));
  Grammar nbar = load_grammar(slurp("nbar.grammar"));
  std::vector<PhrasalTemplate> pts = parse_phrasal_template_file(slurp("phrasal.txt"));
  Placeholders ph = default_placeholders();
};

}  // namespace

TEST_CASE("word equivalences") {
  Placeholders ph = default_placeholders();
  WordEquivalence we = parse_word_equivalence(kSit, ph);
  CHECK(we.source_words == std::vector<std::string>{"sit", "in", "on"});
  CHECK(we.target_words ==
        std::vector<std::string>{"participar", "como", "observador", "en"});
  REQUIRE(we.gap_markers.size() == 2);
  CHECK(we.gap_markers[0] == GapMarker{Side::kSource, 3, "NP", "sth"});
  CHECK(we.gap_markers[1] == GapMarker{Side::kTarget, 4, "NP", "algo"});
  CHECK(format_word_equivalence(we, ph) == kSit);
  we.gap_markers[1].token.clear();
  CHECK(format_word_equivalence(we, ph).find("en algn") != std::string::npos);

  CHECK_THROWS_AS(parse_word_equivalence("sit in on", ph), SyntaxError);
  CHECK_THROWS_AS(parse_word_equivalence("sth <-> algo", ph), SyntaxError);

  Placeholders custom = load_placeholders("# tokens\nX NP\nY PP\n");
  CHECK(custom.size() == 2);
  CHECK(custom.at("Y") == "PP");
  CHECK_THROWS_AS(load_placeholders("X\n"), SyntaxError);
}

TEST_CASE("generative path on the worked example") {
  Fixture f;
  WordEquivalence we = parse_word_equivalence(kSit, f.ph);
  auto sel = select_phrasal_templates(we, f.pts, f.en);
  REQUIRE(sel.size() == 2);
  CHECK(sel[0].index == 0);
  CHECK(sel[1].index == 1);

  GenerationResult r = generate_generative(we, f.pts, {f.en, f.es}, f.es_grammar);
  CHECK(r.candidates.size() >= 3);
  CHECK(has(r, kComplementRule));
  CHECK(has(r, kVerbModifierRule));
  CHECK(has(r, kNounModifierRule));
  CHECK(alpha_equivalent(r.candidates[0].ltr, parse_ltr_line(kComplementRule)));
  CHECK(r.candidates[0].provenance == "pt:1 alt:1 parse:1");
  CHECK(has_diag(r.candidates[0].diagnostics, DiagnosticKind::kAmbiguity));
  CHECK(has_diag(r.candidates[0].diagnostics, DiagnosticKind::kMultipleParses));
  CHECK(r.diagnostics.empty());
  // Candidates are canonical and pairwise distinct.
  std::set<std::string> texts;
  for (const auto &c : r.candidates) {
    CHECK(canonicalize(c.ltr) == c.ltr);
    texts.insert(format_ltr(c.ltr));
  }
  CHECK(texts.size() == r.candidates.size());
}

TEST_CASE("unknown source words block generation") {
  Fixture f;
  WordEquivalence we = parse_word_equivalence("sit zzz <-> participar", f.ph);
  GenerationResult r = generate_generative(we, f.pts, {f.en, f.es}, f.es_grammar);
  CHECK(r.candidates.empty());
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(format_diagnostic(r.diagnostics[0]) == "UnknownWord(zzz)");
  CHECK_THROWS_AS(select_phrasal_templates(we, f.pts, f.en), UnknownWordError);

  Inventory inv = build_inventory({parse_ltr_line("a:iv(A,B) & b:n(C) <-> c:iv(A,B)")});
  GenerationResult e = generate_enumerative(we, inv, {f.en, f.es});
  CHECK(e.candidates.empty());
  CHECK(format_diagnostic(e.diagnostics.at(0)) == "UnknownWord(zzz)");
}

TEST_CASE("unknown target words match any preterminal") {
  Fixture f;
  Lexicon es;
  std::istringstream in(slurp("es.lex"));
  std::string line, text;
  while (std::getline(in, line))
    if (line.rfind("observador", 0) != 0) text += line + "\n";
  es = load_lexicon(text);
  REQUIRE_FALSE(es.contains("observador"));

  WordEquivalence we = parse_word_equivalence(kSit, f.ph);
  GenerationResult r = generate_generative(we, f.pts, {f.en, es}, f.es_grammar);
  CHECK(has(r, kComplementRule));
  CHECK(std::any_of(r.candidates[0].diagnostics.begin(), r.candidates[0].diagnostics.end(),
                    [](const Diagnostic &d) {
                      return format_diagnostic(d) ==
                             "UnknownWord(observador (target, any category))";
                    }));
}

TEST_CASE("no template and no parse") {
  Fixture f;
  GenerationResult none = generate_generative(parse_word_equivalence("on <-> en", f.ph),
                                              f.pts, {f.en, f.es}, f.es_grammar);
  CHECK(none.candidates.empty());
  CHECK(has_diag(none.diagnostics, DiagnosticKind::kNoTemplate));

  GenerationResult bad = generate_generative(
      parse_word_equivalence("sit in on sth <-> en participar algo", f.ph), f.pts,
      {f.en, f.es}, f.es_grammar);
  CHECK(bad.candidates.empty());
  CHECK(has_diag(bad.diagnostics, DiagnosticKind::kNoParse));

  // Gap markers must agree with the template's gaps.
  auto sel = select_phrasal_templates(
      parse_word_equivalence("sit in on <-> participar como observador en", f.ph),
      f.pts, f.en);
  CHECK(sel.empty());
}

TEST_CASE("enumerative path") {
  Fixture f;
  Inventory inv = parse_inventory(slurp("buddha.templates"));
  REQUIRE(inv.size() == 2);

  GenerationResult r = generate_enumerative(parse_word_equivalence("buddha <-> buda", f.ph),
                                            inv, {f.en, f.es});
  REQUIRE(r.candidates.size() == 1);
  CHECK(format_ltr(r.candidates[0].ltr) == "buddha:n(A) <-> buda:n(A)");
  CHECK(r.candidates[0].provenance == "template:1");

  GenerationResult w = generate_enumerative(
      parse_word_equivalence("wonderland <-> pa\xC3\xADs de las maravillas", f.ph), inv,
      {f.en, f.es});
  REQUIRE(w.candidates.size() == 1);
  CHECK(format_ltr(w.candidates[0].ltr) ==
        "wonderland:n(A) <-> pa\xC3\xADs:n(A) & de:p(A,B) & las:d(B) & maravillas:n(B)");
  CHECK(w.candidates[0].provenance == "template:2");

  // Unknown target word: wildcard over the inventory's target categories.
  GenerationResult u = generate_enumerative(
      parse_word_equivalence("halloween <-> calabaza", f.ph), inv, {f.en, f.es});
  REQUIRE(u.candidates.size() == 1);
  CHECK(has_diag(u.candidates[0].diagnostics, DiagnosticKind::kUnknownWord));

  GenerationResult n = generate_enumerative(
      parse_word_equivalence("halloween <-> buda buda", f.ph), inv, {f.en, f.es});
  CHECK(n.candidates.empty());
  CHECK(has_diag(n.diagnostics, DiagnosticKind::kNoTemplate));
}

TEST_CASE("merging results deduplicates") {
  Fixture f;
  WordEquivalence we = parse_word_equivalence(kSit, f.ph);
  GenerationResult a = generate_generative(we, f.pts, {f.en, f.es}, f.es_grammar);
  GenerationResult b = merge_results(a, a);
  CHECK(b.candidates.size() == a.candidates.size());

  GenerationResult empty;
  empty.diagnostics.push_back({DiagnosticKind::kNoTemplate, "x"});
  GenerationResult c = merge_results(empty, a);
  CHECK_FALSE(has_diag(c.diagnostics, DiagnosticKind::kNoTemplate));
}

TEST_CASE("assembling a right-hand side") {
  auto items = assemble_rhs({"de", "las"}, {parse_lex_cat("p(A,B)"), parse_lex_cat("d(B)")});
  CHECK(format_item(items[1]) == "las:d(B)");
  CHECK_THROWS_AS(assemble_rhs({"de"}, {}), Error);
}

TEST_CASE("abstraction of the nominal templates") {
  Fixture f;
  std::vector<Template> ts;
  for (const auto &e : parse_inventory(slurp("buddha.templates"))) ts.push_back(e.templ);
  auto classes = abstraction_classes(ts, f.nbar, Side::kTarget);
  REQUIRE(classes.size() == 1);
  CHECK(format_phrasal_template(classes[0].phrasal) == "n(A) <-> NBAR(A)");
  CHECK(classes[0].members == std::vector<std::size_t>{0, 1});

  // Variables shared with the other side must be exposed by the category.
  Template leaky = parse_template_line("n(A) & d(B) <-> n(A) & p(A,B) & d(B) & n(B)");
  CHECK(abstraction_candidates(leaky, f.nbar, Side::kTarget).empty());
  // Exposed variables may not be merged.
  Template merged = parse_template_line("n(A) & d(B) <-> n(A)");
  CHECK(abstraction_candidates(merged, f.nbar, Side::kTarget).size() == 1);

  auto src = abstraction_candidates(parse_template_line("n(A) <-> n(A)"), f.nbar,
                                    Side::kSource);
  REQUIRE(src.size() == 1);
  CHECK(format_phrasal_template(src[0]) == "NBAR(A) <-> n(A)");
}

TEST_CASE("deriving lexical templates") {
  Fixture f;
  PhrasalTemplate pt = parse_phrasal_template_line("n(A) <-> NBAR(A)");
  auto ts = derive_lexical_templates(pt, f.nbar, 7);
  std::vector<std::string> lines;
  for (const auto &t : ts) lines.push_back(format_template(t));
  CHECK(lines == std::vector<std::string>{
                     "n(A) <-> n(A)",
                     "n(A) <-> n(A) & p(A,B) & d(B) & n(B)",
                     "n(A) <-> n(A) & p(A,B) & d(B) & n(B) & p(B,C) & d(C) & n(C)"});
  for (const auto &t : ts) {
    auto back = abstraction_candidates(t, f.nbar, Side::kTarget);
    CHECK(std::find(back.begin(), back.end(), canonicalize(pt)) != back.end());
  }

  // Lexical variables never collide with fresh expansion variables.
  PhrasalTemplate wide = parse_phrasal_template_line("n(A) & p(B,C) <-> NBAR(A)");
  for (const auto &t : derive_lexical_templates(wide, f.nbar, 4))
    CHECK(format_template(t).find("p(B,C) <-> n(A)") != std::string::npos);
  CHECK(derive_lexical_templates(wide, f.nbar, 4).size() == 2);
}
