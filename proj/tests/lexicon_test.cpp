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

#include "doctest.h"
#include "ltrgen/grammar.hpp"
#include "ltrgen/lexicon.hpp"

using namespace ltrgen;

TEST_CASE("lexicon files") {
  Lexicon lex = load_lexicon(
      "# comment\n"
      "sit iv/3 tv/3\n"
      "\n"
      "on p/2   # trailing comment\n"
      "on p/2\n");
  CHECK(lex.size() == 2);
  CHECK(lex.contains("sit"));
  CHECK_FALSE(lex.contains("Sit"));
  CHECK(lex.categories("sit") == std::set<CatKey>{{"iv", 3}, {"tv", 3}});
  CHECK(lex.categories("on").size() == 1);
  CHECK(lex.categories("zzz").empty());

  try {
    load_lexicon("ok n/1\nbad n\n");
    FAIL("expected an error");
  } catch (const SyntaxError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_lexicon("lonely\n"), SyntaxError);
  CHECK_THROWS_AS(load_lexicon("w N/1\n"), SyntaxError);
  CHECK_THROWS_AS(load_lexicon("w n/x\n"), SyntaxError);
}

TEST_CASE("case folding") {
  Lexicon lex = load_lexicon("Buddha n/1\n", true);
  CHECK(lex.contains("buddha"));
  CHECK(lex.contains("BUDDHA"));
}

TEST_CASE("lookup policies") {
  Lexicon lex = load_lexicon("en p/2\n");
  Grammar g = load_grammar("NP(F) -> n(F)\nPP(E,F) -> p(E,F) NP(F)\n");
  CHECK(lookup(lex, "en", UnknownPolicy::kBlock, g) == std::set<CatKey>{{"p", 2}});
  CHECK_THROWS_AS(lookup(lex, "zzz", UnknownPolicy::kBlock, g), UnknownWordError);
  CHECK(lookup(lex, "zzz", UnknownPolicy::kWildcard, g) ==
        std::set<CatKey>{{"n", 1}, {"p", 2}});
  try {
    lookup(lex, "zzz", UnknownPolicy::kBlock, g);
  } catch (const UnknownWordError &e) {
    CHECK(e.word() == "zzz");
  }
}

TEST_CASE("ambiguity and unknown-word flags") {
  Lexicon lex = load_lexicon("sit iv/3 tv/3\non p/2\nin adv/1 n/1 p/2\n");
  auto sit = ambiguity_flags(lex, "sit");
  REQUIRE(sit.size() == 1);
  CHECK(format_diagnostic(sit[0]) == "Ambiguity(sit: iv/3 tv/3)");
  CHECK(ambiguity_flags(lex, "on").empty());
  CHECK(ambiguity_flags(lex, "in")[0].kind == DiagnosticKind::kAmbiguity);
  auto zzz = ambiguity_flags(lex, "zzz");
  REQUIRE(zzz.size() == 1);
  CHECK(format_diagnostic(zzz[0]) == "UnknownWord(zzz)");
  CHECK(diagnostic_name(DiagnosticKind::kMultipleParses) == "MultipleParses");
  CHECK(diagnostic_name(DiagnosticKind::kNoTemplate) == "NoTemplate");
  CHECK(diagnostic_name(DiagnosticKind::kNoParse) == "NoParse");
}
