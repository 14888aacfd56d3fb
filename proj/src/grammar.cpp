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

#include "ltrgen/grammar.hpp"

#include <cctype>

#include "scanner.hpp"

namespace ltrgen {

std::string format_symbol(const Symbol &sym) {
  struct {
    std::string operator()(const PhrasalCat &c) const { return format_cat(c); }
    std::string operator()(const LexCat &c) const { return format_cat(c); }
    std::string operator()(const Epsilon &) const { return "eps"; }
  } visitor;
  return std::visit(visitor, sym);
}

std::string format_rule(const GrammarRule &rule) {
  std::string out = format_cat(rule.lhs) + " ->";
  for (const auto &sym : rule.rhs) out += " " + format_symbol(sym);
  return out;
}

Grammar::Grammar(std::vector<GrammarRule> rules) : rules_(std::move(rules)) {
  for (const auto &rule : rules_) {
    if (rule.rhs.empty()) throw Error("rule with an empty right-hand side");
    for (const auto &sym : rule.rhs) {
      if (std::holds_alternative<Epsilon>(sym) && rule.rhs.size() != 1)
        throw Error("epsilon must stand alone on the right-hand side");
      if (const auto *lex = std::get_if<LexCat>(&sym))
        preterminals_.insert(key_of(*lex));
    }
  }
}

std::vector<PhrasalCat> Grammar::start_categories() const {
  std::vector<PhrasalCat> out;
  std::set<std::string> seen;
  for (const auto &rule : rules_) {
    PhrasalTemplate probe{{}, {rule.lhs}, Side::kTarget};
    PhrasalCat cat = canonicalize(probe).alternatives.front();
    if (seen.insert(format_cat(cat)).second) out.push_back(std::move(cat));
  }
  return out;
}

GrammarRule parse_rule_line(std::string_view line) {
  detail::Scanner s(line);
  s.skip_ws();
  std::string text(s.rest());
  std::size_t arrow = text.find("->");
  if (arrow == std::string::npos) s.fail("expected '->' after the left-hand side");

  GrammarRule rule;
  try {
    rule.lhs = parse_phrasal_cat(std::string_view(text).substr(0, arrow));
  } catch (const SyntaxError &e) {
    throw SyntaxError(e.detail(), 0, s.column() + e.column() - 1);
  }

  int base = s.column() + static_cast<int>(arrow) + 2;
  std::string_view rhs = std::string_view(text).substr(arrow + 2);
  std::size_t pos = 0;
  while (true) {
    while (pos < rhs.size() && std::isspace(static_cast<unsigned char>(rhs[pos])))
      ++pos;
    if (pos >= rhs.size()) break;
    std::size_t end = pos;
    int depth = 0;
    while (end < rhs.size() &&
           (depth > 0 || !std::isspace(static_cast<unsigned char>(rhs[end])))) {
      if (rhs[end] == '(') ++depth;
      if (rhs[end] == ')') --depth;
      ++end;
    }
    std::string_view tok = rhs.substr(pos, end - pos);
    int col = base + static_cast<int>(pos);
    try {
      if (tok == "eps") {
        rule.rhs.emplace_back(Epsilon{});
      } else if (std::isupper(static_cast<unsigned char>(tok[0]))) {
        rule.rhs.emplace_back(parse_phrasal_cat(tok));
      } else {
        rule.rhs.emplace_back(parse_lex_cat(tok));
      }
    } catch (const SyntaxError &e) {
      throw SyntaxError(e.detail(), 0, col + e.column() - 1);
    }
    pos = end;
  }
  if (rule.rhs.empty())
    throw SyntaxError("empty right-hand side; write 'eps' for epsilon", 0,
                      base);
  for (const auto &sym : rule.rhs) {
    if (std::holds_alternative<Epsilon>(sym) && rule.rhs.size() != 1)
      throw SyntaxError("epsilon must stand alone on the right-hand side", 0,
                        base);
  }
  return rule;
}

Grammar load_grammar(std::string_view text) {
  std::vector<GrammarRule> rules;
  for (const auto &rl : split_rule_lines(text)) {
    try {
      rules.push_back(parse_rule_line(rl.body));
    } catch (const SyntaxError &e) {
      throw e.at_line(rl.line_number);
    }
  }
  return Grammar(std::move(rules));
}

}  // namespace ltrgen
