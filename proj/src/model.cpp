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

#include "ltrgen/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "scanner.hpp"

namespace ltrgen {

SyntaxError::SyntaxError(const std::string &message, int line, int column)
    : Error([&] {
        std::ostringstream os;
        if (line > 0) os << "line " << line << ", ";
        if (column > 0) os << "column " << column << ": ";
        os << message;
        return os.str();
      }()),
      detail_(message),
      line_(line),
      column_(column) {}

SyntaxError SyntaxError::at_line(int line) const {
  return SyntaxError(detail_, line, column_);
}

bool is_valid_var_name(std::string_view name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
  });
}

std::string canonical_var_name(std::size_t n) {
  // Bijective base 26.
  std::string out;
  ++n;
  while (n > 0) {
    --n;
    out.insert(out.begin(), static_cast<char>('A' + n % 26));
    n /= 26;
  }
  return out;
}

std::vector<IndexVar> PhrasalCat::all_vars() const {
  std::vector<IndexVar> out = indices;
  for (const auto &gap : gaps)
    out.insert(out.end(), gap.indices.begin(), gap.indices.end());
  return out;
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

void append_indices(std::string &out, const std::vector<IndexVar> &indices) {
  if (indices.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += indices[i];
  }
  out += ')';
}

template <typename T, typename F>
std::string join(const std::vector<T> &xs, std::string_view sep, F f) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += f(xs[i]);
  }
  return out;
}

}  // namespace

std::string format_cat(const LexCat &cat) {
  std::string out = cat.name;
  append_indices(out, cat.indices);
  return out;
}

std::string format_cat(const PhrasalCat &cat) {
  std::string out = cat.name;
  append_indices(out, cat.indices);
  for (const auto &gap : cat.gaps) {
    out += '/';
    out += format_cat(gap);
  }
  return out;
}

std::string format_cat_key(const CatKey &key) {
  return key.name + "/" + std::to_string(key.arity);
}

std::string format_item(const LexicalItem &item) {
  return item.word + ":" + format_cat(item.cat);
}

std::string format_ltr(const Ltr &ltr) {
  auto f = [](const LexicalItem &i) { return format_item(i); };
  return join(ltr.source, " & ", f) + " <-> " + join(ltr.target, " & ", f);
}

std::string format_template(const Template &t) {
  auto f = [](const LexCat &c) { return format_cat(c); };
  return join(t.source, " & ", f) + " <-> " + join(t.target, " & ", f);
}

std::string format_phrasal_template(const PhrasalTemplate &pt) {
  std::string lex = join(pt.lexical, " & ",
                         [](const LexCat &c) { return format_cat(c); });
  std::string phr = join(pt.alternatives, " | ",
                         [](const PhrasalCat &c) { return format_cat(c); });
  return pt.phrasal_side == Side::kTarget ? lex + " <-> " + phr
                                          : phr + " <-> " + lex;
}

std::string normalize_ws(std::string_view line) {
  std::string out;
  bool pending_space = false;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using detail::Scanner;

std::vector<IndexVar> parse_index_list(Scanner &s) {
  std::vector<IndexVar> out;
  if (!s.peek('(')) return out;
  int open_column = s.column();
  s.advance();
  s.skip_ws();
  if (s.peek(')')) s.fail("empty index list; write arity-0 categories "
                          "without parentheses");
  while (true) {
    s.skip_ws();
    int col = s.column();
    std::string var = s.identifier();
    if (!is_valid_var_name(var))
      throw SyntaxError("expected an index variable (uppercase identifier)",
                        0, col);
    out.push_back(std::move(var));
    s.skip_ws();
    if (s.peek(',')) {
      s.advance();
      continue;
    }
    if (s.peek(')')) {
      s.advance();
      break;
    }
    throw SyntaxError("unclosed parenthesis", 0, open_column);
  }
  return out;
}

LexCat scan_lex_cat(Scanner &s) {
  s.skip_ws();
  int col = s.column();
  std::string name = s.identifier();
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    throw SyntaxError("expected a lexical category (lowercase label)", 0, col);
  return LexCat{std::move(name), parse_index_list(s)};
}

PhrasalCat scan_simple_phrasal(Scanner &s) {
  s.skip_ws();
  int col = s.column();
  std::string name = s.identifier();
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
    throw SyntaxError("expected a phrasal category (uppercase label)", 0, col);
  return PhrasalCat{std::move(name), parse_index_list(s), {}};
}

PhrasalCat scan_phrasal_cat(Scanner &s) {
  PhrasalCat cat = scan_simple_phrasal(s);
  while (s.peek('/')) {
    s.advance();
    cat.gaps.push_back(scan_simple_phrasal(s));
  }
  return cat;
}

bool is_word_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != ':' &&
         c != '&' && c != '|' && c != '(' && c != ')' && c != ',' && c != '#';
}

LexicalItem scan_item(Scanner &s) {
  s.skip_ws();
  int col = s.column();
  std::string word = s.take_while(is_word_char);
  if (word.empty()) throw SyntaxError("expected a word", 0, col);
  if (!s.peek(':'))
    throw SyntaxError("expected ':' after word '" + word + "'", 0, s.column());
  s.advance();
  if (s.at_end() || std::isspace(static_cast<unsigned char>(s.current())))
    s.fail("expected a category after ':'");
  return LexicalItem{std::move(word), scan_lex_cat(s)};
}

template <typename F>
auto scan_sequence(Scanner &s, F item) {
  std::vector<decltype(item(s))> out;
  out.push_back(item(s));
  s.skip_ws();
  while (s.peek('&')) {
    s.advance();
    out.push_back(item(s));
    s.skip_ws();
  }
  return out;
}

void expect_arrow(Scanner &s) {
  s.skip_ws();
  if (!s.consume_arrow()) s.fail("expected '<->' between rule sides");
}

void expect_end(Scanner &s) {
  s.skip_ws();
  if (!s.at_end()) s.fail("unexpected trailing text");
}

// Whether the side starting at the scanner position begins with a
// phrasal (uppercase) label.
bool phrasal_ahead(Scanner s) {
  s.skip_ws();
  return !s.at_end() && std::isupper(static_cast<unsigned char>(s.current()));
}

}  // namespace

LexCat parse_lex_cat(std::string_view text) {
  Scanner s(text);
  LexCat cat = scan_lex_cat(s);
  expect_end(s);
  return cat;
}

PhrasalCat parse_phrasal_cat(std::string_view text) {
  Scanner s(text);
  PhrasalCat cat = scan_phrasal_cat(s);
  expect_end(s);
  return cat;
}

Ltr parse_ltr_line(std::string_view line) {
  Scanner s(line);
  Ltr ltr;
  ltr.source = scan_sequence(s, scan_item);
  expect_arrow(s);
  ltr.target = scan_sequence(s, scan_item);
  expect_end(s);
  return ltr;
}

Template parse_template_line(std::string_view line) {
  Scanner s(line);
  Template t;
  t.source = scan_sequence(s, scan_lex_cat);
  expect_arrow(s);
  t.target = scan_sequence(s, scan_lex_cat);
  expect_end(s);
  return t;
}

PhrasalTemplate parse_phrasal_template_line(std::string_view line) {
  Scanner s(line);
  PhrasalTemplate pt;
  auto alternatives = [&] {
    std::vector<PhrasalCat> out{scan_phrasal_cat(s)};
    s.skip_ws();
    while (s.peek('|')) {
      s.advance();
      out.push_back(scan_phrasal_cat(s));
      s.skip_ws();
    }
    return out;
  };
  if (phrasal_ahead(s)) {
    pt.phrasal_side = Side::kSource;
    pt.alternatives = alternatives();
    expect_arrow(s);
    pt.lexical = scan_sequence(s, scan_lex_cat);
  } else {
    pt.phrasal_side = Side::kTarget;
    pt.lexical = scan_sequence(s, scan_lex_cat);
    expect_arrow(s);
    if (!phrasal_ahead(s)) s.fail("expected a phrasal category side");
    pt.alternatives = alternatives();
  }
  expect_end(s);
  return pt;
}

std::vector<RuleLine> split_rule_lines(std::string_view text) {
  std::vector<RuleLine> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();

    RuleLine rl;
    rl.line_number = number;
    std::size_t hash = raw.find('#');
    std::string_view body = std::string_view(raw).substr(0, hash);
    if (hash != std::string::npos) rl.comment = normalize_ws(raw.substr(hash + 1));

    std::size_t tab = body.find('\t');
    if (tab != std::string_view::npos) {
      std::string_view label = body.substr(0, tab);
      std::string rest = normalize_ws(body.substr(tab + 1));
      bool plain = !label.empty() &&
                   std::all_of(label.begin(), label.end(), [](char c) {
                     return std::isalnum(static_cast<unsigned char>(c)) ||
                            c == '_' || c == '-' || c == '.';
                   });
      if (plain && !rest.empty() && std::string_view("&<-|").find(rest[0]) ==
                                           std::string_view::npos) {
        rl.label = std::string(label);
        body = body.substr(tab + 1);
      }
    }
    if (normalize_ws(body).empty()) continue;
    rl.body = std::string(body);
    out.push_back(std::move(rl));
  }
  return out;
}

namespace {

template <typename T, typename F>
std::vector<T> parse_file(std::string_view text, F parse_line) {
  std::vector<T> out;
  for (const auto &rl : split_rule_lines(text)) {
    try {
      out.push_back(parse_line(rl.body));
    } catch (const SyntaxError &e) {
      throw e.at_line(rl.line_number);
    }
  }
  return out;
}

}  // namespace

std::vector<Ltr> parse_ltr_file(std::string_view text) {
  return parse_file<Ltr>(text, parse_ltr_line);
}

std::vector<Template> parse_template_file(std::string_view text) {
  return parse_file<Template>(text, parse_template_line);
}

std::vector<PhrasalTemplate> parse_phrasal_template_file(
    std::string_view text) {
  return parse_file<PhrasalTemplate>(text, parse_phrasal_template_line);
}

// ---------------------------------------------------------------------------
// Renaming

namespace {

class Renamer {
 public:
  void visit(const std::vector<IndexVar> &vars) {
    for (const auto &v : vars) {
      if (!names_.count(v)) names_[v] = canonical_var_name(names_.size());
    }
  }
  const std::map<IndexVar, IndexVar> &names() const { return names_; }

 private:
  std::map<IndexVar, IndexVar> names_;
};

}  // namespace

LexCat rename(const LexCat &cat, const std::map<IndexVar, IndexVar> &names) {
  LexCat out = cat;
  for (auto &v : out.indices) {
    auto it = names.find(v);
    if (it != names.end()) v = it->second;
  }
  return out;
}

PhrasalCat rename(const PhrasalCat &cat,
                  const std::map<IndexVar, IndexVar> &names) {
  PhrasalCat out = cat;
  for (auto &v : out.indices) {
    auto it = names.find(v);
    if (it != names.end()) v = it->second;
  }
  for (auto &gap : out.gaps) gap = rename(gap, names);
  return out;
}

Template rename(const Template &t, const std::map<IndexVar, IndexVar> &names) {
  Template out;
  for (const auto &c : t.source) out.source.push_back(rename(c, names));
  for (const auto &c : t.target) out.target.push_back(rename(c, names));
  return out;
}

Template canonicalize(const Template &t) {
  Renamer r;
  for (const auto &c : t.source) r.visit(c.indices);
  for (const auto &c : t.target) r.visit(c.indices);
  return rename(t, r.names());
}

Ltr canonicalize(const Ltr &ltr) {
  Renamer r;
  for (const auto &i : ltr.source) r.visit(i.cat.indices);
  for (const auto &i : ltr.target) r.visit(i.cat.indices);
  Ltr out = ltr;
  for (auto &i : out.source) i.cat = rename(i.cat, r.names());
  for (auto &i : out.target) i.cat = rename(i.cat, r.names());
  return out;
}

PhrasalTemplate canonicalize(const PhrasalTemplate &pt) {
  Renamer r;
  for (const auto &c : pt.lexical) r.visit(c.indices);
  for (const auto &a : pt.alternatives) r.visit(a.all_vars());
  PhrasalTemplate out;
  out.phrasal_side = pt.phrasal_side;
  for (const auto &c : pt.lexical) out.lexical.push_back(rename(c, r.names()));
  std::set<std::string> seen;
  for (const auto &a : pt.alternatives) {
    PhrasalCat renamed = rename(a, r.names());
    if (seen.insert(format_cat(renamed)).second)
      out.alternatives.push_back(std::move(renamed));
  }
  return out;
}

bool alpha_equivalent(const Template &a, const Template &b) {
  return canonicalize(a) == canonicalize(b);
}

bool alpha_equivalent(const Ltr &a, const Ltr &b) {
  return canonicalize(a) == canonicalize(b);
}

Template strip_words(const Ltr &ltr) {
  Template t;
  for (const auto &i : ltr.source) t.source.push_back(i.cat);
  for (const auto &i : ltr.target) t.target.push_back(i.cat);
  return canonicalize(t);
}

Ltr instantiate(const Template &t, const std::vector<std::string> &source_words,
                const std::vector<std::string> &target_words) {
  if (t.source.size() != source_words.size() ||
      t.target.size() != target_words.size())
    throw Error("instantiate: word count does not match template length");
  Ltr ltr;
  for (std::size_t i = 0; i < t.source.size(); ++i)
    ltr.source.push_back({source_words[i], t.source[i]});
  for (std::size_t i = 0; i < t.target.size(); ++i)
    ltr.target.push_back({target_words[i], t.target[i]});
  return ltr;
}

}  // namespace ltrgen
