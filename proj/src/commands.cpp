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

#include "ltrgen/commands.hpp"

#include <charconv>
#include <cstdio>
#include <regex>
#include <set>
#include <sstream>

namespace ltrgen {

namespace {

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string body = normalize_ws(line.substr(0, line.find('#')));
    if (!body.empty()) out.emplace_back(number, body);
  }
  return out;
}

std::optional<int> find_eq(const std::string &comment) {
  static const std::regex kEq(R"((?:^|[\s;])eq=(\d+))");
  std::smatch m;
  if (!std::regex_search(comment, m, kEq)) return std::nullopt;
  return std::stoi(m[1].str());
}

std::string join_diagnostics(const std::vector<Diagnostic> &ds) {
  std::string out;
  for (const auto &d : ds) {
    if (!out.empty()) out += " ";
    out += format_diagnostic(d);
  }
  return out;
}

}  // namespace

std::int64_t count_equivalences(std::string_view text) {
  return static_cast<std::int64_t>(content_lines(text).size());
}

std::string format_candidate(const CandidateRecord &c) {
  std::string out = c.id + "\t" + format_ltr(c.ltr) + " # eq=" +
                    std::to_string(c.equivalence) + "; " + c.provenance;
  if (!c.diagnostics.empty()) out += "; " + c.diagnostics;
  return out;
}

std::vector<CandidateRecord> parse_candidate_file(std::string_view text) {
  std::vector<CandidateRecord> out;
  std::set<std::string> ids;
  for (const auto &rl : split_rule_lines(text)) {
    CandidateRecord c;
    try {
      c.ltr = parse_ltr_line(rl.body);
    } catch (const SyntaxError &e) {
      throw e.at_line(rl.line_number);
    }
    if (rl.label.empty())
      throw SyntaxError("candidate without an id", rl.line_number, 1);
    if (!ids.insert(rl.label).second)
      throw SyntaxError("duplicate candidate id '" + rl.label + "'",
                        rl.line_number, 1);
    auto eq = find_eq(rl.comment);
    if (!eq)
      throw Error("line " + std::to_string(rl.line_number) + ": candidate '" +
                  rl.label + "' has no eq= provenance");
    c.id = rl.label;
    c.equivalence = *eq;
    // "eq=N; provenance; diagnostics"
    std::string rest = rl.comment;
    std::size_t first = rest.find(';');
    if (first != std::string::npos) {
      rest = normalize_ws(rest.substr(first + 1));
      std::size_t second = rest.find(';');
      c.provenance = normalize_ws(rest.substr(0, second));
      if (second != std::string::npos)
        c.diagnostics = normalize_ws(rest.substr(second + 1));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string format_metrics_text(const Metrics &m) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%8s %8s %8s %8s %8s %8s\n%8lld %8lld %8lld %8lld %8lld %6s %%\n",
                "In", "Out", "Val", "InOut", "InVal", "%",
                static_cast<long long>(m.in), static_cast<long long>(m.out),
                static_cast<long long>(m.val), static_cast<long long>(m.in_out),
                static_cast<long long>(m.in_val),
                format_tenths(m.success_tenths).c_str());
  return buf;
}

std::string format_metrics_csv(const Metrics &m) {
  return "in,out,val,inout,inval,success\n" + std::to_string(m.in) + "," +
         std::to_string(m.out) + "," + std::to_string(m.val) + "," +
         std::to_string(m.in_out) + "," + std::to_string(m.in_val) + "," +
         format_tenths(m.success_tenths) + "\n";
}

GenerateOutput cmd_generate(std::string_view equivalences,
                            const GenerateInputs &inputs) {
  if (!inputs.source_lexicon || !inputs.target_lexicon)
    throw Error("generate: both lexicons are required");
  if (!inputs.inventory && !inputs.phrasal)
    throw Error("generate: need templates, phrasal templates, or both");
  if (inputs.phrasal && !inputs.grammar)
    throw Error("generate: phrasal templates need a grammar");

  Lexicons lex{*inputs.source_lexicon, *inputs.target_lexicon};
  std::set<CatKey> wildcard;
  if (inputs.grammar) wildcard = inputs.grammar->preterminals();
  if (inputs.inventory)
    for (const auto &e : *inputs.inventory)
      for (const auto &c : e.templ.target) wildcard.insert(key_of(c));

  GenerateOutput out;
  std::ostringstream cand, log;
  int next_id = 1;
  int eq = 0;
  for (const auto &[line_number, body] : content_lines(equivalences)) {
    ++eq;
    WordEquivalence we;
    try {
      we = parse_word_equivalence(body, inputs.placeholders);
    } catch (const SyntaxError &e) {
      throw e.at_line(line_number);
    }

    GenerationResult result;
    bool first = true;
    auto take = [&](GenerationResult r) {
      result = first ? std::move(r) : merge_results(std::move(result), r);
      first = false;
    };
    if (inputs.inventory)
      take(generate_enumerative(we, *inputs.inventory, lex, wildcard));
    if (inputs.phrasal)
      take(generate_generative(we, *inputs.phrasal, lex, *inputs.grammar));
    if (inputs.first_per_equivalence && result.candidates.size() > 1) {
      result.candidates.resize(1);
      std::erase_if(result.candidates.front().diagnostics,
                    [](const Diagnostic &d) {
                      return d.kind == DiagnosticKind::kMultipleParses;
                    });
    }

    cand << "# eq " << eq << ": " << body;
    if (!result.diagnostics.empty())
      cand << " ; " << join_diagnostics(result.diagnostics);
    cand << "\n";
    for (const auto &c : result.candidates) {
      CandidateRecord rec{"c" + std::to_string(next_id++), eq, c.ltr,
                          c.provenance, join_diagnostics(c.diagnostics)};
      cand << format_candidate(rec) << "\n";
    }

    log << "eq=" << eq << " line=" << line_number
        << " candidates=" << result.candidates.size();
    for (const auto &d : result.diagnostics)
      log << " " << diagnostic_name(d.kind) << "=" << d.detail;
    log << "\n";

    ++out.metrics.in;
    out.metrics.out += static_cast<std::int64_t>(result.candidates.size());
    if (!result.candidates.empty()) ++out.metrics.in_out;
  }
  log << "in=" << out.metrics.in << " out=" << out.metrics.out
      << " inout=" << out.metrics.in_out << "\n";
  out.candidates = cand.str();
  out.log = log.str();
  return out;
}

std::string cmd_filter(std::string_view candidates,
                       std::string_view decisions) {
  std::vector<CandidateRecord> records = parse_candidate_file(candidates);
  std::map<std::string, const CandidateRecord *> by_id;
  for (const auto &r : records) by_id[r.id] = &r;

  std::set<std::string> accepted;
  for (const auto &[line_number, body] : content_lines(decisions)) {
    std::istringstream fields(body);
    std::string id, verdict, extra;
    fields >> id >> verdict;
    if (verdict.empty() || (fields >> extra) ||
        (verdict != "accept" && verdict != "reject"))
      throw SyntaxError("expected 'id accept' or 'id reject'", line_number, 1);
    if (!by_id.count(id))
      throw Error("line " + std::to_string(line_number) +
                  ": decision for unknown candidate '" + id + "'");
    if (verdict == "accept") {
      accepted.insert(id);
    } else {
      accepted.erase(id);
    }
  }

  std::string out;
  for (const auto &r : records) {
    if (!accepted.count(r.id)) continue;
    out += format_ltr(r.ltr) + " # " + r.id + " eq=" +
           std::to_string(r.equivalence) + "\n";
  }
  return out;
}

Metrics cmd_report(std::string_view equivalences, std::string_view candidates,
                   std::string_view validated) {
  Metrics m;
  m.in = count_equivalences(equivalences);
  std::vector<CandidateRecord> records = parse_candidate_file(candidates);
  m.out = static_cast<std::int64_t>(records.size());

  std::set<int> with_output;
  std::map<std::string, std::set<int>> eq_by_ltr;
  for (const auto &r : records) {
    if (r.equivalence < 1 || r.equivalence > m.in)
      throw Error("candidate '" + r.id + "' refers to equivalence " +
                  std::to_string(r.equivalence) + " of " +
                  std::to_string(m.in));
    with_output.insert(r.equivalence);
    eq_by_ltr[format_ltr(canonicalize(r.ltr))].insert(r.equivalence);
  }
  m.in_out = static_cast<std::int64_t>(with_output.size());

  std::set<int> with_valid;
  for (const auto &rl : split_rule_lines(validated)) {
    Ltr ltr;
    try {
      ltr = parse_ltr_line(rl.body);
    } catch (const SyntaxError &e) {
      throw e.at_line(rl.line_number);
    }
    ++m.val;
    if (auto eq = find_eq(rl.comment)) {
      with_valid.insert(*eq);
      continue;
    }
    auto it = eq_by_ltr.find(format_ltr(canonicalize(ltr)));
    if (it == eq_by_ltr.end())
      throw Error("line " + std::to_string(rl.line_number) +
                  ": validated rule has no provenance and matches no candidate");
    with_valid.insert(it->second.begin(), it->second.end());
  }
  m.in_val = static_cast<std::int64_t>(with_valid.size());
  m.success_tenths = percent_tenths(m.in_val, m.in);
  return m;
}

}  // namespace ltrgen
