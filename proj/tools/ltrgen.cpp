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
// ltrgen: builds lexical transfer rules from word equivalences.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ltrgen/commands.hpp"
#include "ltrgen/extraction.hpp"
#include "ltrgen/generation.hpp"
#include "ltrgen/grammar.hpp"
#include "ltrgen/lexicon.hpp"
#include "ltrgen/model.hpp"

namespace {

using namespace ltrgen;

// Error tagged with the file it came from.
struct FileError : Error {
  FileError(const std::string &file, const std::string &what)
      : Error(file + ": " + what) {}
};

std::string read_file(const std::string &path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError(path, "cannot write file");
  out << text;
}

// Runs a loader, prefixing any error with the file name.
template <typename F>
auto load(const std::string &path, F parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const Error &e) {
    throw FileError(path, e.what());
  }
}

struct Options {
  std::string src_lexicon, tgt_lexicon, grammar, templates, phrasal;
  std::string placeholders, output, log, coverage;
  std::string format = "text";
  std::string side = "target";
  std::string start;
  long long cutoff = 0;
  int max_len = 5;
  bool first_per_equivalence = false;
  bool fold_case = false;
  bool classes = false;
  std::vector<std::string> inputs;
};

int run_extract(const Options &o) {
  auto corpus = load(o.inputs.at(0), [](const std::string &t) {
    return parse_ltr_file(t);
  });
  Inventory inv = build_inventory(corpus);
  auto rows = coverage_table(inv);
  Inventory kept = apply_cutoff(inv, o.cutoff);
  write_output(o.output, format_inventory(kept));
  if (!o.coverage.empty()) {
    write_output(o.coverage, o.format == "csv" ? format_coverage_csv(rows)
                                               : format_coverage_text(rows));
  }
  std::cerr << "ltrs=" << corpus.size() << " templates=" << inv.size()
            << " kept=" << kept.size() << "\n";
  return 0;
}

int run_generate(const Options &o) {
  bool fold = o.fold_case;
  Lexicon src = load(o.src_lexicon, [fold](const std::string &t) {
    return load_lexicon(t, fold);
  });
  Lexicon tgt = load(o.tgt_lexicon, [fold](const std::string &t) {
    return load_lexicon(t, fold);
  });

  GenerateInputs in;
  in.source_lexicon = &src;
  in.target_lexicon = &tgt;
  Inventory inv;
  std::vector<PhrasalTemplate> phrasal;
  Grammar grammar;
  if (!o.templates.empty()) {
    inv = load(o.templates, [](const std::string &t) { return parse_inventory(t); });
    in.inventory = &inv;
  }
  if (!o.phrasal.empty()) {
    phrasal = load(o.phrasal, [](const std::string &t) {
      return parse_phrasal_template_file(t);
    });
    in.phrasal = &phrasal;
  }
  if (!o.grammar.empty()) {
    grammar = load(o.grammar, [](const std::string &t) { return load_grammar(t); });
    in.grammar = &grammar;
  }
  if (!o.placeholders.empty())
    in.placeholders = load(o.placeholders, [](const std::string &t) {
      return load_placeholders(t);
    });
  in.first_per_equivalence = o.first_per_equivalence;

  GenerateOutput out = load(o.inputs.at(0), [&](const std::string &t) {
    return cmd_generate(t, in);
  });
  write_output(o.output, out.candidates);
  if (o.log.empty()) {
    std::cerr << out.log;
  } else {
    write_output(o.log, out.log);
  }
  return 0;
}

int run_abstract(const Options &o) {
  auto templates = load(o.inputs.at(0), [](const std::string &t) {
    std::vector<Template> out;
    for (auto &e : parse_inventory(t)) out.push_back(e.templ);
    return out;
  });
  Grammar g = load(o.grammar, [](const std::string &t) { return load_grammar(t); });
  Side side = o.side == "source" ? Side::kSource : Side::kTarget;
  std::string text;
  for (const auto &cls : abstraction_classes(templates, g, side)) {
    text += format_phrasal_template(cls.phrasal);
    if (o.classes) {
      text += " # members:";
      for (auto m : cls.members) text += " " + std::to_string(m + 1);
    }
    text += "\n";
  }
  write_output(o.output, text);
  return 0;
}

int run_expand(const Options &o) {
  auto pts = load(o.inputs.at(0), [](const std::string &t) {
    return parse_phrasal_template_file(t);
  });
  Grammar g = load(o.grammar, [](const std::string &t) { return load_grammar(t); });
  std::string text;
  for (const auto &pt : pts)
    for (const auto &t : derive_lexical_templates(pt, g, o.max_len))
      text += format_template(t) + "\n";
  write_output(o.output, text);
  return 0;
}

int run_filter(const Options &o) {
  std::string candidates = read_file(o.inputs.at(0));
  std::string decisions = read_file(o.inputs.at(1));
  write_output(o.output, cmd_filter(candidates, decisions));
  return 0;
}

int run_report(const Options &o) {
  Metrics m = cmd_report(read_file(o.inputs.at(0)), read_file(o.inputs.at(1)),
                         read_file(o.inputs.at(2)));
  write_output(o.output,
               o.format == "csv" ? format_metrics_csv(m) : format_metrics_text(m));
  return 0;
}

int run_parse(const Options &o) {
  Grammar g = load(o.grammar, [](const std::string &t) { return load_grammar(t); });
  Lexicon tgt;
  if (!o.tgt_lexicon.empty()) {
    bool fold = o.fold_case;
    tgt = load(o.tgt_lexicon, [fold](const std::string &t) {
      return load_lexicon(t, fold);
    });
  }
  PhrasalCat start = parse_phrasal_cat(o.start);
  std::vector<TokenCats> tokens;
  for (const auto &w : o.inputs)
    tokens.push_back({w, lookup(tgt, w, UnknownPolicy::kWildcard, g)});
  std::string text;
  for (const auto &r : parse_all(g, start, tokens)) text += format_tree(r.tree) + "\n";
  write_output(o.output, text);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Builds lexical transfer rules from word equivalences"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App *cmd) {
    cmd->add_option("--format", o.format, "Table format")
        ->check(CLI::IsMember({"text", "csv"}));
  };
  auto add_output = [&](CLI::App *cmd) {
    cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  };

  auto *extract = app.add_subcommand("extract", "Build a template inventory from an LTR corpus");
  extract->add_option("corpus", o.inputs, "LTR file")->required()->expected(1);
  extract->add_option("--coverage", o.coverage, "Write the incremental coverage table");
  extract->add_option("--cutoff", o.cutoff, "Drop templates seen fewer times")
      ->check(CLI::NonNegativeNumber);
  add_format(extract);
  add_output(extract);

  auto *generate = app.add_subcommand("generate", "Generate candidate LTRs");
  generate->add_option("equivalences", o.inputs, "Word equivalence file")->required()->expected(1);
  generate->add_option("--src-lexicon", o.src_lexicon, "Source lexicon")->required();
  generate->add_option("--tgt-lexicon", o.tgt_lexicon, "Target lexicon")->required();
  generate->add_option("--templates", o.templates, "Template inventory (enumerative)");
  generate->add_option("--phrasal-templates", o.phrasal, "Phrasal templates (generative)");
  generate->add_option("--grammar", o.grammar, "Target grammar");
  generate->add_option("--placeholders", o.placeholders, "Placeholder token file");
  generate->add_option("--log", o.log, "Run log file (default stderr)");
  generate->add_flag("--first-per-equivalence", o.first_per_equivalence,
                     "Keep only the first candidate of each equivalence");
  generate->add_flag("--fold-case", o.fold_case, "Case-insensitive lexicon lookup");
  add_output(generate);

  auto *abstract = app.add_subcommand("abstract", "Abstract templates into phrasal templates");
  abstract->add_option("templates", o.inputs, "Template or inventory file")->required()->expected(1);
  abstract->add_option("--grammar", o.grammar, "Grammar")->required();
  abstract->add_option("--side", o.side, "Side to abstract")
      ->check(CLI::IsMember({"source", "target"}));
  abstract->add_flag("--classes", o.classes, "List the member templates of each class");
  add_output(abstract);

  auto *expand = app.add_subcommand("expand", "Derive lexical templates from phrasal templates");
  expand->add_option("phrasal", o.inputs, "Phrasal template file")->required()->expected(1);
  expand->add_option("--grammar", o.grammar, "Grammar")->required();
  expand->add_option("--max-len", o.max_len, "Maximum expansion length")
      ->check(CLI::PositiveNumber);
  add_output(expand);

  auto *filter = app.add_subcommand("filter", "Keep the accepted candidates");
  filter->add_option("files", o.inputs, "Candidate file and decisions file")
      ->required()->expected(2);
  add_output(filter);

  auto *report = app.add_subcommand("report", "Compute run metrics");
  report->add_option("files", o.inputs, "Equivalence, candidate and validated files")
      ->required()->expected(3);
  add_format(report);
  add_output(report);

  auto *parse = app.add_subcommand("parse", "Show all parses of target words");
  parse->add_option("words", o.inputs, "Target words")->required();
  parse->add_option("--grammar", o.grammar, "Grammar")->required();
  parse->add_option("--start", o.start, "Start category, e.g. 'VP(A,B)/NP(D)'")->required();
  parse->add_option("--tgt-lexicon", o.tgt_lexicon, "Target lexicon");
  parse->add_flag("--fold-case", o.fold_case, "Case-insensitive lexicon lookup");
  add_output(parse);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*extract) return run_extract(o);
    if (*generate) return run_generate(o);
    if (*abstract) return run_abstract(o);
    if (*expand) return run_expand(o);
    if (*filter) return run_filter(o);
    if (*report) return run_report(o);
    if (*parse) return run_parse(o);
  } catch (const std::exception &e) {
    std::cerr << "ltrgen: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
