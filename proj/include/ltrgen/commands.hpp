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
// Batch pipeline behind the command-line tool: candidate generation,
// removal-only validation through a decisions file, and run metrics.
//
// Candidate file layout (one block per input equivalence):
//
//   # eq 1: sit in on sth <-> participar como observador en algo
//   c1<TAB>sit:iv(A,B,C) & ... <-> ... # eq=1; pt:1 alt:1 parse:1; Ambiguity(...)
//   # eq 2: ... ; UnknownWord(zzz)
//
// Stripping the id and the comment leaves a plain LTR line.

#ifndef LTRGEN_COMMANDS_HPP_
#define LTRGEN_COMMANDS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltrgen/extraction.hpp"
#include "ltrgen/generation.hpp"
#include "ltrgen/grammar.hpp"
#include "ltrgen/lexicon.hpp"
#include "ltrgen/model.hpp"

namespace ltrgen {

struct CandidateRecord {
  std::string id;
  int equivalence = 0;  // 1-based line index into the equivalence file
  Ltr ltr;
  std::string provenance;
  std::string diagnostics;
};

std::string format_candidate(const CandidateRecord &c);
// Throws SyntaxError on malformed lines and Error on missing ids or
// missing `eq=` provenance.
std::vector<CandidateRecord> parse_candidate_file(std::string_view text);

struct Metrics {
  std::int64_t in = 0;
  std::int64_t out = 0;
  std::int64_t val = 0;
  std::int64_t in_out = 0;
  std::int64_t in_val = 0;
  std::int64_t success_tenths = 0;  // 100 * in_val / in, tenths, half up
};

std::string format_metrics_text(const Metrics &m);
std::string format_metrics_csv(const Metrics &m);

struct GenerateInputs {
  const Lexicon *source_lexicon = nullptr;
  const Lexicon *target_lexicon = nullptr;
  const Inventory *inventory = nullptr;              // enumerative path
  const std::vector<PhrasalTemplate> *phrasal = nullptr;  // generative path
  const Grammar *grammar = nullptr;                  // required with phrasal
  Placeholders placeholders = default_placeholders();
  bool first_per_equivalence = false;
};

struct GenerateOutput {
  std::string candidates;  // candidate file text
  std::string log;         // key=value lines
  Metrics metrics;         // in, out, in_out filled
};

// Generates candidates for every line of the equivalence file. Each
// equivalence goes through the enumerative path when an inventory is
// given and the generative path when phrasal templates are given.
GenerateOutput cmd_generate(std::string_view equivalences,
                            const GenerateInputs &inputs);

// `id accept|reject` per line. Ids not listed are rejected. Returns the
// accepted candidates as LTR lines with `# id eq=N` comments.
std::string cmd_filter(std::string_view candidates, std::string_view decisions);

Metrics cmd_report(std::string_view equivalences, std::string_view candidates,
                   std::string_view validated);

// Number of non-blank, non-comment lines.
std::int64_t count_equivalences(std::string_view text);

}  // namespace ltrgen

#endif  // LTRGEN_COMMANDS_HPP_
