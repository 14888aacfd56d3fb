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
// Template inventory: frequency-ranked templates extracted from an LTR
// corpus, with incremental coverage.

#ifndef LTRGEN_EXTRACTION_HPP_
#define LTRGEN_EXTRACTION_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ltrgen/model.hpp"

namespace ltrgen {

struct InventoryEntry {
  Template templ;  // canonical
  std::int64_t count = 0;
  int rank = 0;  // 1-based
};

using Inventory = std::vector<InventoryEntry>;

// Coverage percentage kept as tenths of a percent (753 == 75.3%).
struct CoverageRow {
  int templates_used = 0;
  std::int64_t ltrs_covered = 0;
  std::int64_t coverage_tenths = 0;

  double coverage_pct() const { return coverage_tenths / 10.0; }
};

// Groups the corpus by canonical template. Ranked by descending count,
// ties by ascending canonical text. Throws on an empty corpus.
Inventory build_inventory(const std::vector<Ltr> &corpus);

// Throws if the inventory is empty or not rank-sorted.
std::vector<CoverageRow> coverage_table(const Inventory &inv);

// Keeps entries with count >= min_count, in rank order.
Inventory apply_cutoff(const Inventory &inv, std::int64_t min_count);

// 100 * num / den in tenths, rounded half up. 0 when den is 0.
std::int64_t percent_tenths(std::int64_t num, std::int64_t den);
std::string format_tenths(std::int64_t tenths);

// `count<TAB>template` lines.
std::string format_inventory(const Inventory &inv);
// Reads an inventory file; lines without a count label get count 0.
Inventory parse_inventory(std::string_view text);

std::string format_coverage_text(const std::vector<CoverageRow> &rows);
std::string format_coverage_csv(const std::vector<CoverageRow> &rows);

}  // namespace ltrgen

#endif  // LTRGEN_EXTRACTION_HPP_
