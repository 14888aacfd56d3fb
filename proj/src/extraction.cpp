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

#include "ltrgen/extraction.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

namespace ltrgen {

Inventory build_inventory(const std::vector<Ltr> &corpus) {
  if (corpus.empty()) throw Error("build_inventory: empty corpus");

  std::map<std::string, InventoryEntry> groups;
  for (const auto &ltr : corpus) {
    Template t = strip_words(ltr);
    auto &entry = groups[format_template(t)];
    if (entry.count == 0) entry.templ = std::move(t);
    ++entry.count;
  }

  Inventory inv;
  inv.reserve(groups.size());
  for (auto &[text, entry] : groups) inv.push_back(std::move(entry));
  // The map already orders by text; a stable sort on count keeps that.
  std::stable_sort(inv.begin(), inv.end(),
                   [](const InventoryEntry &a, const InventoryEntry &b) {
                     return a.count > b.count;
                   });
  for (std::size_t i = 0; i < inv.size(); ++i)
    inv[i].rank = static_cast<int>(i) + 1;
  return inv;
}

std::int64_t percent_tenths(std::int64_t num, std::int64_t den) {
  if (den <= 0) return 0;
  return (2000 * num + den) / (2 * den);
}

std::string format_tenths(std::int64_t tenths) {
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

std::vector<CoverageRow> coverage_table(const Inventory &inv) {
  if (inv.empty()) throw Error("coverage_table: empty inventory");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (inv[i].rank != static_cast<int>(i) + 1 ||
        (i > 0 && inv[i].count > inv[i - 1].count))
      throw Error("coverage_table: inventory is not rank-sorted");
    total += inv[i].count;
  }

  std::vector<CoverageRow> rows;
  std::int64_t covered = 0;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    covered += inv[i].count;
    rows.push_back({static_cast<int>(i) + 1, covered,
                    percent_tenths(covered, total)});
  }
  return rows;
}

Inventory apply_cutoff(const Inventory &inv, std::int64_t min_count) {
  Inventory out;
  std::copy_if(inv.begin(), inv.end(), std::back_inserter(out),
               [&](const InventoryEntry &e) { return e.count >= min_count; });
  return out;
}

std::string format_inventory(const Inventory &inv) {
  std::string out;
  for (const auto &e : inv)
    out += std::to_string(e.count) + "\t" + format_template(e.templ) + "\n";
  return out;
}

Inventory parse_inventory(std::string_view text) {
  Inventory inv;
  for (const auto &rl : split_rule_lines(text)) {
    InventoryEntry e;
    try {
      e.templ = canonicalize(parse_template_line(rl.body));
    } catch (const SyntaxError &err) {
      throw err.at_line(rl.line_number);
    }
    if (!rl.label.empty()) {
      auto [ptr, ec] = std::from_chars(
          rl.label.data(), rl.label.data() + rl.label.size(), e.count);
      if (ec != std::errc() || ptr != rl.label.data() + rl.label.size() ||
          e.count < 0)
        throw SyntaxError("invalid template count '" + rl.label + "'",
                          rl.line_number, 1);
    }
    e.rank = static_cast<int>(inv.size()) + 1;
    inv.push_back(std::move(e));
  }
  return inv;
}

std::string format_coverage_text(const std::vector<CoverageRow> &rows) {
  std::string out;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%10s %10s %9s\n", "Templates", "LTRs",
                "Coverage");
  out += buf;
  for (const auto &r : rows) {
    std::snprintf(buf, sizeof buf, "%10d %10lld %7s %%\n", r.templates_used,
                  static_cast<long long>(r.ltrs_covered),
                  format_tenths(r.coverage_tenths).c_str());
    out += buf;
  }
  return out;
}

std::string format_coverage_csv(const std::vector<CoverageRow> &rows) {
  std::string out = "templates,ltrs,coverage\n";
  for (const auto &r : rows) {
    out += std::to_string(r.templates_used) + "," +
           std::to_string(r.ltrs_covered) + "," +
           format_tenths(r.coverage_tenths) + "\n";
  }
  return out;
}

}  // namespace ltrgen
