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
// Top-down span-driven search with unification over index variables.
// Each goal is a (category, span) pair; rules are tried in file order and
// split points left to right, so results come out in leftmost-derivation
// order. Variables live in a trail-based union-find store that is rolled
// back on backtracking.

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <tuple>
#include <unordered_map>

#include "ltrgen/grammar.hpp"

namespace ltrgen {

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

std::string label_of(const PhrasalCat &cat) {
  std::string out = cat.name + "/" + std::to_string(cat.arity());
  for (const auto &gap : cat.gaps)
    out += "/" + gap.name + "/" + std::to_string(gap.arity());
  return out;
}

std::string label_of(const LexCat &cat) {
  return cat.name + "/" + std::to_string(cat.arity());
}

struct CompiledSymbol {
  ParseNode::Kind kind;
  int label = -1;
  std::vector<int> slots;  // rule-local variable numbers
  const Symbol *symbol = nullptr;
};

struct CompiledRule {
  int lhs_label;
  std::vector<int> lhs_slots;
  std::vector<CompiledSymbol> rhs;
  int num_vars = 0;
  std::vector<int> suffix_min;  // minimal yield of rhs[k..]
};

class CompiledGrammar {
 public:
  explicit CompiledGrammar(const Grammar &g) {
    for (const auto &rule : g.rules()) {
      CompiledRule cr;
      std::map<IndexVar, int> slots;
      auto slot_list = [&](const std::vector<IndexVar> &vars) {
        std::vector<int> out;
        for (const auto &v : vars) {
          auto [it, fresh] = slots.try_emplace(v, static_cast<int>(slots.size()));
          out.push_back(it->second);
        }
        return out;
      };
      cr.lhs_label = intern(label_of(rule.lhs));
      cr.lhs_slots = slot_list(rule.lhs.all_vars());
      for (const auto &sym : rule.rhs) {
        CompiledSymbol cs;
        cs.symbol = &sym;
        if (const auto *p = std::get_if<PhrasalCat>(&sym)) {
          cs.kind = ParseNode::Kind::kPhrasal;
          cs.label = intern(label_of(*p));
          cs.slots = slot_list(p->all_vars());
        } else if (const auto *l = std::get_if<LexCat>(&sym)) {
          cs.kind = ParseNode::Kind::kPreterminal;
          cs.label = intern(label_of(*l));
          cs.slots = slot_list(l->indices);
        } else {
          cs.kind = ParseNode::Kind::kEpsilon;
        }
        cr.rhs.push_back(std::move(cs));
      }
      cr.num_vars = static_cast<int>(slots.size());
      rules_.push_back(std::move(cr));
    }
    by_label_.resize(labels_.size());
    for (std::size_t r = 0; r < rules_.size(); ++r)
      by_label_[rules_[r].lhs_label].push_back(static_cast<int>(r));
    compute_min_lengths();
  }

  // -1 when the label does not occur in the grammar.
  int find_label(const std::string &label) const {
    auto it = labels_.find(label);
    return it == labels_.end() ? -1 : it->second;
  }

  const std::vector<CompiledRule> &rules() const { return rules_; }
  const std::vector<int> &rules_for(int label) const { return by_label_[label]; }
  int min_len(int label) const { return min_len_[label]; }

 private:
  int intern(const std::string &label) {
    return labels_.try_emplace(label, static_cast<int>(labels_.size()))
        .first->second;
  }

  int symbol_min(const CompiledSymbol &s) const {
    switch (s.kind) {
      case ParseNode::Kind::kEpsilon: return 0;
      case ParseNode::Kind::kPreterminal: return 1;
      default: return min_len_[s.label];
    }
  }

  void compute_min_lengths() {
    min_len_.assign(labels_.size(), kUnreachable);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto &r : rules_) {
        int total = 0;
        for (const auto &s : r.rhs) total = std::min(kUnreachable, total + symbol_min(s));
        if (total < min_len_[r.lhs_label]) {
          min_len_[r.lhs_label] = total;
          changed = true;
        }
      }
    }
    for (auto &r : rules_) {
      r.suffix_min.assign(r.rhs.size() + 1, 0);
      for (std::size_t k = r.rhs.size(); k-- > 0;)
        r.suffix_min[k] = std::min(kUnreachable, r.suffix_min[k + 1] + symbol_min(r.rhs[k]));
    }
  }

  std::unordered_map<std::string, int> labels_;
  std::vector<CompiledRule> rules_;
  std::vector<std::vector<int>> by_label_;
  std::vector<int> min_len_;
};

// Union-find over variables with an undo trail. Rigid variables are always
// roots and two distinct rigid variables never unify.
class VarStore {
 public:
  struct Mark {
    std::size_t trail;
    std::size_t vars;
  };

  int fresh(bool rigid) {
    parent_.push_back(static_cast<int>(parent_.size()));
    rigid_.push_back(rigid);
    return parent_.back();
  }

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool unify(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    if (rigid_[a] && rigid_[b]) return false;
    if (rigid_[a]) std::swap(a, b);
    parent_[a] = b;
    trail_.push_back(a);
    return true;
  }

  Mark mark() const { return {trail_.size(), parent_.size()}; }

  void undo(Mark m) {
    while (trail_.size() > m.trail) {
      parent_[trail_.back()] = trail_.back();
      trail_.pop_back();
    }
    parent_.resize(m.vars);
    rigid_.resize(m.vars);
  }

 private:
  std::vector<int> parent_;
  std::vector<bool> rigid_;
  std::vector<int> trail_;
};

// Tree under construction; variables are store ids.
struct RawNode {
  ParseNode::Kind kind = ParseNode::Kind::kPhrasal;
  const Symbol *symbol = nullptr;
  const PhrasalCat *start = nullptr;  // set on the root only
  std::vector<int> args;
  int begin = 0;
  int end = 0;
  int token = -1;
  std::vector<RawNode> children;
};

// How input positions are matched against lexical symbols.
enum class Terminals { kWords, kCategories, kAnything };

class Search {
 public:
  using NodeCont = std::function<void(RawNode &&)>;

  Search(const CompiledGrammar &g, Terminals mode, int length)
      : g_(g), mode_(mode), length_(length) {}

  VarStore &store() { return store_; }

  void set_words(const std::vector<TokenCats> *tokens) { words_ = tokens; }
  void add_category(int label, std::vector<int> args) {
    cat_labels_.push_back(label);
    cat_args_.push_back(std::move(args));
  }

  void run(const PhrasalCat &start, const std::vector<int> &start_args,
           const NodeCont &done) {
    int label = g_.find_label(label_of(start));
    if (label < 0) return;
    derive(nullptr, label, start_args, 0, length_, [&](RawNode &&root) {
      root.start = &start;
      done(std::move(root));
    });
  }

 private:
  void derive(const Symbol *symbol, int label, const std::vector<int> &args,
              int begin, int end, const NodeCont &cont) {
    if (g_.min_len(label) > end - begin) return;
    auto key = std::make_tuple(label, begin, end);
    if (std::find(path_.begin(), path_.end(), key) != path_.end()) return;
    path_.push_back(key);

    for (int r : g_.rules_for(label)) {
      const CompiledRule &rule = g_.rules()[r];
      if (rule.suffix_min[0] > end - begin) continue;
      VarStore::Mark m = store_.mark();
      int base = static_cast<int>(store_.mark().vars);
      for (int v = 0; v < rule.num_vars; ++v) store_.fresh(false);
      bool ok = true;
      for (std::size_t k = 0; ok && k < args.size(); ++k)
        ok = store_.unify(args[k], base + rule.lhs_slots[k]);
      if (ok) {
        std::vector<RawNode> children;
        expand(rule, 0, begin, end, base, children, [&] {
          RawNode node;
          node.kind = ParseNode::Kind::kPhrasal;
          node.symbol = symbol;
          node.args = args;
          node.begin = begin;
          node.end = end;
          node.children = children;
          path_.pop_back();
          cont(std::move(node));
          path_.push_back(key);
        });
      }
      store_.undo(m);
    }
    path_.pop_back();
  }

  void expand(const CompiledRule &rule, std::size_t k, int pos, int end,
              int base, std::vector<RawNode> &children,
              const std::function<void()> &done) {
    if (k == rule.rhs.size()) {
      if (pos == end) done();
      return;
    }
    const CompiledSymbol &sym = rule.rhs[k];
    std::vector<int> args;
    for (int s : sym.slots) args.push_back(base + s);

    switch (sym.kind) {
      case ParseNode::Kind::kEpsilon: {
        RawNode leaf;
        leaf.kind = ParseNode::Kind::kEpsilon;
        leaf.begin = leaf.end = pos;
        children.push_back(std::move(leaf));
        expand(rule, k + 1, pos, end, base, children, done);
        children.pop_back();
        return;
      }
      case ParseNode::Kind::kPreterminal: {
        if (pos >= end) return;
        VarStore::Mark m = store_.mark();
        if (match_terminal(sym, args, pos)) {
          RawNode leaf;
          leaf.kind = ParseNode::Kind::kPreterminal;
          leaf.symbol = sym.symbol;
          leaf.args = args;
          leaf.begin = pos;
          leaf.end = pos + 1;
          leaf.token = pos;
          children.push_back(std::move(leaf));
          expand(rule, k + 1, pos + 1, end, base, children, done);
          children.pop_back();
        }
        store_.undo(m);
        return;
      }
      case ParseNode::Kind::kPhrasal: {
        int last = end - rule.suffix_min[k + 1];
        for (int split = pos + g_.min_len(sym.label); split <= last; ++split) {
          derive(sym.symbol, sym.label, args, pos, split, [&](RawNode &&child) {
            children.push_back(std::move(child));
            expand(rule, k + 1, split, end, base, children, done);
            children.pop_back();
          });
        }
        return;
      }
    }
  }

  bool match_terminal(const CompiledSymbol &sym, const std::vector<int> &args,
                      int pos) {
    switch (mode_) {
      case Terminals::kAnything:
        return true;
      case Terminals::kWords:
        return (*words_)[pos].cats.count(key_of(std::get<LexCat>(*sym.symbol))) > 0;
      case Terminals::kCategories: {
        if (cat_labels_[pos] != sym.label) return false;
        for (std::size_t k = 0; k < args.size(); ++k)
          if (!store_.unify(args[k], cat_args_[pos][k])) return false;
        return true;
      }
    }
    return false;
  }

  const CompiledGrammar &g_;
  Terminals mode_;
  int length_;
  VarStore store_;
  std::vector<std::tuple<int, int, int>> path_;
  const std::vector<TokenCats> *words_ = nullptr;
  std::vector<int> cat_labels_;
  std::vector<std::vector<int>> cat_args_;
};

// Turns store ids into variable names for one complete derivation.
class Namer {
 public:
  Namer(const VarStore &store, std::set<IndexVar> reserved)
      : store_(store), used_(std::move(reserved)) {}

  void fix(int var, const IndexVar &name) {
    names_.try_emplace(store_.find(var), name);
  }

  const IndexVar &name(int var) {
    int root = store_.find(var);
    auto it = names_.find(root);
    if (it != names_.end()) return it->second;
    while (used_.count(canonical_var_name(next_))) ++next_;
    std::string fresh = canonical_var_name(next_++);
    used_.insert(fresh);
    return names_.emplace(root, std::move(fresh)).first->second;
  }

 private:
  const VarStore &store_;
  std::set<IndexVar> used_;
  std::map<int, IndexVar> names_;
  std::size_t next_ = 0;
};

void collect_leaves(const RawNode &node, std::vector<const RawNode *> &out) {
  if (node.kind == ParseNode::Kind::kPreterminal) out.push_back(&node);
  for (const auto &c : node.children) collect_leaves(c, out);
}

std::vector<IndexVar> names_of(Namer &namer, const std::vector<int> &args) {
  std::vector<IndexVar> out;
  for (int a : args) out.push_back(namer.name(a));
  return out;
}

PhrasalCat instantiate_phrasal(const PhrasalCat &shape,
                               const std::vector<IndexVar> &vars) {
  PhrasalCat out = shape;
  std::size_t k = 0;
  for (auto &v : out.indices) v = vars[k++];
  for (auto &gap : out.gaps)
    for (auto &v : gap.indices) v = vars[k++];
  return out;
}

ParseNode build_tree(const RawNode &raw, Namer &namer,
                     const std::vector<TokenCats> *words) {
  ParseNode node;
  node.kind = raw.kind;
  node.begin = raw.begin;
  node.end = raw.end;
  std::vector<IndexVar> vars = names_of(namer, raw.args);
  switch (raw.kind) {
    case ParseNode::Kind::kPhrasal: {
      const PhrasalCat &shape =
          raw.start ? *raw.start : std::get<PhrasalCat>(*raw.symbol);
      node.phrasal = instantiate_phrasal(shape, vars);
      break;
    }
    case ParseNode::Kind::kPreterminal:
      node.lexical = LexCat{std::get<LexCat>(*raw.symbol).name, vars};
      if (words) node.word = (*words)[raw.token].word;
      break;
    case ParseNode::Kind::kEpsilon:
      break;
  }
  for (const auto &c : raw.children)
    node.children.push_back(build_tree(c, namer, words));
  return node;
}

void name_tree_vars(const RawNode &raw, Namer &namer) {
  for (int a : raw.args) namer.name(a);
  for (const auto &c : raw.children) name_tree_vars(c, namer);
}

struct Collector {
  std::vector<ParseResult> results;
  std::set<std::string> seen;

  void add(ParseResult r) {
    if (seen.insert(format_tree(r.tree)).second) results.push_back(std::move(r));
  }
};

// Allocates rigid store variables for the start category.
std::map<IndexVar, int> bind_start(VarStore &store, const PhrasalCat &start,
                                   std::vector<int> &args) {
  std::map<IndexVar, int> ids;
  for (const auto &v : start.all_vars()) {
    auto it = ids.find(v);
    if (it == ids.end()) it = ids.emplace(v, store.fresh(true)).first;
    args.push_back(it->second);
  }
  return ids;
}

}  // namespace

std::string format_tree(const ParseNode &node) {
  switch (node.kind) {
    case ParseNode::Kind::kEpsilon:
      return "eps";
    case ParseNode::Kind::kPreterminal:
      return node.word.empty() ? format_cat(node.lexical)
                               : "(" + format_cat(node.lexical) + " " + node.word + ")";
    case ParseNode::Kind::kPhrasal: {
      std::string out = "(" + format_cat(node.phrasal);
      for (const auto &c : node.children) out += " " + format_tree(c);
      return out + ")";
    }
  }
  return {};
}

std::vector<ParseResult> parse_all(const Grammar &g, const PhrasalCat &start,
                                   const std::vector<TokenCats> &tokens) {
  CompiledGrammar cg(g);
  Search search(cg, Terminals::kWords, static_cast<int>(tokens.size()));
  search.set_words(&tokens);
  std::vector<int> start_args;
  auto start_ids = bind_start(search.store(), start, start_args);

  std::set<IndexVar> reserved;
  for (const auto &[name, id] : start_ids) reserved.insert(name);

  Collector out;
  search.run(start, start_args, [&](RawNode &&root) {
    Namer namer(search.store(), reserved);
    for (const auto &[name, id] : start_ids) namer.fix(id, name);
    std::vector<const RawNode *> leaves;
    collect_leaves(root, leaves);
    ParseResult r;
    for (const RawNode *leaf : leaves)
      r.preterminals.push_back(
          {std::get<LexCat>(*leaf->symbol).name, names_of(namer, leaf->args)});
    name_tree_vars(root, namer);
    r.tree = build_tree(root, namer, &tokens);
    for (const auto &[name, id] : start_ids) r.bindings[name] = namer.name(id);
    out.add(std::move(r));
  });
  return std::move(out.results);
}

std::vector<ParseResult> parse_cats(const Grammar &g, const PhrasalCat &start,
                                    const std::vector<LexCat> &cats) {
  CompiledGrammar cg(g);
  Search search(cg, Terminals::kCategories, static_cast<int>(cats.size()));
  std::vector<int> start_args;
  auto ids = bind_start(search.store(), start, start_args);
  std::set<IndexVar> start_names;
  for (const auto &[name, id] : ids) start_names.insert(name);

  std::vector<IndexVar> input_names;  // flexible, first-occurrence order
  for (const auto &cat : cats) {
    std::vector<int> args;
    for (const auto &v : cat.indices) {
      auto it = ids.find(v);
      if (it == ids.end()) {
        it = ids.emplace(v, search.store().fresh(false)).first;
        input_names.push_back(v);
      }
      args.push_back(it->second);
    }
    int label = cg.find_label(label_of(cat));
    // Labels absent from the grammar can never match.
    search.add_category(label, std::move(args));
  }

  std::set<IndexVar> reserved;
  for (const auto &[name, id] : ids) reserved.insert(name);

  Collector out;
  search.run(start, start_args, [&](RawNode &&root) {
    Namer namer(search.store(), reserved);
    for (const auto &name : start_names) namer.fix(ids.at(name), name);
    for (const auto &name : input_names) namer.fix(ids.at(name), name);
    std::vector<const RawNode *> leaves;
    collect_leaves(root, leaves);
    ParseResult r;
    for (const RawNode *leaf : leaves)
      r.preterminals.push_back(
          {std::get<LexCat>(*leaf->symbol).name, names_of(namer, leaf->args)});
    name_tree_vars(root, namer);
    r.tree = build_tree(root, namer, nullptr);
    for (const auto &[name, id] : ids) r.bindings[name] = namer.name(id);
    out.add(std::move(r));
  });
  return std::move(out.results);
}

std::vector<std::vector<LexCat>> enumerate_expansions(const Grammar &g,
                                                      const PhrasalCat &start,
                                                      int max_len) {
  if (max_len < 1) throw Error("enumerate_expansions: max_len must be >= 1");
  CompiledGrammar cg(g);
  std::vector<std::vector<LexCat>> out;
  std::set<std::string> seen;
  for (int len = 1; len <= max_len; ++len) {
    Search search(cg, Terminals::kAnything, len);
    std::vector<int> start_args;
    auto start_ids = bind_start(search.store(), start, start_args);
    std::set<IndexVar> reserved;
    for (const auto &[name, id] : start_ids) reserved.insert(name);

    search.run(start, start_args, [&](RawNode &&root) {
      Namer namer(search.store(), reserved);
      for (const auto &[name, id] : start_ids) namer.fix(id, name);
      std::vector<const RawNode *> leaves;
      collect_leaves(root, leaves);
      std::vector<LexCat> seq;
      std::string text;
      for (const RawNode *leaf : leaves) {
        seq.push_back({std::get<LexCat>(*leaf->symbol).name,
                       names_of(namer, leaf->args)});
        text += format_cat(seq.back()) + " ";
      }
      if (seen.insert(text).second) out.push_back(std::move(seq));
    });
  }
  return out;
}

}  // namespace ltrgen
