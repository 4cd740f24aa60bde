#pragma once

// Assumption-based argumentation front-end: tree-shaped arguments built from
// rules over assumptions, attacks through contraries, a direct complete-set
// reference, and the encoding into a block framework (premises become an
// edge-free block supporting the conclusion atom; attacks join encoded trees
// at the root).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "blockarg/config.hpp"
#include "blockarg/errors.hpp"
#include "blockarg/model.hpp"

namespace blockarg {

struct AbaRule {
  std::string head;
  std::vector<std::string> body;
};

struct ABADoc {
  std::vector<std::string> sentences;
  std::vector<AbaRule> rules;
  std::vector<std::string> assumptions;
  std::map<std::string, std::string> contrary;  // assumption -> sentence
};

class AbaFramework {
 public:
  struct Rule {
    int head;
    std::vector<int> body;  // sorted sentence indices
  };

  static AbaFramework validate(const ABADoc& doc) {
    AbaFramework aba;
    aba.doc_ = doc;
    for (const auto& s : doc.sentences) {
      if (s.empty()) throw Error(ErrorCode::BadInput, "empty sentence");
      if (!aba.index_.emplace(s, static_cast<int>(aba.sentences_.size())).second)
        throw Error(ErrorCode::BadInput, "sentence '" + s + "' listed twice");
      aba.sentences_.push_back(s);
    }
    if (doc.assumptions.empty())
      throw Error(ErrorCode::BadInput, "assumption set must be nonempty");
    aba.is_assumption_.assign(aba.sentences_.size(), false);
    for (const auto& a : doc.assumptions) {
      int i = aba.sentence_index(a);
      aba.is_assumption_[static_cast<size_t>(i)] = true;
    }
    aba.contrary_.assign(aba.sentences_.size(), -1);
    for (const auto& [a, h] : doc.contrary) {
      int ai = aba.sentence_index(a);
      if (!aba.is_assumption_[static_cast<size_t>(ai)])
        throw Error(ErrorCode::BadInput, "contrary declared for non-assumption '" + a + "'");
      aba.contrary_[static_cast<size_t>(ai)] = aba.sentence_index(h);
    }
    for (const auto& r : doc.rules) {
      Rule rule;
      rule.head = aba.sentence_index(r.head);
      if (aba.is_assumption_[static_cast<size_t>(rule.head)])
        throw Error(ErrorCode::BadInput, "rule head '" + r.head + "' is an assumption");
      if (r.body.empty())
        throw Error(ErrorCode::BadInput, "rule for '" + r.head + "' has an empty body");
      for (const auto& b : r.body) rule.body.push_back(aba.sentence_index(b));
      std::sort(rule.body.begin(), rule.body.end());
      rule.body.erase(std::unique(rule.body.begin(), rule.body.end()), rule.body.end());
      aba.rules_.push_back(std::move(rule));
    }
    return aba;
  }

  int sentence_index(const std::string& s) const {
    auto it = index_.find(s);
    if (it == index_.end())
      throw Error(ErrorCode::DanglingName, "sentence '" + s + "' is not declared");
    return it->second;
  }

  int size() const { return static_cast<int>(sentences_.size()); }
  const std::string& sentence(int i) const { return sentences_[static_cast<size_t>(i)]; }
  bool is_assumption(int i) const { return is_assumption_[static_cast<size_t>(i)]; }
  int contrary_of(int i) const { return contrary_[static_cast<size_t>(i)]; }
  const std::vector<Rule>& rules() const { return rules_; }
  const ABADoc& doc() const { return doc_; }

 private:
  std::vector<std::string> sentences_;
  std::map<std::string, int> index_;
  std::vector<bool> is_assumption_;
  std::vector<int> contrary_;  // -1 = none
  std::vector<Rule> rules_;
  ABADoc doc_;
};

inline AbaFramework validate_aba(const ABADoc& doc) { return AbaFramework::validate(doc); }

// Canonicalized tree arguments: leaves are assumptions, internal nodes apply
// one rule per (head, child-head set); children are interned ids.
struct TreeArguments {
  struct Tree {
    int head;
    std::vector<int> children;          // tree ids, sorted
    std::vector<int> leaf_assumptions;  // sentence ids, sorted
  };
  std::vector<Tree> arena;
  std::vector<std::vector<int>> by_sentence;  // per sentence: tree ids
  std::vector<int> all;                       // every tree, id order

  std::string tree_str(const AbaFramework& aba, int t) const {
    const Tree& tr = arena[static_cast<size_t>(t)];
    std::string s = aba.sentence(tr.head);
    if (!tr.children.empty()) {
      s += '(';
      for (size_t i = 0; i < tr.children.size(); ++i) {
        if (i) s += ',';
        s += tree_str(aba, tr.children[i]);
      }
      s += ')';
    }
    return s;
  }
};

inline TreeArguments build_tree_arguments(const AbaFramework& aba, const Caps& caps = {}) {
  // A cycle in the head -> body dependency graph makes the closure
  // non-terminating; reject before building anything.
  const int n = aba.size();
  std::vector<int> color(static_cast<size_t>(n), 0);
  std::function<void(int)> dfs = [&](int s) {
    color[static_cast<size_t>(s)] = 1;
    for (const auto& r : aba.rules()) {
      if (r.head != s) continue;
      for (int b : r.body) {
        if (color[static_cast<size_t>(b)] == 1)
          throw Error(ErrorCode::NonTerminating,
                      "rule dependencies cycle through '" + aba.sentence(b) + "'");
        if (color[static_cast<size_t>(b)] == 0) dfs(b);
      }
    }
    color[static_cast<size_t>(s)] = 2;
  };
  for (int s = 0; s < n; ++s)
    if (color[static_cast<size_t>(s)] == 0) dfs(s);

  TreeArguments out;
  out.by_sentence.assign(static_cast<size_t>(n), {});
  std::map<std::pair<int, std::vector<int>>, int> interned;
  auto intern = [&](int head, std::vector<int> children) {
    auto key = std::make_pair(head, children);
    auto it = interned.find(key);
    if (it != interned.end()) return it->second;
    if (out.arena.size() >= caps.max_tree_arguments)
      throw Error(ErrorCode::SizeCapExceeded, "tree-argument cap exceeded");
    TreeArguments::Tree t;
    t.head = head;
    t.children = std::move(children);
    std::set<int> leaves;
    if (t.children.empty()) leaves.insert(head);
    for (int c : t.children)
      for (int l : out.arena[static_cast<size_t>(c)].leaf_assumptions) leaves.insert(l);
    t.leaf_assumptions.assign(leaves.begin(), leaves.end());
    int id = static_cast<int>(out.arena.size());
    out.arena.push_back(std::move(t));
    interned.emplace(std::move(key), id);
    return id;
  };

  std::vector<bool> done(static_cast<size_t>(n), false);
  std::function<void(int)> closure = [&](int s) {
    if (done[static_cast<size_t>(s)]) return;
    done[static_cast<size_t>(s)] = true;  // acyclic, so no re-entry
    std::vector<int> trees;
    if (aba.is_assumption(s)) trees.push_back(intern(s, {}));
    for (const auto& r : aba.rules()) {
      if (r.head != s) continue;
      for (int b : r.body) closure(b);
      // one tree per choice of a tree for each body sentence
      std::vector<std::vector<int>> combo{{}};
      for (int b : r.body) {
        std::vector<std::vector<int>> next;
        for (const auto& base : combo)
          for (int t : out.by_sentence[static_cast<size_t>(b)]) {
            auto ext = base;
            ext.push_back(t);
            next.push_back(std::move(ext));
          }
        combo = std::move(next);
      }
      for (auto& kids : combo) {
        if (kids.empty()) continue;  // a body sentence with no trees yields none
        std::sort(kids.begin(), kids.end());
        trees.push_back(intern(s, std::move(kids)));
      }
    }
    std::sort(trees.begin(), trees.end());
    trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
    out.by_sentence[static_cast<size_t>(s)] = std::move(trees);
  };
  for (int s = 0; s < n; ++s) closure(s);
  for (size_t t = 0; t < out.arena.size(); ++t) out.all.push_back(static_cast<int>(t));
  return out;
}

// t1 attacks t2 iff t1's head is the contrary of an assumption occurring in t2.
inline bool aba_attacks(const AbaFramework& aba, const TreeArguments& trees, int t1, int t2) {
  int head = trees.arena[static_cast<size_t>(t1)].head;
  for (int h : trees.arena[static_cast<size_t>(t2)].leaf_assumptions)
    if (aba.contrary_of(h) == head) return true;
  return false;
}

// Direct reference semantics over tree arguments: conflict-free sets whose
// members are all defended and which include everything they defend.
inline std::vector<std::vector<int>> aba_complete_sets(const AbaFramework& aba,
                                                       const TreeArguments& trees) {
  const size_t n = trees.arena.size();
  if (n > 20)
    throw Error(ErrorCode::SizeCapExceeded,
                std::to_string(n) + " tree arguments exceed the subset enumeration cap");
  std::vector<std::vector<bool>> att(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      att[i][j] = aba_attacks(aba, trees, static_cast<int>(i), static_cast<int>(j));
  auto defends = [&](uint32_t mask, size_t x) {
    for (size_t a = 0; a < n; ++a) {
      if (!att[a][x]) continue;
      bool countered = false;
      for (size_t m = 0; m < n && !countered; ++m)
        if ((mask >> m & 1u) && att[m][a]) countered = true;
      if (!countered) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t j = 0; j < n && ok; ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u) && att[i][j]) ok = false;
    for (size_t x = 0; x < n && ok; ++x) {
      bool in = (mask >> x & 1u) != 0;
      bool def = defends(mask, x);
      if (in != def) ok = false;  // members defended; everything defended is in
    }
    if (!ok) continue;
    std::vector<int> set;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) set.push_back(static_cast<int>(i));
    out.push_back(std::move(set));
  }
  return out;
}

struct EncodedAba {
  FrameworkDoc doc;
  std::string root_name;
  std::vector<std::string> tree_names;  // per tree id
};

inline EncodedAba encode_to_bba(const AbaFramework& aba, const TreeArguments& trees) {
  EncodedAba enc;
  enc.root_name = "root";
  enc.tree_names.resize(trees.arena.size());
  auto head_atom = [&](int sentence) {
    std::string nm = "s" + std::to_string(sentence);
    enc.doc.definitions[nm] = ContentAtom{aba.sentence(sentence)};
    return nm;
  };
  for (size_t t = 0; t < trees.arena.size(); ++t) {
    const auto& tr = trees.arena[t];
    std::string nm = "t" + std::to_string(t);
    enc.tree_names[t] = nm;
    if (tr.children.empty()) {
      enc.doc.definitions[nm] = ContentAtom{aba.sentence(tr.head)};
      continue;
    }
    std::string body = nm + "_body";
    BlockDoc body_block;
    for (int c : tr.children) body_block.args.push_back(enc.tree_names[static_cast<size_t>(c)]);
    enc.doc.definitions[body] = std::move(body_block);
    BlockDoc tree_block;
    tree_block.args = {body, head_atom(tr.head)};
    tree_block.supports = {{body, tree_block.args[1]}};
    enc.doc.definitions[nm] = std::move(tree_block);
  }
  BlockDoc root;
  for (const auto& nm : enc.tree_names) root.args.push_back(nm);
  for (size_t i = 0; i < trees.arena.size(); ++i)
    for (size_t j = 0; j < trees.arena.size(); ++j)
      if (aba_attacks(aba, trees, static_cast<int>(i), static_cast<int>(j)))
        root.attacks.emplace_back(enc.tree_names[i], enc.tree_names[j]);
  enc.doc.definitions[enc.root_name] = std::move(root);
  enc.doc.root = enc.root_name;
  return enc;
}

inline EncodedAba encode_to_bba(const AbaFramework& aba, const Caps& caps = {}) {
  auto trees = build_tree_arguments(aba, caps);
  return encode_to_bba(aba, trees);
}

}  // namespace blockarg
