#pragma once

// Recursive argument values: an argument is either a content atom or a block
// holding child arguments with local attack/support relations. Frameworks are
// given as named definitions with a designated root; the name-reference graph
// must be acyclic, so every value is finite.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "blockarg/errors.hpp"

namespace blockarg {

struct ContentAtom {
  std::string id;
  friend bool operator==(const ContentAtom&, const ContentAtom&) = default;
};

// Document-level value: children and edge endpoints are definition names.
struct BlockDoc {
  std::vector<std::string> args;  // ordered, fixes child indices
  std::vector<std::pair<std::string, std::string>> attacks;
  std::vector<std::pair<std::string, std::string>> supports;
  friend bool operator==(const BlockDoc&, const BlockDoc&) = default;
};

using ArgValueDoc = std::variant<ContentAtom, BlockDoc>;

struct FrameworkDoc {
  std::map<std::string, ArgValueDoc> definitions;
  std::string root;
};

// Validated, index-resolved framework. Immutable after construction.
class Framework {
 public:
  struct Atom {
    std::string id;
  };
  struct Block {
    std::vector<int> children;                  // definition indices
    std::vector<std::pair<int, int>> attacks;   // child-list indices
    std::vector<std::pair<int, int>> supports;  // child-list indices
  };
  struct Definition {
    std::string name;
    std::variant<Atom, Block> value;
  };

  static Framework validate(const FrameworkDoc& doc);

  int root() const { return root_; }
  int size() const { return static_cast<int>(defs_.size()); }
  const Definition& def(int i) const { return defs_[static_cast<size_t>(i)]; }
  bool is_atom(int i) const { return std::holds_alternative<Atom>(defs_[static_cast<size_t>(i)].value); }
  const Atom& atom(int i) const { return std::get<Atom>(defs_[static_cast<size_t>(i)].value); }
  const Block& block(int i) const { return std::get<Block>(defs_[static_cast<size_t>(i)].value); }
  const std::string& name(int i) const { return defs_[static_cast<size_t>(i)].name; }

  int index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
  }

  const FrameworkDoc& doc() const { return doc_; }

  // Structural equality: atoms by id, blocks by existence of a bijection
  // between children that preserves eq and attack/support membership in both
  // directions.
  bool eq(int a, int b) const;

  // a dominates b: every child and edge of b has an eq-match in a, with
  // |children(b)| <= |children(a)|. Matching is per item, not a bijection.
  bool sub_argumentation(int a, int b) const;

 private:
  Framework() = default;

  bool eq_uncached(int a, int b) const;
  bool eq_match(const Block& ba, const Block& bb, std::vector<int>& map_ab,
                std::vector<bool>& used, size_t next) const;

  std::vector<Definition> defs_;
  std::unordered_map<std::string, int> by_name_;
  int root_ = -1;
  FrameworkDoc doc_;
  mutable std::vector<int8_t> eq_memo_;  // size*size, -1 unknown
};

inline Framework Framework::validate(const FrameworkDoc& doc) {
  Framework fw;
  fw.doc_ = doc;
  fw.defs_.reserve(doc.definitions.size());
  for (const auto& [name, value] : doc.definitions) {
    if (name.empty()) throw Error(ErrorCode::BadInput, "empty definition name");
    fw.by_name_.emplace(name, static_cast<int>(fw.defs_.size()));
    fw.defs_.push_back(Definition{name, Atom{}});
  }
  for (const auto& [name, value] : doc.definitions) {
    int self = fw.by_name_.at(name);
    if (const auto* atom = std::get_if<ContentAtom>(&value)) {
      if (atom->id.empty())
        throw Error(ErrorCode::BadInput, "atom '" + name + "' has an empty id");
      fw.defs_[static_cast<size_t>(self)].value = Atom{atom->id};
      continue;
    }
    const auto& bd = std::get<BlockDoc>(value);
    if (bd.args.empty())
      throw Error(ErrorCode::EmptyBlock, "block '" + name + "' has no children");
    Block blk;
    std::unordered_map<std::string, int> child_index;
    for (const auto& child : bd.args) {
      auto it = fw.by_name_.find(child);
      if (it == fw.by_name_.end())
        throw Error(ErrorCode::DanglingName,
                    "block '" + name + "' references undefined '" + child + "'");
      if (!child_index.emplace(child, static_cast<int>(blk.children.size())).second)
        throw Error(ErrorCode::DuplicateChild,
                    "block '" + name + "' lists '" + child + "' twice");
      blk.children.push_back(it->second);
    }
    auto resolve_edges = [&](const std::vector<std::pair<std::string, std::string>>& in,
                             std::vector<std::pair<int, int>>& out, const char* what) {
      for (const auto& [from, to] : in) {
        auto fi = child_index.find(from);
        auto ti = child_index.find(to);
        if (fi == child_index.end() || ti == child_index.end())
          throw Error(ErrorCode::InvalidEdge, "block '" + name + "' " + what + " (" +
                                                  from + "," + to +
                                                  ") names a non-child");
        out.emplace_back(fi->second, ti->second);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    };
    resolve_edges(bd.attacks, blk.attacks, "attack");
    resolve_edges(bd.supports, blk.supports, "support");
    fw.defs_[static_cast<size_t>(self)].value = std::move(blk);
  }

  auto rit = fw.by_name_.find(doc.root);
  if (rit == fw.by_name_.end())
    throw Error(ErrorCode::DanglingName, "root '" + doc.root + "' is not defined");
  fw.root_ = rit->second;

  // Cycle check on the name-reference graph (an argument never contains itself).
  const int n = fw.size();
  std::vector<int> color(static_cast<size_t>(n), 0);  // 0 white, 1 grey, 2 black
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<size_t>(start)] != 0) continue;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      if (color[static_cast<size_t>(v)] == 0) {
        color[static_cast<size_t>(v)] = 1;
        if (!fw.is_atom(v)) {
          for (int c : fw.block(v).children) {
            if (color[static_cast<size_t>(c)] == 1)
              throw Error(ErrorCode::CyclicDefinition,
                          "'" + fw.name(c) + "' is reachable from itself");
            if (color[static_cast<size_t>(c)] == 0) stack.push_back(c);
          }
        }
      } else {
        color[static_cast<size_t>(v)] = 2;
        stack.pop_back();
      }
    }
  }

  fw.eq_memo_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  return fw;
}

inline bool Framework::eq(int a, int b) const {
  const size_t idx = static_cast<size_t>(a) * static_cast<size_t>(size()) + static_cast<size_t>(b);
  if (eq_memo_[idx] >= 0) return eq_memo_[idx] == 1;
  bool r = eq_uncached(a, b);
  eq_memo_[idx] = r ? 1 : 0;
  const size_t sym = static_cast<size_t>(b) * static_cast<size_t>(size()) + static_cast<size_t>(a);
  eq_memo_[sym] = eq_memo_[idx];
  return r;
}

inline bool Framework::eq_uncached(int a, int b) const {
  if (a == b) return true;
  if (is_atom(a) != is_atom(b)) return false;
  if (is_atom(a)) return atom(a).id == atom(b).id;
  const Block& ba = block(a);
  const Block& bb = block(b);
  if (ba.children.size() != bb.children.size()) return false;
  if (ba.attacks.size() != bb.attacks.size()) return false;
  if (ba.supports.size() != bb.supports.size()) return false;
  std::vector<int> map_ab(ba.children.size(), -1);
  std::vector<bool> used(bb.children.size(), false);
  return eq_match(ba, bb, map_ab, used, 0);
}

// Backtracking search for a child bijection preserving eq and both relations.
inline bool Framework::eq_match(const Block& ba, const Block& bb, std::vector<int>& map_ab,
                                std::vector<bool>& used, size_t next) const {
  if (next == ba.children.size()) return true;
  auto has_edge = [](const std::vector<std::pair<int, int>>& es, int u, int v) {
    return std::binary_search(es.begin(), es.end(), std::make_pair(u, v));
  };
  for (size_t j = 0; j < bb.children.size(); ++j) {
    if (used[j]) continue;
    if (!eq(ba.children[next], bb.children[j])) continue;
    bool ok = true;
    for (size_t i = 0; i < next && ok; ++i) {
      int ja = map_ab[i];
      ok = has_edge(ba.attacks, static_cast<int>(i), static_cast<int>(next)) ==
               has_edge(bb.attacks, ja, static_cast<int>(j)) &&
           has_edge(ba.attacks, static_cast<int>(next), static_cast<int>(i)) ==
               has_edge(bb.attacks, static_cast<int>(j), ja) &&
           has_edge(ba.supports, static_cast<int>(i), static_cast<int>(next)) ==
               has_edge(bb.supports, ja, static_cast<int>(j)) &&
           has_edge(ba.supports, static_cast<int>(next), static_cast<int>(i)) ==
               has_edge(bb.supports, static_cast<int>(j), ja);
    }
    if (ok) {
      ok = has_edge(ba.attacks, static_cast<int>(next), static_cast<int>(next)) ==
               has_edge(bb.attacks, static_cast<int>(j), static_cast<int>(j)) &&
           has_edge(ba.supports, static_cast<int>(next), static_cast<int>(next)) ==
               has_edge(bb.supports, static_cast<int>(j), static_cast<int>(j));
    }
    if (!ok) continue;
    map_ab[next] = static_cast<int>(j);
    used[j] = true;
    if (eq_match(ba, bb, map_ab, used, next + 1)) return true;
    used[j] = false;
    map_ab[next] = -1;
  }
  return false;
}

inline bool Framework::sub_argumentation(int a, int b) const {
  if (is_atom(a) || is_atom(b)) {
    // Atom members are abstract entities, never arguments, so cross matches
    // are impossible; two atoms embed exactly when they are the same entity.
    return is_atom(a) && is_atom(b) && atom(a).id == atom(b).id;
  }
  const Block& ba = block(a);
  const Block& bb = block(b);
  if (bb.children.size() > ba.children.size()) return false;
  for (int cb : bb.children) {
    bool found = false;
    for (int ca : ba.children)
      if (eq(cb, ca)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  auto edges_embed = [&](const std::vector<std::pair<int, int>>& eb,
                         const std::vector<std::pair<int, int>>& ea) {
    for (const auto& [u, v] : eb) {
      bool found = false;
      for (const auto& [x, y] : ea)
        if (eq(bb.children[static_cast<size_t>(u)], ba.children[static_cast<size_t>(x)]) &&
            eq(bb.children[static_cast<size_t>(v)], ba.children[static_cast<size_t>(y)])) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  return edges_embed(bb.attacks, ba.attacks) && edges_embed(bb.supports, ba.supports);
}

inline Framework validate(const FrameworkDoc& doc) { return Framework::validate(doc); }

}  // namespace blockarg
