#pragma once

// Flat representation: the set of all occurrences of arguments in a
// framework, indexed by positions rooted at [0]. A block occurrence at p with
// k children places child i at p.i (1-based, document order), and nothing
// else is included.

#include <map>
#include <utility>
#include <vector>

#include "blockarg/errors.hpp"
#include "blockarg/model.hpp"
#include "blockarg/position.hpp"

namespace blockarg {

struct FlatRep {
  struct Entry {
    Position pos;
    int def;                    // definition index in the framework
    int parent;                 // entry index, -1 for the root
    std::vector<int> children;  // entry indices, child order
  };

  const Framework* fw = nullptr;
  std::vector<Entry> entries;  // DFS pre-order == lexicographic position order
  std::map<Position, int> by_pos;
  std::vector<int> block_entries;

  int entry_at(const Position& p) const {
    auto it = by_pos.find(p);
    if (it == by_pos.end())
      throw Error(ErrorCode::UnknownPosition, "no occurrence at " + position_str(p));
    return it->second;
  }

  bool is_block(int e) const { return !fw->is_atom(entries[static_cast<size_t>(e)].def); }
  const std::string& name(int e) const { return fw->name(entries[static_cast<size_t>(e)].def); }
  size_t size() const { return entries.size(); }
};

inline FlatRep flatten(const Framework& fw, size_t max_occurrences = 64) {
  FlatRep flat;
  flat.fw = &fw;
  struct Item {
    Position pos;
    int def;
    int parent;
  };
  std::vector<Item> stack;
  stack.push_back({Position{0}, fw.root(), -1});
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    if (flat.entries.size() >= max_occurrences)
      throw Error(ErrorCode::SizeCapExceeded,
                  "flat representation exceeds " + std::to_string(max_occurrences) +
                      " occurrences");
    int e = static_cast<int>(flat.entries.size());
    flat.entries.push_back({it.pos, it.def, it.parent, {}});
    flat.by_pos.emplace(flat.entries.back().pos, e);
    if (it.parent >= 0) flat.entries[static_cast<size_t>(it.parent)].children.push_back(e);
    if (!fw.is_atom(it.def)) {
      flat.block_entries.push_back(e);
      const auto& children = fw.block(it.def).children;
      // reversed push keeps DFS pre-order == document order == position order
      for (size_t i = children.size(); i-- > 0;) {
        Position cp = flat.entries[static_cast<size_t>(e)].pos;
        cp.push_back(static_cast<int>(i) + 1);
        stack.push_back({std::move(cp), children[i], e});
      }
    }
  }
  return flat;
}

// Child occurrences of the block at p.
inline const std::vector<int>& args_in(const FlatRep& flat, const Position& p) {
  int e = flat.entry_at(p);
  if (!flat.is_block(e))
    throw Error(ErrorCode::UnitaryPosition,
                "occurrence at " + position_str(p) + " is unitary");
  return flat.entries[static_cast<size_t>(e)].children;
}

namespace detail {
inline std::vector<std::pair<int, int>> lift_edges(
    const FlatRep& flat, const Position& p,
    const std::vector<std::pair<int, int>>& edges) {
  int e = flat.entry_at(p);
  if (!flat.is_block(e))
    throw Error(ErrorCode::UnitaryPosition,
                "occurrence at " + position_str(p) + " is unitary");
  const auto& kids = flat.entries[static_cast<size_t>(e)].children;
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges)
    out.emplace_back(kids[static_cast<size_t>(u)], kids[static_cast<size_t>(v)]);
  return out;
}
}  // namespace detail

// Local attack pairs at p, lifted to child occurrence entries.
inline std::vector<std::pair<int, int>> attacks_in(const FlatRep& flat, const Position& p) {
  int e = flat.entry_at(p);
  if (!flat.is_block(e))
    throw Error(ErrorCode::UnitaryPosition,
                "occurrence at " + position_str(p) + " is unitary");
  return detail::lift_edges(flat, p, flat.fw->block(flat.entries[static_cast<size_t>(e)].def).attacks);
}

inline std::vector<std::pair<int, int>> supports_in(const FlatRep& flat, const Position& p) {
  int e = flat.entry_at(p);
  if (!flat.is_block(e))
    throw Error(ErrorCode::UnitaryPosition,
                "occurrence at " + position_str(p) + " is unitary");
  return detail::lift_edges(flat, p, flat.fw->block(flat.entries[static_cast<size_t>(e)].def).supports);
}

}  // namespace blockarg
