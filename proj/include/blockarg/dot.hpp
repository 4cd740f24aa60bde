#pragma once

// Graphviz export: one cluster per block occurrence, a node per occurrence,
// attack edges solid and support edges dashed. An optional labelling colors
// the nodes.

#include <sstream>
#include <string>

#include "blockarg/flatrep.hpp"
#include "blockarg/labels.hpp"

namespace blockarg {

namespace dot_detail {

inline std::string node_id(const Position& p) {
  std::string s = "n";
  for (int x : p) s += "_" + std::to_string(x);
  return s;
}

inline const char* fill(Label l) {
  switch (l) {
    case Label::Plus: return "palegreen";
    case Label::Minus: return "lightcoral";
    case Label::Undec: return "lightgray";
  }
  return "white";
}

}  // namespace dot_detail

inline std::string export_dot(const FlatRep& flat, const Labelling* lab = nullptr) {
  std::ostringstream os;
  os << "digraph blockarg {\n  compound=true;\n  node [shape=ellipse];\n";

  auto emit = [&](auto&& self, int e, int depth) -> void {
    const auto& entry = flat.entries[static_cast<size_t>(e)];
    std::string pad(static_cast<size_t>(depth) * 2 + 2, ' ');
    std::string id = dot_detail::node_id(entry.pos);
    std::string label = flat.name(e) + " @" + position_str(entry.pos);
    if (flat.is_block(e)) {
      os << pad << "subgraph cluster_" << id << " {\n";
      os << pad << "  label=\"" << label << "\";\n";
      if (lab)
        os << pad << "  bgcolor=\"" << dot_detail::fill(lab->v[static_cast<size_t>(e)])
           << "\";\n";
      os << pad << "  " << id << " [shape=point, style=invis];\n";
      for (int c : entry.children) self(self, c, depth + 1);
      os << pad << "}\n";
    } else {
      os << pad << id << " [label=\"" << label << "\"";
      if (lab) os << ", style=filled, fillcolor=\"" << dot_detail::fill(lab->v[static_cast<size_t>(e)]) << "\"";
      os << "];\n";
    }
  };
  emit(emit, 0, 0);

  auto edge = [&](int from, int to, bool support) {
    const auto& ef = flat.entries[static_cast<size_t>(from)];
    const auto& et = flat.entries[static_cast<size_t>(to)];
    os << "  " << dot_detail::node_id(ef.pos) << " -> " << dot_detail::node_id(et.pos);
    std::string attrs = support ? "style=dashed, arrowhead=onormal" : "";
    if (flat.is_block(from))
      attrs += (attrs.empty() ? "" : ", ") + std::string("ltail=cluster_") + dot_detail::node_id(ef.pos);
    if (flat.is_block(to))
      attrs += (attrs.empty() ? "" : ", ") + std::string("lhead=cluster_") + dot_detail::node_id(et.pos);
    if (!attrs.empty()) os << " [" << attrs << "]";
    os << ";\n";
  };
  for (int be : flat.block_entries) {
    const auto& pos = flat.entries[static_cast<size_t>(be)].pos;
    for (const auto& [u, v] : attacks_in(flat, pos)) edge(u, v, false);
    for (const auto& [u, v] : supports_in(flat, pos)) edge(u, v, true);
  }
  os << "}\n";
  return os.str();
}

}  // namespace blockarg
