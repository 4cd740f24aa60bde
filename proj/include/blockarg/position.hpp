#pragma once

// Positions locate occurrences inside the nesting: sequences of naturals
// beginning with 0. std::vector comparison is lexicographic, which is also
// the canonical enumeration order used throughout.

#include <string>
#include <vector>

namespace blockarg {

using Position = std::vector<int>;

enum class PosOrder { Equal, StrictAbove, StrictBelow, Incomparable };

inline bool is_strict_prefix(const Position& p, const Position& q) {
  if (p.size() >= q.size()) return false;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != q[i]) return false;
  return true;
}

// StrictAbove means p is a proper prefix of q (p encloses q).
inline PosOrder position_order(const Position& p, const Position& q) {
  if (p == q) return PosOrder::Equal;
  if (is_strict_prefix(p, q)) return PosOrder::StrictAbove;
  if (is_strict_prefix(q, p)) return PosOrder::StrictBelow;
  return PosOrder::Incomparable;
}

inline Position parent_of(const Position& p) {
  Position r = p;
  if (!r.empty()) r.pop_back();
  return r;
}

inline std::string position_str(const Position& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace blockarg
