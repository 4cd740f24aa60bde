#pragma once

#include <string>
#include <vector>

#include "blockarg/errors.hpp"

namespace blockarg {

struct Caps {
  size_t max_occurrences = 64;      // flatten
  size_t max_block_children = 16;   // local enumeration / subset ops
  size_t max_labellings = 20000;    // enumeration result count
  size_t max_oracle_positions = 12; // brute-force labelling oracle
  size_t max_oracle_children = 16;  // brute-force subset oracle
  size_t max_tree_arguments = 512;  // ABA closure
  size_t max_repair_free = 24;      // restorable positions per repair source
  long long time_limit_ms = 0;      // 0 = unlimited
};

struct ConstraintSet {
  bool g = false;
  bool s = false;
  bool star = false;

  bool any_semantic() const { return s || star; }
  bool empty() const { return !g && !s && !star; }
  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

inline ConstraintSet constraint_set_from_names(const std::vector<std::string>& names) {
  ConstraintSet c;
  for (const auto& n : names) {
    if (n == "G" || n == "g") c.g = true;
    else if (n == "S" || n == "s") c.s = true;
    else if (n == "STAR" || n == "star" || n == "*") c.star = true;
    else if (n == "none" || n.empty()) continue;
    else throw Error(ErrorCode::BadInput, "unknown constraint '" + n + "'");
  }
  return c;
}

inline std::string constraint_set_str(const ConstraintSet& c) {
  std::string s;
  if (c.g) s += "G";
  if (c.s) s += (s.empty() ? "" : ",") + std::string("S");
  if (c.star) s += (s.empty() ? "" : ",") + std::string("STAR");
  return s.empty() ? "none" : s;
}

enum class Mode { Fixpoint, Repair };
enum class SDominance { Depth, Prefix };
enum class Scope { Local, Enclosing };

struct SolverConfig {
  ConstraintSet constraints;
  Mode mode = Mode::Fixpoint;
  SDominance s_dominance = SDominance::Depth;
  Scope scope = Scope::Local;
  bool collapse_eq = false;
  Caps caps;
};

}  // namespace blockarg
