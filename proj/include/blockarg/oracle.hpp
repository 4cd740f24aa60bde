#pragma once

// Brute-force references: exhaustive 3^n labelling enumeration and 2^k subset
// enumeration. Ground truth for the differential suites; not for production
// sizes.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "blockarg/config.hpp"
#include "blockarg/flatrep.hpp"
#include "blockarg/labels.hpp"

namespace blockarg {

// Every total labelling satisfying pred, in lexicographic order
// (+ < - < ? per entry, entries in position order).
inline std::vector<Labelling> brute_force_labellings(
    const FlatRep& flat, const std::function<bool(const Labelling&)>& pred,
    const Caps& caps = {}) {
  const size_t n = flat.size();
  if (n > caps.max_oracle_positions)
    throw Error(ErrorCode::OracleCapExceeded,
                std::to_string(n) + " positions exceed the labelling oracle cap");
  std::vector<Labelling> out;
  Labelling lab{std::vector<Label>(n, Label::Plus)};
  while (true) {
    if (pred(lab)) out.push_back(lab);
    size_t i = n;
    while (i > 0) {
      --i;
      if (lab.v[i] != Label::Undec) {
        lab.v[i] = static_cast<Label>(static_cast<uint8_t>(lab.v[i]) + 1);
        break;
      }
      lab.v[i] = Label::Plus;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

// All subsets of the children of p satisfying pred, as sorted vectors of
// child occurrence entries, in bitmask order.
inline std::vector<std::vector<int>> brute_force_subsets(
    const FlatRep& flat, const Position& p,
    const std::function<bool(const std::vector<int>&)>& pred, const Caps& caps = {}) {
  const auto& kids = args_in(flat, p);
  if (kids.size() > caps.max_oracle_children)
    throw Error(ErrorCode::OracleCapExceeded,
                std::to_string(kids.size()) + " children exceed the subset oracle cap");
  std::vector<std::vector<int>> out;
  for (uint64_t mask = 0; mask < (1ull << kids.size()); ++mask) {
    std::vector<int> set;
    for (size_t i = 0; i < kids.size(); ++i)
      if (mask >> i & 1ull) set.push_back(kids[i]);
    if (pred(set)) out.push_back(std::move(set));
  }
  return out;
}

}  // namespace blockarg
