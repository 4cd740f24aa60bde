#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockarg/errors.hpp"
#include "blockarg/flatrep.hpp"

namespace blockarg {

enum class Label : uint8_t { Plus = 0, Minus = 1, Undec = 2 };

inline char label_char(Label l) {
  switch (l) {
    case Label::Plus: return '+';
    case Label::Minus: return '-';
    case Label::Undec: return '?';
  }
  return '?';
}

inline Label label_from_char(char c) {
  switch (c) {
    case '+': return Label::Plus;
    case '-': return Label::Minus;
    case '?': return Label::Undec;
  }
  throw Error(ErrorCode::BadInput, std::string("not a label: '") + c + "'");
}

// l1 dominates l2: ? dominates everything, + and - only themselves.
inline bool label_dominates(Label l1, Label l2) {
  return l1 == Label::Undec || l1 == l2;
}

// Total map from occurrences to labels, indexed by flat-rep entry.
struct Labelling {
  std::vector<Label> v;

  Label at(size_t e) const { return v[e]; }
  friend bool operator==(const Labelling&, const Labelling&) = default;
  friend auto operator<=>(const Labelling&, const Labelling&) = default;
};

inline Labelling all_undec(const FlatRep& flat) {
  return Labelling{std::vector<Label>(flat.size(), Label::Undec)};
}

// lab1 is at least as informative as lab2: lab1 agrees with lab2 wherever
// lab2 commits and may refine lab2's ?s.
inline bool more_informative(const Labelling& lab1, const Labelling& lab2) {
  if (lab1.v.size() != lab2.v.size())
    throw Error(ErrorCode::DomainMismatch, "labellings over different flat representations");
  for (size_t i = 0; i < lab1.v.size(); ++i)
    if (!label_dominates(lab2.v[i], lab1.v[i])) return false;
  return true;
}

inline bool strictly_more_informative(const Labelling& lab1, const Labelling& lab2) {
  return more_informative(lab1, lab2) && !more_informative(lab2, lab1);
}

inline std::string labelling_str(const FlatRep& flat, const Labelling& lab) {
  std::string s;
  for (size_t e = 0; e < flat.size(); ++e) {
    if (e) s += ' ';
    s += position_str(flat.entries[e].pos);
    s += '=';
    s += label_char(lab.v[e]);
  }
  return s;
}

}  // namespace blockarg
