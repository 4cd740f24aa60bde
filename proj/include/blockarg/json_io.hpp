#pragma once

// JSON surface: framework documents (with optional fixture metadata),
// assumption-based documents, labellings, flat representations, violation
// lists and semantics reports. Serialization is canonical: object keys are
// sorted and edge lists are sorted, so parse/dump round-trips are
// byte-identical.

#include <string>
#include <vector>

#include <json.hpp>

#include "blockarg/aba.hpp"
#include "blockarg/constraints.hpp"
#include "blockarg/flatrep.hpp"
#include "blockarg/labels.hpp"
#include "blockarg/model.hpp"
#include "blockarg/semantics.hpp"

namespace blockarg {

using json = nlohmann::json;

inline bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(s[0])) return false;
  for (size_t i = 1; i < s.size(); ++i)
    if (!tail(s[i])) return false;
  return true;
}

struct FixtureDivergence {
  ConstraintSet when;
  std::string note;
  json documented;
};

struct FixtureMeta {
  json raw;  // null when absent
  std::vector<FixtureDivergence> divergences;

  bool present() const { return !raw.is_null(); }
};

struct LoadedFramework {
  FrameworkDoc doc;
  FixtureMeta meta;
};

inline LoadedFramework framework_from_json(const json& j) {
  if (!j.is_object() || !j.contains("definitions") || !j.contains("root"))
    throw Error(ErrorCode::BadInput, "expected {\"definitions\":..., \"root\":...}");
  LoadedFramework out;
  for (const auto& [name, val] : j.at("definitions").items()) {
    if (!valid_name(name))
      throw Error(ErrorCode::BadInput, "bad definition name '" + name + "'");
    if (val.contains("atom")) {
      out.doc.definitions[name] = ContentAtom{val.at("atom").get<std::string>()};
    } else if (val.contains("block")) {
      const auto& b = val.at("block");
      BlockDoc blk;
      for (const auto& a : b.at("args")) {
        auto nm = a.get<std::string>();
        if (!valid_name(nm)) throw Error(ErrorCode::BadInput, "bad name '" + nm + "'");
        blk.args.push_back(nm);
      }
      auto read_pairs = [](const json& arr, std::vector<std::pair<std::string, std::string>>& to) {
        for (const auto& p : arr) {
          if (!p.is_array() || p.size() != 2)
            throw Error(ErrorCode::BadInput, "edge must be a [from,to] pair");
          to.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
      };
      if (b.contains("attacks")) read_pairs(b.at("attacks"), blk.attacks);
      if (b.contains("supports")) read_pairs(b.at("supports"), blk.supports);
      out.doc.definitions[name] = std::move(blk);
    } else {
      throw Error(ErrorCode::BadInput, "definition '" + name + "' is neither atom nor block");
    }
  }
  out.doc.root = j.at("root").get<std::string>();
  if (j.contains("meta")) {
    out.meta.raw = j.at("meta");
    if (out.meta.raw.contains("divergences"))
      for (const auto& d : out.meta.raw.at("divergences")) {
        FixtureDivergence div;
        std::vector<std::string> names;
        for (const auto& c : d.at("constraints")) names.push_back(c.get<std::string>());
        div.when = constraint_set_from_names(names);
        div.note = d.value("note", std::string{});
        if (d.contains("documented")) div.documented = d.at("documented");
        out.meta.divergences.push_back(std::move(div));
      }
  }
  return out;
}

inline LoadedFramework framework_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, true, /*ignore_comments=*/false);
  return framework_from_json(j);
}

inline json framework_to_json(const FrameworkDoc& doc, const FixtureMeta& meta = {}) {
  json defs = json::object();
  for (const auto& [name, val] : doc.definitions) {
    if (const auto* atom = std::get_if<ContentAtom>(&val)) {
      defs[name] = json{{"atom", atom->id}};
    } else {
      const auto& b = std::get<BlockDoc>(val);
      json attacks = json::array(), supports = json::array();
      auto sorted = [](std::vector<std::pair<std::string, std::string>> es) {
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        return es;
      };
      for (const auto& [u, v] : sorted(b.attacks)) attacks.push_back(json::array({u, v}));
      for (const auto& [u, v] : sorted(b.supports)) supports.push_back(json::array({u, v}));
      defs[name] = json{{"block", json{{"args", b.args}, {"attacks", attacks}, {"supports", supports}}}};
    }
  }
  json out{{"definitions", defs}, {"root", doc.root}};
  if (meta.present()) out["meta"] = meta.raw;
  return out;
}

inline json position_to_json(const Position& p) { return json(p); }

inline Position position_from_json(const json& j) {
  Position p;
  for (const auto& n : j) p.push_back(n.get<int>());
  return p;
}

inline json flat_to_json(const FlatRep& flat) {
  json out = json::array();
  for (const auto& e : flat.entries)
    out.push_back(json{{"pos", position_to_json(e.pos)}, {"name", flat.fw->name(e.def)}});
  return out;
}

inline json labelling_to_json(const FlatRep& flat, const Labelling& lab) {
  json out = json::array();
  for (size_t e = 0; e < flat.size(); ++e)
    out.push_back(json{{"pos", position_to_json(flat.entries[e].pos)},
                       {"label", std::string(1, label_char(lab.v[e]))}});
  return out;
}

inline Labelling labelling_from_json(const FlatRep& flat, const json& j) {
  Labelling lab = all_undec(flat);
  std::vector<bool> seen(flat.size(), false);
  for (const auto& item : j) {
    Position p = position_from_json(item.at("pos"));
    auto it = flat.by_pos.find(p);
    if (it == flat.by_pos.end())
      throw Error(ErrorCode::DomainMismatch, "labelled position " + position_str(p) +
                                                 " has no occurrence");
    auto ls = item.at("label").get<std::string>();
    if (ls.size() != 1) throw Error(ErrorCode::BadInput, "label must be +, - or ?");
    lab.v[static_cast<size_t>(it->second)] = label_from_char(ls[0]);
    seen[static_cast<size_t>(it->second)] = true;
  }
  for (size_t e = 0; e < flat.size(); ++e)
    if (!seen[e])
      throw Error(ErrorCode::DomainMismatch,
                  "position " + position_str(flat.entries[e].pos) + " is unlabelled");
  return lab;
}

inline json violations_to_json(const FlatRep& flat, const std::vector<ConstraintViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json item{{"constraint", constraint_kind_name(v.kind)},
              {"pos", position_to_json(flat.entries[static_cast<size_t>(v.entry)].pos)},
              {"name", flat.name(v.entry)}};
    if (v.witness >= 0)
      item["witness"] = position_to_json(flat.entries[static_cast<size_t>(v.witness)].pos);
    out.push_back(std::move(item));
  }
  return out;
}

inline json extension_family_to_json(const ExtensionFamily& fam) {
  json out = json::array();
  for (const auto& ext : fam) out.push_back(json(ext));
  return out;
}

inline json semantics_to_json(const SemanticsResult& r) {
  return json{{"complete", extension_family_to_json(r.complete)},
              {"grounded", json(r.grounded)},
              {"grounded_is_complete", r.grounded_is_complete},
              {"semi_grounded", extension_family_to_json(r.semi_grounded)},
              {"preferred", extension_family_to_json(r.preferred)}};
}

inline ABADoc aba_from_json(const json& j) {
  ABADoc doc;
  for (const auto& s : j.at("sentences")) doc.sentences.push_back(s.get<std::string>());
  if (j.contains("rules"))
    for (const auto& r : j.at("rules")) {
      AbaRule rule;
      rule.head = r.at("head").get<std::string>();
      for (const auto& b : r.at("body")) rule.body.push_back(b.get<std::string>());
      doc.rules.push_back(std::move(rule));
    }
  for (const auto& a : j.at("assumptions")) doc.assumptions.push_back(a.get<std::string>());
  if (j.contains("contrary"))
    for (const auto& [a, h] : j.at("contrary").items())
      doc.contrary[a] = h.get<std::string>();
  return doc;
}

inline json aba_to_json(const ABADoc& doc) {
  json rules = json::array();
  for (const auto& r : doc.rules)
    rules.push_back(json{{"head", r.head}, {"body", r.body}});
  return json{{"sentences", doc.sentences},
              {"rules", rules},
              {"assumptions", doc.assumptions},
              {"contrary", json(doc.contrary)}};
}

}  // namespace blockarg
