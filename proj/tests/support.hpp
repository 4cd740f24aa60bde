#pragma once

// Shared test helpers: document builders, fixture loading, name-based views
// of entry sets, and the random instance generators used by the property and
// acceptance suites.

#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blockarg/blockarg.hpp"

namespace testsupport {

using namespace blockarg;

inline std::string fixture_path(const std::string& file) {
  return std::string(BLOCKARG_FIXTURE_DIR) + "/" + file;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LoadedFramework load_fixture(const std::string& file) {
  if (file.size() > 4 && file.substr(file.size() - 4) == ".bba")
    return LoadedFramework{parse_dsl(read_file(fixture_path(file))), {}};
  return framework_from_json_text(read_file(fixture_path(file)));
}

// Small builder for programmatic documents.
struct DocBuilder {
  FrameworkDoc doc;

  DocBuilder& atom(const std::string& name, const std::string& id) {
    doc.definitions[name] = ContentAtom{id};
    return *this;
  }
  DocBuilder& block(const std::string& name, std::vector<std::string> args,
                    std::vector<std::pair<std::string, std::string>> attacks = {},
                    std::vector<std::pair<std::string, std::string>> supports = {}) {
    doc.definitions[name] = BlockDoc{std::move(args), std::move(attacks), std::move(supports)};
    return *this;
  }
  DocBuilder& root(const std::string& name) {
    doc.root = name;
    return *this;
  }
};

inline std::set<std::string> names_of(const FlatRep& flat, const std::vector<int>& entries) {
  std::set<std::string> out;
  for (int e : entries) out.insert(flat.name(e));
  return out;
}

inline std::set<std::set<std::string>> name_family(const FlatRep& flat,
                                                   const std::vector<std::vector<int>>& fam) {
  std::set<std::set<std::string>> out;
  for (const auto& s : fam) out.insert(names_of(flat, s));
  return out;
}

inline std::set<std::set<std::string>> family_of(const ExtensionFamily& fam) {
  std::set<std::set<std::string>> out;
  for (const auto& ext : fam) out.insert(std::set<std::string>(ext.begin(), ext.end()));
  return out;
}

// Builds a labelling from position -> label characters; every position of the
// flat representation must be covered (the root defaults to ?).
inline Labelling make_labelling(const FlatRep& flat, const std::map<Position, char>& m) {
  Labelling lab = all_undec(flat);
  for (const auto& [pos, ch] : m) lab.v[static_cast<size_t>(flat.entry_at(pos))] = label_from_char(ch);
  return lab;
}

inline const Labelling* find_labelling(const std::vector<Labelling>& ls, const Labelling& want) {
  for (const auto& l : ls)
    if (l == want) return &l;
  return nullptr;
}

// --- random instances -------------------------------------------------------

struct GenOptions {
  int levels = 2;             // nesting depth below the root block
  int max_children = 4;
  double p_attack = 0.30;
  double p_support = 0.12;
  double p_shared_atom = 0.3; // chance an atom reuses a shared id (eq pairs)
  size_t max_occurrences = 18;
};

inline FrameworkDoc random_doc(std::mt19937_64& rng, const GenOptions& opt = {}) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    FrameworkDoc doc;
    auto chance = [&](double p) {
      return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    };
    auto pick = [&](int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    std::vector<std::vector<std::string>> level_names(1);
    int atoms = pick(2, 5);
    for (int i = 0; i < atoms; ++i) {
      std::string name = "a" + std::to_string(i);
      std::string id = chance(opt.p_shared_atom) ? "shared" + std::to_string(pick(0, 1))
                                                 : "u" + std::to_string(i);
      doc.definitions[name] = ContentAtom{id};
      level_names[0].push_back(name);
    }
    std::vector<std::string> pool = level_names[0];
    for (int lvl = 1; lvl <= opt.levels; ++lvl) {
      level_names.emplace_back();
      int blocks = pick(1, 2);
      for (int b = 0; b < blocks; ++b) {
        std::string name = "b" + std::to_string(lvl) + "_" + std::to_string(b);
        int k = std::min(pick(1, opt.max_children), static_cast<int>(pool.size()));
        std::set<std::string> chosen;
        while (static_cast<int>(chosen.size()) < k)
          chosen.insert(pool[static_cast<size_t>(pick(0, static_cast<int>(pool.size()) - 1))]);
        BlockDoc blk;
        blk.args.assign(chosen.begin(), chosen.end());
        for (const auto& u : blk.args)
          for (const auto& v : blk.args) {
            if (chance(opt.p_attack)) blk.attacks.emplace_back(u, v);
            if (chance(opt.p_support)) blk.supports.emplace_back(u, v);
          }
        doc.definitions[name] = std::move(blk);
        level_names[static_cast<size_t>(lvl)].push_back(name);
      }
      for (const auto& n : level_names[static_cast<size_t>(lvl)]) pool.push_back(n);
    }

    // root: a block over a sample of the pool, always including a top block
    std::string root = "root";
    int k = std::min(pick(2, opt.max_children + 1), static_cast<int>(pool.size()));
    std::set<std::string> chosen{level_names.back()[0]};
    while (static_cast<int>(chosen.size()) < k)
      chosen.insert(pool[static_cast<size_t>(pick(0, static_cast<int>(pool.size()) - 1))]);
    BlockDoc blk;
    blk.args.assign(chosen.begin(), chosen.end());
    for (const auto& u : blk.args)
      for (const auto& v : blk.args) {
        if (chance(opt.p_attack)) blk.attacks.emplace_back(u, v);
        if (chance(opt.p_support)) blk.supports.emplace_back(u, v);
      }
    doc.definitions[root] = std::move(blk);
    doc.root = root;

    try {
      Framework fw = validate(doc);
      FlatRep flat = flatten(fw, opt.max_occurrences);
      (void)flat;
      return doc;
    } catch (const Error&) {
      continue;  // too large, resample
    }
  }
  throw std::runtime_error("random_doc failed to produce an instance");
}

inline ABADoc random_aba(std::mt19937_64& rng, int max_sentences = 6, int max_rules = 6) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto chance = [&](double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
  };
  ABADoc doc;
  int n = pick(2, max_sentences);
  for (int i = 0; i < n; ++i) doc.sentences.push_back("s" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    if (chance(0.5)) doc.assumptions.push_back(doc.sentences[static_cast<size_t>(i)]);
  if (doc.assumptions.empty()) doc.assumptions.push_back(doc.sentences.back());
  std::set<std::string> assumed(doc.assumptions.begin(), doc.assumptions.end());

  int rules = pick(0, max_rules);
  for (int r = 0; r < rules; ++r) {
    int head = pick(0, n - 2 >= 0 ? n - 2 : 0);
    if (assumed.count(doc.sentences[static_cast<size_t>(head)])) continue;
    std::vector<std::string> body;
    for (int j = head + 1; j < n; ++j)
      if (chance(0.5)) body.push_back(doc.sentences[static_cast<size_t>(j)]);
    if (body.empty()) body.push_back(doc.sentences[static_cast<size_t>(pick(head + 1, n - 1))]);
    doc.rules.push_back(AbaRule{doc.sentences[static_cast<size_t>(head)], std::move(body)});
  }
  for (const auto& a : doc.assumptions)
    if (chance(0.6)) doc.contrary[a] = doc.sentences[static_cast<size_t>(pick(0, n - 1))];
  return doc;
}

}  // namespace testsupport
