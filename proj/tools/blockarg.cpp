// blockarg: solver CLI for block bipolar argumentation documents.
//
// Subcommands: solve, check, flatten, encode-aba, dot.
// Exit codes: 0 success; 1 input/validation error (or a nonempty check
// report); 2 empty fixpoint result; 3 cap or time limit exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "blockarg/blockarg.hpp"

namespace {

using namespace blockarg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitCap = 3;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SizeCapExceeded:
    case ErrorCode::OracleCapExceeded:
    case ErrorCode::Timeout:
      return kExitCap;
    default:
      return kExitInput;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_dsl_path(const std::string& path) {
  auto ends_with = [&](const std::string& suf) {
    return path.size() >= suf.size() && path.compare(path.size() - suf.size(), suf.size(), suf) == 0;
  };
  return ends_with(".bba") || ends_with(".dsl");
}

LoadedFramework load_input(const std::string& path, bool force_dsl) {
  if (force_dsl || is_dsl_path(path)) return LoadedFramework{parse_dsl(read_file(path)), {}};
  return framework_from_json_text(read_file(path));
}

struct CommonOpts {
  std::string input;
  std::string format = "text";
  bool dsl = false;
  SolverConfig cfg;
};

void add_solver_flags(CLI::App* cmd, CommonOpts& o, std::string& constraints,
                      std::string& mode, std::string& scope, std::string& dominance) {
  cmd->add_option("--constraints", constraints,
                  "comma list of G,S,STAR or 'none' (default none)");
  cmd->add_option("--mode", mode, "fixpoint|repair")->check(CLI::IsMember({"fixpoint", "repair"}));
  cmd->add_option("--scope", scope, "local|enclosing")
      ->check(CLI::IsMember({"local", "enclosing"}));
  cmd->add_option("--s-dominance", dominance, "depth|prefix")
      ->check(CLI::IsMember({"depth", "prefix"}));
  cmd->add_flag("--collapse-eq", o.cfg.collapse_eq, "merge eq-equal extension members");
  cmd->add_option("--cap", o.cfg.caps.max_occurrences, "occurrence cap for flatten");
  cmd->add_option("--time-limit", o.cfg.caps.time_limit_ms, "milliseconds, 0 = unlimited");
}

void apply_solver_flags(CommonOpts& o, const std::string& constraints, const std::string& mode,
                        const std::string& scope, const std::string& dominance) {
  std::vector<std::string> names;
  std::stringstream ss(constraints);
  std::string item;
  while (std::getline(ss, item, ',')) names.push_back(item);
  o.cfg.constraints = constraint_set_from_names(names);
  o.cfg.mode = mode == "repair" ? Mode::Repair : Mode::Fixpoint;
  o.cfg.scope = scope == "enclosing" ? Scope::Enclosing : Scope::Local;
  o.cfg.s_dominance = dominance == "prefix" ? SDominance::Prefix : SDominance::Depth;
}

json active_divergences(const FixtureMeta& meta, const ConstraintSet& c) {
  json out = json::array();
  for (const auto& d : meta.divergences) {
    bool applies = (!d.when.g || c.g) && (!d.when.s || c.s) && (!d.when.star || c.star);
    if (!applies) continue;
    json item{{"constraints", constraint_set_str(d.when)}, {"note", d.note}};
    if (!d.documented.is_null()) item["documented"] = d.documented;
    out.push_back(std::move(item));
  }
  return out;
}

void print_family(std::ostream& os, const std::string& name, const ExtensionFamily& fam) {
  os << name << ":";
  if (fam.empty()) os << " (none)";
  for (const auto& ext : fam) {
    os << " {";
    for (size_t i = 0; i < ext.size(); ++i) os << (i ? "," : "") << ext[i];
    os << "}";
  }
  os << "\n";
}

int run_solve(const CommonOpts& o, const std::string& semantics, const std::string& engine) {
  auto loaded = load_input(o.input, o.dsl);
  Framework fw = validate(loaded.doc);
  FlatRep flat = flatten(fw, o.cfg.caps.max_occurrences);

  std::vector<Labelling> labellings;
  if (engine == "oracle") {
    SolverConfig cfg = o.cfg;
    auto ctx = make_constraint_context(flat, cfg.s_dominance);
    labellings = brute_force_labellings(
        flat, [&](const Labelling& lab) { return is_complete_under(ctx, lab, cfg).ok; },
        cfg.caps);
  } else {
    labellings = solve_labellings(flat, o.cfg);
  }
  auto family = extensions_at_root(flat, labellings, o.cfg.collapse_eq);
  auto result = aggregate_semantics(family);
  result.config = o.cfg;
  json divergences = active_divergences(loaded.meta, o.cfg.constraints);

  if (o.format == "json") {
    json labs = json::array();
    for (const auto& lab : labellings) labs.push_back(labelling_to_json(flat, lab));
    json out{{"config",
              json{{"constraints", constraint_set_str(o.cfg.constraints)},
                   {"mode", o.cfg.mode == Mode::Repair ? "repair" : "fixpoint"},
                   {"scope", o.cfg.scope == Scope::Enclosing ? "enclosing" : "local"},
                   {"s_dominance", o.cfg.s_dominance == SDominance::Prefix ? "prefix" : "depth"},
                   {"collapse_eq", o.cfg.collapse_eq},
                   {"engine", engine}}},
             {"labellings", labs},
             {"extensions", extension_family_to_json(family)},
             {"semantics", semantics_to_json(result)},
             {"divergences", divergences}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << labellings.size() << " labelling(s) under "
              << constraint_set_str(o.cfg.constraints) << "\n";
    for (const auto& lab : labellings) std::cout << "  " << labelling_str(flat, lab) << "\n";
    if (semantics == "complete" || semantics == "all")
      print_family(std::cout, "complete", result.complete);
    if (semantics == "grounded" || semantics == "all") {
      std::cout << "grounded: {";
      for (size_t i = 0; i < result.grounded.size(); ++i)
        std::cout << (i ? "," : "") << result.grounded[i];
      std::cout << "}" << (result.grounded_is_complete ? "" : "  [not itself complete]") << "\n";
    }
    if (semantics == "semi-grounded" || semantics == "all")
      print_family(std::cout, "semi-grounded", result.semi_grounded);
    if (semantics == "preferred" || semantics == "all")
      print_family(std::cout, "preferred", result.preferred);
    for (const auto& d : divergences)
      std::cout << "note [" << d.at("constraints").get<std::string>()
                << "]: " << d.at("note").get<std::string>() << "\n";
  }
  if (labellings.empty() && o.cfg.mode == Mode::Fixpoint && engine != "oracle") return kExitEmpty;
  if (labellings.empty() && engine == "oracle") return kExitEmpty;
  return kExitOk;
}

int run_check(const CommonOpts& o, const std::string& labelling_path) {
  auto loaded = load_input(o.input, o.dsl);
  Framework fw = validate(loaded.doc);
  FlatRep flat = flatten(fw, o.cfg.caps.max_occurrences);
  auto lab = labelling_from_json(flat, json::parse(read_file(labelling_path)));
  auto ctx = make_constraint_context(flat, o.cfg.s_dominance);
  auto report = constraint_report(ctx, lab, o.cfg.constraints);
  if (o.format == "json") {
    std::cout << violations_to_json(flat, report).dump(2) << "\n";
  } else {
    if (report.empty()) std::cout << "no violations\n";
    for (const auto& v : report) {
      std::cout << constraint_kind_name(v.kind) << " violated at "
                << position_str(flat.entries[static_cast<size_t>(v.entry)].pos) << " ("
                << flat.name(v.entry) << ")";
      if (v.witness >= 0)
        std::cout << " by " << position_str(flat.entries[static_cast<size_t>(v.witness)].pos);
      std::cout << "\n";
    }
  }
  return report.empty() ? kExitOk : kExitInput;
}

int run_flatten(const CommonOpts& o) {
  auto loaded = load_input(o.input, o.dsl);
  Framework fw = validate(loaded.doc);
  FlatRep flat = flatten(fw, o.cfg.caps.max_occurrences);
  if (o.format == "json") {
    std::cout << flat_to_json(flat).dump(2) << "\n";
  } else {
    for (const auto& e : flat.entries)
      std::cout << position_str(e.pos) << "  " << fw.name(e.def) << "\n";
  }
  return kExitOk;
}

int run_encode(const CommonOpts& o, const std::string& out_path) {
  auto doc = aba_from_json(json::parse(read_file(o.input)));
  auto aba = validate_aba(doc);
  auto trees = build_tree_arguments(aba, o.cfg.caps);
  auto enc = encode_to_bba(aba, trees);
  FixtureMeta meta;
  json tree_map = json::object();
  for (size_t t = 0; t < enc.tree_names.size(); ++t)
    tree_map[enc.tree_names[t]] = trees.tree_str(aba, static_cast<int>(t));
  meta.raw = json{{"source", "aba"}, {"trees", tree_map}};
  json out = framework_to_json(enc.doc, meta);
  if (out_path.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::BadInput, "cannot write '" + out_path + "'");
    f << out.dump(2) << "\n";
  }
  return kExitOk;
}

int run_dot(const CommonOpts& o, const std::string& labelling_path) {
  auto loaded = load_input(o.input, o.dsl);
  Framework fw = validate(loaded.doc);
  FlatRep flat = flatten(fw, o.cfg.caps.max_occurrences);
  if (labelling_path.empty()) {
    std::cout << export_dot(flat);
  } else {
    auto lab = labelling_from_json(flat, json::parse(read_file(labelling_path)));
    std::cout << export_dot(flat, &lab);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block bipolar argumentation solver"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string constraints = "none", mode = "fixpoint", scope = "local", dominance = "depth";
  std::string semantics = "all", engine = "main", labelling_path, out_path;
  unsigned long long seed = 0;  // reserved: the CLI subcommands are deterministic

  auto* solve = app.add_subcommand("solve", "enumerate labellings and extensions");
  solve->add_option("-i,--input", opts.input)->required();
  solve->add_option("--semantics", semantics)
      ->check(CLI::IsMember({"complete", "grounded", "semi-grounded", "preferred", "all"}));
  solve->add_option("--engine", engine)->check(CLI::IsMember({"main", "oracle"}));
  solve->add_option("--format", opts.format)->check(CLI::IsMember({"json", "text"}));
  solve->add_flag("--from-dsl", opts.dsl, "force DSL input");
  solve->add_option("--seed", seed);
  add_solver_flags(solve, opts, constraints, mode, scope, dominance);

  auto* check = app.add_subcommand("check", "report constraint violations of a labelling");
  check->add_option("-i,--input", opts.input)->required();
  check->add_option("--labelling", labelling_path)->required();
  check->add_option("--format", opts.format)->check(CLI::IsMember({"json", "text"}));
  check->add_flag("--from-dsl", opts.dsl);
  add_solver_flags(check, opts, constraints, mode, scope, dominance);

  auto* flatten_cmd = app.add_subcommand("flatten", "print the flat representation");
  flatten_cmd->add_option("-i,--input", opts.input)->required();
  flatten_cmd->add_option("--format", opts.format)->check(CLI::IsMember({"json", "text"}));
  flatten_cmd->add_flag("--from-dsl", opts.dsl);
  flatten_cmd->add_option("--cap", opts.cfg.caps.max_occurrences);

  auto* encode = app.add_subcommand("encode-aba", "encode an assumption-based document");
  encode->add_option("-i,--input", opts.input)->required();
  encode->add_option("-o,--output", out_path);

  auto* dot = app.add_subcommand("dot", "graphviz export");
  dot->add_option("-i,--input", opts.input)->required();
  dot->add_option("--labelling", labelling_path);
  dot->add_flag("--from-dsl", opts.dsl);

  CLI11_PARSE(app, argc, argv);
  (void)seed;

  try {
    apply_solver_flags(opts, constraints, mode, scope, dominance);
    if (solve->parsed()) return run_solve(opts, semantics, engine);
    if (check->parsed()) return run_check(opts, labelling_path);
    if (flatten_cmd->parsed()) return run_flatten(opts);
    if (encode->parsed()) return run_encode(opts, out_path);
    if (dot->parsed()) return run_dot(opts, labelling_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
