#include "treecut/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "treecut/elig.hpp"
#include "treecut/newick.hpp"
#include "treecut/oracle.hpp"
#include "treecut/reference.hpp"

namespace treecut {

namespace {

using nlohmann::json;

struct Config {
  std::vector<std::string> inputs;
  std::string output;
  std::string witness_path;
  bool oracle = false;
  bool json = false;
  bool elig = false;
  bool agree = false;
  std::size_t limit = 0;
};

json cut_names(const DisplayGraph& g, const Cut& cut) { return edge_names(g, cut.edges); }

json split_sides(const Split& s) {
  return json::array({std::vector<Label>(s.side_a().begin(), s.side_a().end()),
                      std::vector<Label>(s.side_b().begin(), s.side_b().end())});
}

// Writes to `-o` when given, else to `out`.
void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw std::runtime_error("cannot write " + cfg.output);
  file << text;
}

std::size_t resolve_limit(const Config& cfg) {
  if (cfg.limit != 0) return cfg.limit;
  if (const char* env = std::getenv("TREECUT_LIMIT")) {
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoul(env, &used);
      if (used != std::string(env).size()) value = 0;
    } catch (const std::exception&) {
      value = 0;
    }
    if (value < 4 || value > kMaxVertexLimit) {
      throw std::runtime_error("TREECUT_LIMIT must be an integer in [4, " + std::to_string(kMaxVertexLimit) + "]");
    }
    return value;
  }
  return kDefaultVertexLimit;
}

int decide_command(const Config& cfg, Mode mode, std::ostream& out) {
  const auto profile = read_profile(cfg.inputs);
  if (cfg.oracle) {
    if (!cfg.witness_path.empty()) throw std::runtime_error("--witness is not available with --oracle");
    auto tree = mode == Mode::agreement ? oracle_agreement(profile) : oracle_compatible(profile);
    if (cfg.json) {
      json doc{{"schema", kWitnessSchema}, {"mode", to_string(mode)}, {"answer", tree ? "YES" : "NO"}};
      if (tree) doc["supertree"] = to_newick(*tree);
      emit(cfg, out, doc.dump() + "\n");
    } else {
      emit(cfg, out, tree ? "YES\n" : "NO\n");
    }
    return tree ? kExitYes : kExitNo;
  }

  const auto decision = decide(profile, mode, SolverOptions{resolve_limit(cfg)});
  const DisplayGraph g(profile);
  if (decision.verdict == Verdict::yes && !cfg.witness_path.empty()) {
    std::ofstream file(cfg.witness_path);
    if (!file) throw std::runtime_error("cannot write " + cfg.witness_path);
    file << witness_to_json(g, *decision.witness) << "\n";
  }
  const char* answer = decision.verdict == Verdict::yes ? "YES" : decision.verdict == Verdict::no ? "NO" : "LIMIT";
  if (cfg.json) {
    json doc{{"schema", kWitnessSchema}, {"mode", to_string(mode)}, {"answer", answer}};
    if (decision.witness) doc["witness"] = json::parse(witness_to_json(g, *decision.witness));
    if (decision.verdict == Verdict::limit) doc["detail"] = decision.detail;
    emit(cfg, out, doc.dump() + "\n");
  } else {
    std::string text = std::string(answer) + "\n";
    if (decision.verdict == Verdict::limit) text = "LIMIT " + decision.detail + "\n";
    emit(cfg, out, text);
  }
  switch (decision.verdict) {
    case Verdict::yes:
      return kExitYes;
    case Verdict::no:
      return kExitNo;
    case Verdict::limit:
      return kExitLimit;
  }
  return kExitError;
}

int supertree_command(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto profile = read_profile(cfg.inputs);
  const auto mode = cfg.agree ? Mode::agreement : Mode::compatibility;
  std::optional<PhyloTree> tree;
  if (cfg.oracle) {
    tree = mode == Mode::agreement ? oracle_agreement(profile) : oracle_compatible(profile);
  } else {
    auto decision = decide(profile, mode, SolverOptions{resolve_limit(cfg)});
    if (decision.verdict == Verdict::limit) {
      err << "limit: " << decision.detail << "\n";
      return kExitLimit;
    }
    if (decision.witness) tree = decision.witness->supertree;
  }
  if (!tree) {
    err << "no " << (cfg.agree ? "agreement supertree" : "compatible supertree") << "\n";
    return kExitNo;
  }
  emit(cfg, out, to_newick(*tree) + "\n");
  return kExitYes;
}

int dot_command(const Config& cfg, std::ostream& out) {
  const DisplayGraph g(read_profile(cfg.inputs));
  std::string text = to_dot(g);
  if (cfg.elig) text += to_dot(Elig(g), g);
  emit(cfg, out, text);
  return kExitYes;
}

int selftest_command(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      out << "  " << e.what() << "\n";
    }
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  check("seven-taxon display graph has 14 vertices and 18 edges", [] {
    DisplayGraph g(seven_taxon_profile());
    return g.vertex_count() == 14 && g.edge_count() == 18;
  });
  check("seven-taxon cut family is a complete parallel nice family", [] {
    DisplayGraph g(seven_taxon_profile());
    auto cuts = cuts_from_names(g, seven_taxon_cut_family());
    auto witness = make_witness(g, cuts, Mode::compatibility);
    if (!verify_witness(g.profile(), witness).ok) return false;
    auto expected = seven_taxon_family_splits();
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      if (!is_nice_cut(g, cuts[i]) || sigma_of_cut(g, cuts[i]).to_string() != expected[i]) return false;
    }
    return true;
  });
  check("seven-taxon profile is compatible", [] {
    auto d = decide_compatibility(seven_taxon_profile());
    return d.verdict == Verdict::yes && verify_witness(seven_taxon_profile(), *d.witness).ok;
  });
  check("seven-taxon profile has no agreement supertree",
        [] { return decide_agreement(seven_taxon_profile()).verdict == Verdict::no; });
  check("six-taxon profile has a verified agreement supertree", [] {
    auto p = six_taxon_profile();
    auto d = decide_agreement(p);
    return d.verdict == Verdict::yes && verify_witness(p, *d.witness).ok &&
           trees_isomorphic(d.witness->supertree, parse_newick(six_taxon_supertree()));
  });
  check("six-taxon reference cut family is an agreement witness", [] {
    DisplayGraph g(six_taxon_profile());
    auto witness = make_witness(g, cuts_from_names(g, six_taxon_cut_family()), Mode::agreement);
    return verify_witness(g.profile(), witness).ok;
  });
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
  return failures == 0 ? kExitYes : kExitNo;
}

}  // namespace

std::string witness_to_json(const DisplayGraph& g, const Witness& witness) {
  json cuts = json::array();
  for (const auto& c : witness.cuts) cuts.push_back(cut_names(g, c));
  json splits = json::array();
  for (const auto& s : witness.splits) splits.push_back(split_sides(s));
  json doc{{"schema", kWitnessSchema},
           {"mode", to_string(witness.mode)},
           {"cuts", cuts},
           {"splits", splits},
           {"supertree", to_newick(witness.supertree)}};
  return doc.dump();
}

Witness witness_from_json(const DisplayGraph& g, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
    if (doc.at("schema").get<int>() != kWitnessSchema) throw std::invalid_argument("unsupported witness schema");
    const auto mode_name = doc.at("mode").get<std::string>();
    if (mode_name != "compatibility" && mode_name != "agreement") throw std::invalid_argument("unknown mode");
    const auto mode = mode_name == "agreement" ? Mode::agreement : Mode::compatibility;
    auto cuts = cuts_from_names(g, doc.at("cuts").get<std::vector<std::vector<std::string>>>());
    std::sort(cuts.begin(), cuts.end());
    SplitSet splits;
    for (const auto& s : doc.at("splits")) {
      auto a = s.at(0).get<std::vector<Label>>();
      auto b = s.at(1).get<std::vector<Label>>();
      splits.emplace(LabelSet(a.begin(), a.end()), LabelSet(b.begin(), b.end()));
    }
    return Witness{mode, std::move(cuts), std::move(splits), parse_newick(doc.at("supertree").get<std::string>())};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed witness: ") + e.what());
  } catch (const NewickError& e) {
    throw std::invalid_argument(std::string("malformed witness supertree: ") + e.what());
  }
}

Profile read_profile(const std::vector<std::string>& paths) {
  std::vector<PhyloTree> trees;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      try {
        trees.push_back(parse_newick(line));
      } catch (const NewickError& e) {
        throw std::runtime_error(path + ":" + std::to_string(number) + ": " + e.what());
      } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path + ":" + std::to_string(number) + ": " + e.what());
      }
    }
  }
  if (trees.empty()) throw std::runtime_error("no trees in input");
  return Profile(std::move(trees));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supertree compatibility and agreement via display-graph cuts", "treecut"};
  app.require_subcommand(1);
  Config cfg;

  auto add_inputs = [&](CLI::App* sub) { sub->add_option("inputs", cfg.inputs, "Newick files")->required(); };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", cfg.limit, "display-graph vertex limit")
        ->check(CLI::Range(std::size_t{4}, kMaxVertexLimit));
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "output file"); };

  auto* compat = app.add_subcommand("compat", "decide whether a compatible supertree exists");
  auto* agree = app.add_subcommand("agree", "decide whether an agreement supertree exists");
  for (auto* sub : {compat, agree}) {
    add_inputs(sub);
    add_limit(sub);
    add_output(sub);
    sub->add_flag("--oracle", cfg.oracle, "use brute-force enumeration");
    sub->add_flag("--json", cfg.json, "print the decision as JSON");
    sub->add_option("--witness", cfg.witness_path, "write the witness JSON here");
  }
  auto* supertree = app.add_subcommand("supertree", "print a supertree in Newick");
  add_inputs(supertree);
  add_limit(supertree);
  add_output(supertree);
  supertree->add_flag("--agree", cfg.agree, "require an agreement supertree");
  supertree->add_flag("--oracle", cfg.oracle, "use brute-force enumeration");
  auto* dot = app.add_subcommand("dot", "print the display graph in DOT");
  add_inputs(dot);
  add_output(dot);
  dot->add_flag("--elig", cfg.elig, "also print the edge label intersection graph");
  auto* selftest = app.add_subcommand("selftest", "run the built-in reference checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitError;
  }

  try {
    if (compat->parsed()) return decide_command(cfg, Mode::compatibility, out);
    if (agree->parsed()) return decide_command(cfg, Mode::agreement, out);
    if (supertree->parsed()) return supertree_command(cfg, out, err);
    if (dot->parsed()) return dot_command(cfg, out);
    if (selftest->parsed()) return selftest_command(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace treecut
