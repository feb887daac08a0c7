#include <catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "treecut/cli.hpp"
#include "treecut/newick.hpp"
#include "treecut/reference.hpp"
#include "treecut/solver.hpp"

using namespace treecut;
using treecut::testing::profile_of;

namespace {

bool has_reason(const WitnessReport& r, const std::string& reason) {
  return std::find(r.reasons.begin(), r.reasons.end(), reason) != r.reasons.end();
}

Requirement requirement_for(const DisplayGraph& g, std::size_t tree, const std::string& u, const std::string& v) {
  auto e = *g.find_edge(u, v);
  const auto& edges = g.tree_edges(tree);
  auto local = static_cast<std::size_t>(std::find(edges.begin(), edges.end(), e) - edges.begin());
  return {tree, local};
}

}  // namespace

TEST_CASE("requirements") {
  CHECK(requirements_of(seven_taxon_profile()).size() == 5);
  CHECK(requirements_of(six_taxon_profile()).size() == 4);
  CHECK(requirements_of(profile_of({"((a,b),(c,d));", "((a,c),(b,e));", "(a,b,c);"})).size() == 2);

  DisplayGraph g(seven_taxon_profile());
  std::vector<std::string> names;
  for (const auto& r : requirements_of(g.profile())) names.push_back(g.edge_name(g.edge_of(r.tree, r.edge)));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"1-2", "2-3", "4-5", "5-6", "6-7"});
}

TEST_CASE("candidate cuts") {
  DisplayGraph g(seven_taxon_profile());
  auto family = enumerate_minimal_cuts(g);
  auto f1 = cuts_from_names(g, {{"1-2", "5-6"}}).front();
  auto f3 = cuts_from_names(g, {{"4-5", "1-2", "1-c"}}).front();

  auto for_12 = candidate_cuts(g, family, requirement_for(g, 0, "1", "2"), Mode::compatibility);
  CHECK(std::find(for_12.begin(), for_12.end(), f1) != for_12.end());
  CHECK(std::find(for_12.begin(), for_12.end(), f3) == for_12.end());
  auto for_45 = candidate_cuts(g, family, requirement_for(g, 1, "4", "5"), Mode::compatibility);
  CHECK(std::find(for_45.begin(), for_45.end(), f3) != for_45.end());

  auto agreeing = candidate_cuts(g, family, requirement_for(g, 1, "4", "5"), Mode::agreement);
  CHECK(agreeing.size() <= for_45.size());
  for (const auto& c : agreeing) {
    CHECK(c.per_tree[0].size() <= 1);
    CHECK(c.per_tree[1].size() == 1);
    CHECK(is_legal_cut(g, c.edges));
  }
}

TEST_CASE("seven-taxon decisions") {
  auto p = seven_taxon_profile();
  auto compat = decide_compatibility(p);
  REQUIRE(compat.verdict == Verdict::yes);
  CHECK(verify_witness(p, *compat.witness).ok);
  for (const auto& t : p.trees()) CHECK(displays(compat.witness->supertree, t));
  CHECK(decide_agreement(p).verdict == Verdict::no);

  DisplayGraph g(p);
  auto hinted = make_witness(g, cuts_from_names(g, seven_taxon_cut_family()), Mode::compatibility);
  CHECK(verify_witness(p, hinted).ok);
  CHECK(hinted.splits.size() == 4);
}

TEST_CASE("six-taxon agreement") {
  auto p = six_taxon_profile();
  auto d = decide_agreement(p);
  REQUIRE(d.verdict == Verdict::yes);
  CHECK(verify_witness(p, *d.witness).ok);
  for (const auto& t : p.trees()) CHECK(agrees(d.witness->supertree, t));
  CHECK(trees_isomorphic(d.witness->supertree, parse_newick(six_taxon_supertree())));

  DisplayGraph g(p);
  auto hinted = make_witness(g, cuts_from_names(g, six_taxon_cut_family()), Mode::agreement);
  CHECK(verify_witness(p, hinted).ok);
  // An agreement witness is also a compatibility witness.
  auto relaxed = *d.witness;
  relaxed.mode = Mode::compatibility;
  CHECK(verify_witness(p, relaxed).ok);
}

TEST_CASE("verify_witness reports broken families") {
  auto p = seven_taxon_profile();
  DisplayGraph g(p);
  auto good = make_witness(g, cuts_from_names(g, seven_taxon_cut_family()), Mode::compatibility);

  auto missing = good;
  auto f2 = cuts_from_names(g, {{"2-3", "6-7", "5-6"}}).front();
  missing.cuts.erase(std::find(missing.cuts.begin(), missing.cuts.end(), f2));
  auto r1 = verify_witness(p, missing);
  CHECK_FALSE(r1.ok);
  CHECK(has_reason(r1, "completeness"));

  bool replaced = false;
  for (const auto& c : enumerate_minimal_cuts(g)) {
    if (!is_legal_cut(g, c.edges)) continue;
    auto crossing = good;
    auto slot = std::find(crossing.cuts.begin(), crossing.cuts.end(), f2);
    *slot = c;
    bool clash = std::any_of(crossing.cuts.begin(), crossing.cuts.end(),
                             [&](const Cut& other) { return !cuts_parallel(g, c, other); });
    if (!clash) continue;
    auto r2 = verify_witness(p, crossing);
    CHECK_FALSE(r2.ok);
    CHECK(has_reason(r2, "parallelism"));
    replaced = true;
    break;
  }
  CHECK(replaced);

  auto wrong_tree = good;
  wrong_tree.supertree = parse_newick("(a,b,c,d,e,f,g);");
  CHECK(has_reason(verify_witness(p, wrong_tree), "supertree"));

  auto as_agreement = good;
  as_agreement.mode = Mode::agreement;
  auto r3 = verify_witness(p, as_agreement);
  CHECK(has_reason(r3, "agreement-bound"));
  CHECK(has_reason(r3, "agree"));

  auto not_minimal = good;
  not_minimal.cuts.front().edges.push_back(*g.find_edge("7", "g"));
  CHECK(has_reason(verify_witness(p, not_minimal), "minimality"));
}

TEST_CASE("simple profiles") {
  auto single = profile_of({"((a,b),c,(d,e));"});
  auto d = decide_compatibility(single);
  REQUIRE(d.verdict == Verdict::yes);
  CHECK(trees_isomorphic(d.witness->supertree, single.tree(0)));
  CHECK(decide_agreement(single).verdict == Verdict::yes);

  CHECK(decide_compatibility(profile_of({"((a,b),(c,d));", "((a,c),(b,d));"})).verdict == Verdict::no);

  auto same = profile_of({"((a,b),c,(d,e));", "((a,b),c,(d,e));"});
  auto a = decide_agreement(same);
  REQUIRE(a.verdict == Verdict::yes);
  CHECK(trees_isomorphic(a.witness->supertree, same.tree(0)));

  auto small = profile_of({"(a,b,c);", "(c,d);", "(d,e,f);"});
  auto s = decide_compatibility(small);
  REQUIRE(s.verdict == Verdict::yes);
  CHECK(s.witness->cuts.empty());
  CHECK(s.witness->supertree.internal_vertices().size() == 1);
  CHECK(s.witness->supertree.labels() == small.labels());
}

TEST_CASE("disconnected profiles") {
  auto p = profile_of({"((a,b),(c,d));", "((e,f),(g,h));"});
  auto d = decide_agreement(p);
  REQUIRE(d.verdict == Verdict::yes);
  CHECK(verify_witness(p, *d.witness).ok);
  for (const auto& t : p.trees()) CHECK(agrees(d.witness->supertree, t));
}

TEST_CASE("limit outcome") {
  auto p = seven_taxon_profile();
  auto d = decide_compatibility(p, SolverOptions{10});
  CHECK(d.verdict == Verdict::limit);
  CHECK_FALSE(d.witness.has_value());
  CHECK_FALSE(d.detail.empty());
}

TEST_CASE("determinism") {
  DisplayGraph g(seven_taxon_profile());
  auto first = witness_to_json(g, *decide_compatibility(g.profile()).witness);
  for (int i = 0; i < 3; ++i) CHECK(witness_to_json(g, *decide_compatibility(seven_taxon_profile()).witness) == first);
}

TEST_CASE("solver witnesses on random profiles") {
  std::mt19937_64 rng(0x501e);
  for (int round = 0; round < 150; ++round) {
    auto p = treecut::testing::mixed_profile(rng, 7, 3);
    for (auto mode : {Mode::compatibility, Mode::agreement}) {
      auto d = decide(p, mode);
      if (d.verdict != Verdict::yes) continue;
      const auto& w = *d.witness;
      CHECK(verify_witness(p, w).ok);
      auto rebuilt = tree_from_splits(w.splits, p.labels());
      for (const auto& t : p.trees()) {
        CHECK(displays(rebuilt, t));
        if (mode == Mode::agreement) CHECK(agrees(rebuilt, t));
      }
    }
  }
}
