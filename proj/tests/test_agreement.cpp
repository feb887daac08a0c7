#include <catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "treecut/agreement.hpp"
#include "treecut/newick.hpp"
#include "treecut/reference.hpp"
#include "treecut/solver.hpp"

using namespace treecut;
using treecut::testing::profile_of;

namespace {

std::optional<std::size_t> edge_with_split(const PhyloTree& t, const std::string& text) {
  for (std::size_t e = 0; e < t.edges().size(); ++e) {
    auto [a, b] = edge_bipartition(t, e);
    if (Split(a, b).to_string() == text) return e;
  }
  return std::nullopt;
}

std::vector<std::string> names(const DisplayGraph& g, const EdgeSet& edges) {
  auto out = edge_names(g, edges);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("cut function of the six-taxon agreement supertree") {
  DisplayGraph g(six_taxon_profile());
  auto s = parse_newick(six_taxon_supertree());
  auto psi = agreement_cut_function(s, g);
  REQUIRE(psi.size() == s.edges().size());
  CHECK(names(g, psi[*edge_with_split(s, "ab|cdef")]) == std::vector<std::string>{"1-2", "4-5"});
  CHECK(names(g, psi[*edge_with_split(s, "a|bcdef")]) == std::vector<std::string>{"1-a", "4-a"});
  CHECK(names(g, psi[*edge_with_split(s, "abf|cde")]) == std::vector<std::string>{"1-2", "5-6"});
  for (const auto& cut : psi) CHECK(g.component_count(cut) > 1);
  CHECK(agreement_cut_function(s, six_taxon_profile()) == psi);
}

TEST_CASE("cut function of a single tree is the identity") {
  auto p = profile_of({"((a,b),c,(d,(e,f)));"});
  DisplayGraph g(p);
  auto psi = agreement_cut_function(p.tree(0), g);
  for (std::size_t e = 0; e < psi.size(); ++e) CHECK(psi[e] == EdgeSet{g.edge_of(0, e)});
}

TEST_CASE("cut function rejects trees that are not agreement supertrees") {
  DisplayGraph g(six_taxon_profile());
  CHECK_THROWS_AS(agreement_cut_function(parse_newick("(a,b,c,d,e,f);"), g), std::invalid_argument);
  CHECK_THROWS_AS(agreement_cut_function(parse_newick("((a,b),(c,d),e);"), g), std::invalid_argument);
}

TEST_CASE("minimal cut functions are left alone") {
  DisplayGraph g(six_taxon_profile());
  auto s = parse_newick(six_taxon_supertree());
  CHECK(trees_isomorphic(minimize_cut_function(s, g), s));
  for (std::size_t e = 0; e < s.edges().size(); ++e) {
    if (!s.is_internal_edge(e)) continue;
    auto [x, y] = s.edges()[e];
    CHECK_THROWS_AS(split_edge_at(s, e, x, g), std::invalid_argument);
    CHECK_THROWS_AS(split_edge_at(s, e, y, g), std::invalid_argument);
  }
  auto leaf_edge = *edge_with_split(s, "a|bcdef");
  auto leaf = s.is_leaf(s.edges()[leaf_edge].first) ? s.edges()[leaf_edge].first : s.edges()[leaf_edge].second;
  CHECK_THROWS_AS(split_edge_at(s, leaf_edge, leaf, g), std::invalid_argument);
}

TEST_CASE("fixpoint on random instances") {
  std::mt19937_64 rng(0xf1f0);
  int instances = 0;
  for (int attempt = 0; attempt < 20000 && instances < 25; ++attempt) {
    auto inst = treecut::testing::nonminimal_agreement_instance(rng, 8, 3);
    if (!inst) continue;
    ++instances;
    DisplayGraph g(inst->profile);

    // One split step keeps the tree an agreement supertree.
    auto psi = agreement_cut_function(inst->supertree, g);
    std::size_t target = 0;
    while (!(inst->supertree.is_internal_edge(target) && !is_minimal_cut(g, psi[target]))) ++target;
    auto [x, y] = inst->supertree.edges()[target];
    auto endpoint = far_side_groups(inst->supertree, target, x, g) > 1 ? x : y;
    auto once = split_edge_at(inst->supertree, target, endpoint, g);
    for (const auto& t : inst->profile.trees()) CHECK(agrees(once, t));
    for (const auto& cut : agreement_cut_function(once, g)) CHECK(g.component_count(cut) > 1);

    auto fixed = minimize_cut_function(inst->supertree, g);
    for (const auto& t : inst->profile.trees()) CHECK(agrees(fixed, t));
    auto final_psi = agreement_cut_function(fixed, g);
    for (std::size_t e = 0; e < final_psi.size(); ++e) CHECK(is_minimal_cut(g, final_psi[e]));
  }
  CHECK(instances >= 20);
}

TEST_CASE("pendant edge at a leaf that is a cut vertex stays non-minimal") {
  auto p = profile_of({"((a,b),(c,x));", "((d,e),(f,x));"});
  DisplayGraph g(p);
  auto d = decide_agreement(p);
  REQUIRE(d.verdict == Verdict::yes);
  auto fixed = minimize_cut_function(d.witness->supertree, g);
  auto psi = agreement_cut_function(fixed, g);
  for (std::size_t e = 0; e < psi.size(); ++e) {
    auto [u, v] = fixed.edges()[e];
    bool at_x = fixed.label(u) == "x" || fixed.label(v) == "x";
    if (fixed.is_internal_edge(e) || !at_x) {
      CHECK(is_minimal_cut(g, psi[e]));
    } else {
      CHECK(g.component_count(psi[e]) == 3);
    }
  }
}
