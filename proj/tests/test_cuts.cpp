#include <catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "treecut/cuts.hpp"
#include "treecut/reference.hpp"
#include "treecut/solver.hpp"

using namespace treecut;
using treecut::testing::profile_of;

namespace {

EdgeSet named(const DisplayGraph& g, const std::vector<std::string>& names) {
  return cuts_from_names(g, {names}).front().edges;
}

std::vector<EdgeSet> edge_sets(const std::vector<Cut>& cuts) {
  std::vector<EdgeSet> out;
  for (const auto& c : cuts) out.push_back(c.edges);
  return out;
}

}  // namespace

TEST_CASE("minimal cuts of small display graphs") {
  DisplayGraph path(profile_of({"(a,b);", "(b,c);"}));
  CHECK(enumerate_minimal_cuts(path).size() == 2);

  DisplayGraph triangle(profile_of({"(a,b);", "(b,c);", "(a,c);"}));
  auto tri = enumerate_minimal_cuts(triangle);
  CHECK(tri.size() == 3);
  for (const auto& c : tri) CHECK(c.edges.size() == 2);

  // 1-a-2-b-1 is a 4-cycle, with pendant leaves c on 1 and d on 2.
  DisplayGraph square(profile_of({"(a,b,c);", "(a,b,d);"}));
  auto cuts = enumerate_minimal_cuts(square);
  CHECK(cuts.size() == 8);
  auto opposite1 = *make_minimal_cut(square, named(square, {"1-a", "2-b"}));
  auto opposite2 = *make_minimal_cut(square, named(square, {"1-b", "2-a"}));
  CHECK_FALSE(cuts_parallel(square, opposite1, opposite2));
  CHECK_FALSE(cuts_parallel(square, opposite2, opposite1));
  CHECK(cuts_parallel(square, opposite1, opposite1));

  DisplayGraph split_graph(profile_of({"(a,b);", "(c,d);"}));
  CHECK_THROWS_AS(enumerate_minimal_cuts(split_graph), std::invalid_argument);
  CHECK(enumerate_component_cuts(split_graph).size() == 2);
}

TEST_CASE("seven-taxon reference family") {
  DisplayGraph g(seven_taxon_profile());
  auto cuts = cuts_from_names(g, seven_taxon_cut_family());
  auto expected = seven_taxon_family_splits();
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    CHECK(is_minimal_cut(g, cuts[i].edges));
    CHECK(is_legal_cut(g, cuts[i].edges));
    CHECK(is_nice_cut(g, cuts[i]));
    CHECK(sigma_of_cut(g, cuts[i]).to_string() == expected[i]);
    for (const auto& other : cuts) CHECK(cuts_parallel(g, cuts[i], other));
  }
  CHECK(splits_of_cutset(g, cuts).size() == 4);
  CHECK(splits_of_cutset(g, std::vector<Cut>{}).empty());

  CHECK(is_legal_cut(g, named(g, {"4-5", "1-2", "1-c"})));
  auto bad = std::vector<EdgeId>{*g.find_edge("1", "a"), *g.find_edge("3", "d")};
  CHECK_FALSE(is_legal_cut(g, bad));
  CHECK(is_legal_cut(g, std::vector<EdgeId>{*g.find_edge("3", "d")}));

  auto lone_g = make_minimal_cut(g, {*g.find_edge("7", "g")});
  REQUIRE(lone_g.has_value());
  CHECK_FALSE(is_nice_cut(g, *lone_g));
  CHECK_THROWS_AS(sigma_of_cut(g, *lone_g), std::invalid_argument);
  CHECK_FALSE(make_minimal_cut(g, {*g.find_edge("1", "2")}).has_value());
}

TEST_CASE("six-taxon sigma") {
  DisplayGraph g(six_taxon_profile());
  auto cut = cuts_from_names(g, {{"1-2", "5-6"}}).front();
  CHECK(sigma_of_cut(g, cut).to_string() == "abf|cde");
}

TEST_CASE("a lone internal vertex side is legal but not nice") {
  DisplayGraph g(profile_of({"(a,b,c);", "(a,b,c);"}));
  auto cut = make_minimal_cut(g, named(g, {"1-a", "1-b", "1-c"}));
  REQUIRE(cut.has_value());
  CHECK(is_legal_cut(g, cut->edges));
  CHECK_FALSE(is_nice_cut(g, *cut));
}

TEST_CASE("trivial sigmas are left out of the split set") {
  std::mt19937_64 rng(0xc075);
  bool seen = false;
  for (int round = 0; round < 200 && !seen; ++round) {
    DisplayGraph g(treecut::testing::mixed_profile(rng, 6, 3));
    for (const auto& c : enumerate_component_cuts(g, kMaxVertexLimit)) {
      if (!is_nice_cut(g, c) || !sigma_of_cut(g, c).trivial()) continue;
      CHECK(splits_of_cutset(g, std::vector<Cut>{c}).empty());
      seen = true;
      break;
    }
  }
  CHECK(seen);
}

TEST_CASE("enumeration matches brute force over vertex bipartitions") {
  std::mt19937_64 rng(0xc076);
  int compared = 0;
  while (compared < 150) {
    DisplayGraph g(treecut::testing::random_profile(rng, 6, 3));
    if (g.vertex_count() > 18) continue;
    ++compared;
    auto cuts = enumerate_component_cuts(g, kMaxVertexLimit);
    CHECK(edge_sets(cuts) == treecut::testing::brute_force_minimal_cuts(g));
    if (g.connected()) CHECK(edge_sets(enumerate_minimal_cuts(g, kMaxVertexLimit)) == edge_sets(cuts));
  }
}

TEST_CASE("enumerated cut invariants") {
  std::mt19937_64 rng(0xc077);
  for (int round = 0; round < 120; ++round) {
    DisplayGraph g(treecut::testing::mixed_profile(rng, 6, 3));
    auto cuts = enumerate_component_cuts(g, kMaxVertexLimit);
    std::vector<Cut> nice;
    for (const auto& c : cuts) {
      auto again = make_minimal_cut(g, c.edges);
      REQUIRE(again.has_value());
      CHECK(again->side_a == c.side_a);
      CHECK(again->side_b == c.side_b);
      CHECK(g.component_count(c.edges) == g.component_count() + 1);
      for (std::size_t i = 0; i < c.edges.size(); ++i) {
        auto fewer = c.edges;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK(g.component_count(fewer) == g.component_count());
      }
      // An edge whose tree contributes only it to the cut splits that tree's two halves.
      auto pieces = g.component_labels(c.edges);
      for (std::size_t t = 0; t < g.profile().size(); ++t) {
        if (c.per_tree[t].size() != 1) continue;
        const auto& tree = g.profile().tree(t);
        const auto& ref = g.edge(c.per_tree[t].front()).sources;
        auto local = std::find_if(ref.begin(), ref.end(), [&](const auto& r) { return r.tree == t; })->local_edge;
        auto [u, v] = tree.edges()[local];
        CHECK(pieces[g.vertex_of(t, u)] != pieces[g.vertex_of(t, v)]);
        for (std::size_t j = 0; j < tree.edges().size(); ++j) {
          if (j == local) continue;
          auto [x, y] = tree.edges()[j];
          CHECK(pieces[g.vertex_of(t, x)] == pieces[g.vertex_of(t, y)]);
        }
      }
      if (is_nice_cut(g, c)) nice.push_back(c);
    }
    ParallelMatrix matrix(g, cuts);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      for (std::size_t j = 0; j < cuts.size(); ++j) {
        CHECK(cuts_parallel(g, cuts[i], cuts[j]) == cuts_parallel(g, cuts[j], cuts[i]));
        CHECK(matrix.parallel(i, j) == cuts_parallel(g, cuts[i], cuts[j]));
      }
    }
    for (const auto& x : nice) {
      for (const auto& y : nice) {
        if (cuts_parallel(g, x, y)) CHECK(splits_compatible(sigma_of_cut(g, x), sigma_of_cut(g, y)));
      }
    }
  }
}

TEST_CASE("vertex limit") {
  DisplayGraph g(seven_taxon_profile());
  CHECK_THROWS_AS(enumerate_minimal_cuts(g, 10), LimitExceeded);
  CHECK_THROWS_AS(enumerate_minimal_cuts(g, 65), std::invalid_argument);
  CHECK_NOTHROW(enumerate_minimal_cuts(g, 14));
}
