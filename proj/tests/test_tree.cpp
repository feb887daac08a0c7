#include <catch_amalgamated.hpp>

#include <functional>

#include "support/generators.hpp"
#include "treecut/newick.hpp"
#include "treecut/tree.hpp"

using namespace treecut;
using treecut::testing::first_labels;
using treecut::testing::random_tree;

namespace {

LabelSet ls(const std::string& chars) {
  LabelSet out;
  for (char c : chars) out.insert(std::string(1, c));
  return out;
}

Split sp(const std::string& a, const std::string& b) { return Split(ls(a), ls(b)); }

// Shape string rooted at the least leaf's neighbour; equal strings mean
// isomorphic trees. Built from adjacency only, without splits.
std::string canonical_shape(const PhyloTree& t) {
  if (t.leaf_count() <= 2) return join_labels(t.labels(), ",");
  auto root_leaf = *t.leaf(*t.labels().begin());
  std::function<std::string(PhyloTree::VertexId, PhyloTree::VertexId)> rec = [&](auto v, auto parent) {
    if (t.is_leaf(v)) return t.label(v);
    std::vector<std::string> parts;
    for (auto w : t.neighbors(v)) {
      if (w != parent) parts.push_back(rec(w, v));
    }
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p + ",";
    return s + ")";
  };
  return t.label(root_leaf) + rec(t.neighbors(root_leaf).front(), root_leaf);
}

}  // namespace

TEST_CASE("split canonical orientation and compatibility") {
  auto s = sp("cd", "ab");
  CHECK(s.side_a() == ls("ab"));
  CHECK(s.to_string() == "ab|cd");
  CHECK(s == sp("ab", "cd"));
  CHECK_FALSE(s.trivial());
  CHECK(sp("a", "bcd").trivial());
  CHECK_THROWS_AS(Split(ls("ab"), ls("bc")), std::invalid_argument);
  CHECK_THROWS_AS(Split(ls(""), ls("bc")), std::invalid_argument);

  CHECK(splits_compatible(sp("ab", "cdef"), sp("abc", "def")));
  CHECK_FALSE(splits_compatible(sp("ab", "cd"), sp("ac", "bd")));
  CHECK(splits_compatible(sp("ab", "cd"), sp("ab", "cd")));
}

TEST_CASE("split restriction") {
  auto s = sp("abc", "defg");
  CHECK(s.restricted_to(ls("abde")) == sp("ab", "de"));
  CHECK_FALSE(s.restricted_to(ls("abc")).has_value());
}

TEST_CASE("newick parsing handles lengths, comments, quotes and names") {
  auto t = parse_newick("((a:1.5,b:2)x:0.1,'c d'[note],(e,f)99);");
  CHECK(t.leaf_count() == 5);
  CHECK(t.labels().contains("c d"));
  CHECK(splits_of(t) == SplitSet{Split(ls("ab"), LabelSet{"c d", "e", "f"}), Split(LabelSet{"a", "b", "c d"}, ls("ef"))});
  CHECK(to_newick(parse_newick("('it''s',b,c);")).find("'it''s'") != std::string::npos);
}

TEST_CASE("newick errors") {
  CHECK_THROWS_AS(parse_newick(""), NewickError);
  CHECK_THROWS_AS(parse_newick("(a,b,c)"), NewickError);
  CHECK_THROWS_AS(parse_newick("(a,a,c);"), NewickError);
  CHECK_THROWS_AS(parse_newick("(a,,c);"), NewickError);
  CHECK_THROWS_AS(parse_newick("(a,b,c); x"), NewickError);
  CHECK_THROWS_AS(parse_newick("(a,b,c:zz);"), NewickError);
  CHECK_THROWS_AS(parse_newick("(a,b,c$);"), NewickError);
}

TEST_CASE("rooted binary input is unrooted") {
  auto rooted = parse_newick("((a,b),(c,d));");
  auto unrooted = parse_newick("(a,b,(c,d));");
  CHECK(trees_isomorphic(rooted, unrooted));
  CHECK(splits_of(rooted).size() == 1);
}

TEST_CASE("small trees") {
  CHECK(parse_newick("a;").leaf_count() == 1);
  CHECK(to_newick(parse_newick("(b,a);")) == "(a,b);");
  CHECK(to_newick(parse_newick("(c,b,a);")) == "(a,b,c);");
  CHECK(splits_of(parse_newick("(a,b,c);")).empty());
}

TEST_CASE("tree_from_splits") {
  auto t = tree_from_splits({sp("ab", "cdef"), sp("abc", "def")}, ls("abcdef"));
  CHECK_FALSE(canonical_shape(t) == canonical_shape(parse_newick("(a,b,(c,(d,(e,f))));")));
  CHECK(canonical_shape(t) == canonical_shape(parse_newick("((a,b),c,(d,e,f));")));
  CHECK(tree_from_splits({}, ls("abcd")).internal_vertices().size() == 1);
  CHECK_THROWS_AS(tree_from_splits({sp("ab", "cd"), sp("ac", "bd")}, ls("abcd")), IncompatibleSplits);
  CHECK_THROWS_AS(tree_from_splits({sp("ab", "cd")}, ls("abcde")), std::invalid_argument);
}

TEST_CASE("restriction, display and agreement") {
  auto s = parse_newick("((a,b),c,(d,(e,f)));");
  CHECK(trees_isomorphic(restrict_tree(s, ls("abde")), parse_newick("(a,b,(d,e));")));
  CHECK(trees_isomorphic(restrict_tree(s, ls("acf")), parse_newick("(a,c,f);")));
  CHECK(displays(s, parse_newick("(a,b,(d,e));")));
  CHECK(agrees(s, parse_newick("(a,b,(d,e));")));
  CHECK(displays(s, parse_newick("(a,b,c,d);")));
  CHECK_FALSE(agrees(s, parse_newick("(a,b,c,d);")));
  CHECK_FALSE(displays(s, parse_newick("(a,d,(b,e));")));
  CHECK_THROWS_AS(displays(s, parse_newick("(a,b,(x,y));")), std::invalid_argument);
}

TEST_CASE("contract_edge removes exactly one split") {
  auto t = parse_newick("((a,b),c,(d,(e,f)));");
  for (std::size_t e = 0; e < t.edges().size(); ++e) {
    if (!t.is_internal_edge(e)) {
      CHECK_THROWS(contract_edge(t, e));
      continue;
    }
    auto c = contract_edge(t, e);
    CHECK(splits_of(c).size() + 1 == splits_of(t).size());
    auto [x, y] = edge_bipartition(t, e);
    CHECK_FALSE(splits_of(c).contains(Split(x, y)));
  }
}

TEST_CASE("malformed trees are rejected") {
  CHECK_THROWS_AS(PhyloTree({"a", "b", ""}, {{0, 2}, {1, 2}}), std::invalid_argument);  // degree-2 internal
  CHECK_THROWS_AS(PhyloTree({"a", "b", "c"}, {{0, 1}, {1, 2}}), std::invalid_argument);   // labelled inner vertex
  CHECK_THROWS_AS(PhyloTree({"a", "b"}, {}), std::invalid_argument);                     // forest
  CHECK_THROWS_AS(Profile({}), std::invalid_argument);
}

TEST_CASE("split set round trip and isomorphism agree with an adjacency-only canonical form") {
  std::mt19937_64 rng(0x5eed01);
  for (int i = 0; i < 300; ++i) {
    auto labels = first_labels(treecut::testing::uniform(rng, 1, 12));
    auto t = random_tree(labels, rng, 0.3);
    auto rebuilt = tree_from_splits(splits_of(t), labels);
    CHECK(canonical_shape(rebuilt) == canonical_shape(t));
    auto reparsed = parse_newick(to_newick(t));
    CHECK(splits_of(reparsed) == splits_of(t));
    auto other = random_tree(labels, rng, 0.3);
    CHECK(trees_isomorphic(t, other) == (canonical_shape(t) == canonical_shape(other)));
  }
}

TEST_CASE("display is restriction followed by contraction") {
  std::mt19937_64 rng(0x5eed02);
  for (int i = 0; i < 200; ++i) {
    auto labels = first_labels(treecut::testing::uniform(rng, 4, 8));
    auto s = random_tree(labels, rng, 0.2);
    auto sub = treecut::testing::random_subset(labels, 3, rng);
    auto r = restrict_tree(s, sub);
    CHECK(agrees(s, r));
    // Every restricted split must appear in the restriction.
    for (const auto& split : splits_of(s)) {
      auto rs = split.restricted_to(sub);
      if (rs && !rs->trivial()) CHECK(splits_of(r).contains(*rs));
    }
    for (std::size_t e = 0; e < r.edges().size(); ++e) {
      if (r.is_internal_edge(e)) {
        auto c = contract_edge(r, e);
        CHECK(displays(s, c));
        CHECK_FALSE(agrees(s, c));
      }
    }
    auto unrelated = random_tree(sub, rng, 0.0);
    auto outer = splits_of(r);
    auto inner = splits_of(unrelated);
    CHECK(displays(s, unrelated) == std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
  }
}
