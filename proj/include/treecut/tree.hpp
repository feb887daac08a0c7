#ifndef TREECUT_TREE_HPP_
#define TREECUT_TREE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treecut {

using Label = std::string;
using LabelSet = std::set<Label>;

std::string join_labels(const LabelSet& labels, const std::string& sep = "");

/// Bipartition of a label set into two non-empty blocks.
///
/// Stored canonically: side_a holds the lexicographically least label, so two
/// splits of the same bipartition compare equal regardless of how they were
/// built.
class Split {
 public:
  Split(LabelSet a, LabelSet b);

  const LabelSet& side_a() const { return a_; }
  const LabelSet& side_b() const { return b_; }
  LabelSet labels() const;
  std::size_t size() const { return a_.size() + b_.size(); }
  bool trivial() const { return a_.size() == 1 || b_.size() == 1; }

  /// The side containing `label`; nullptr if the label is not covered.
  const LabelSet* side_of(const Label& label) const;

  /// Both sides intersected with `y`; nullopt when a side becomes empty.
  std::optional<Split> restricted_to(const LabelSet& y) const;

  /// "ab|cd" for single-character labels, "a,b|c,d" otherwise.
  std::string to_string() const;

  friend bool operator==(const Split&, const Split&) = default;
  friend auto operator<=>(const Split&, const Split&) = default;

 private:
  LabelSet a_;
  LabelSet b_;
};

using SplitSet = std::set<Split>;

bool splits_compatible(const Split& s1, const Split& s2);

/// Unrooted leaf-labelled tree. Vertices are 0..vertex_count()-1; a vertex is
/// a leaf iff it carries a label. Internal vertices have degree >= 3 except in
/// the degenerate one- and two-leaf trees.
class PhyloTree {
 public:
  using VertexId = std::size_t;
  using Edge = std::pair<VertexId, VertexId>;

  /// Validates and takes ownership. `labels[v]` is empty for internal
  /// vertices. Throws std::invalid_argument on any structural violation.
  PhyloTree(std::vector<Label> labels, std::vector<Edge> edges);

  /// Builds from a raw tree that may still contain unlabelled vertices of
  /// degree <= 2: those are pruned or suppressed, then vertices are
  /// renumbered keeping their relative order.
  static PhyloTree normalized(std::vector<Label> labels, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t leaf_count() const { return leaf_index_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
  bool is_leaf(VertexId v) const { return !labels_.at(v).empty(); }
  const Label& label(VertexId v) const { return labels_.at(v); }
  const std::vector<Label>& vertex_labels() const { return labels_; }
  std::optional<VertexId> leaf(const Label& label) const;
  LabelSet labels() const;
  std::vector<VertexId> internal_vertices() const;
  bool is_internal_edge(std::size_t edge_index) const;

  /// Labels on the `from` side of edge {from, to}; the edge must exist.
  LabelSet labels_beyond(VertexId to, VertexId from) const;

 private:
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::pair<Label, VertexId>> leaf_index_;  // sorted by label
};

/// Ordered, non-empty collection of trees. Internal vertices are private to
/// their tree by construction; leaves are shared through their labels.
class Profile {
 public:
  explicit Profile(std::vector<PhyloTree> trees);

  std::size_t size() const { return trees_.size(); }
  const PhyloTree& tree(std::size_t i) const { return trees_.at(i); }
  const std::vector<PhyloTree>& trees() const { return trees_; }
  const LabelSet& labels() const { return labels_; }

 private:
  std::vector<PhyloTree> trees_;
  LabelSet labels_;
};

/// Labels of the two sides of tree edge `edge_index`; first is the side of
/// edges()[edge_index].first.
std::pair<LabelSet, LabelSet> edge_bipartition(const PhyloTree& tree, std::size_t edge_index);

SplitSet splits_of(const PhyloTree& tree);

/// Builds the tree whose split set is the non-trivial part of `splits` by
/// refining the star on `labels` one split at a time.
PhyloTree tree_from_splits(const SplitSet& splits, const LabelSet& labels);

/// Minimal subtree spanning `labels` with degree-two vertices suppressed.
PhyloTree restrict_tree(const PhyloTree& tree, const LabelSet& labels);

/// Tree with internal edge `edge_index` contracted.
PhyloTree contract_edge(const PhyloTree& tree, std::size_t edge_index);

bool displays(const PhyloTree& supertree, const PhyloTree& tree);
bool agrees(const PhyloTree& supertree, const PhyloTree& tree);
bool trees_isomorphic(const PhyloTree& t1, const PhyloTree& t2);

class IncompatibleSplits : public std::invalid_argument {
 public:
  IncompatibleSplits(Split first, Split second);
  const Split& first() const { return first_; }
  const Split& second() const { return second_; }

 private:
  Split first_;
  Split second_;
};

}  // namespace treecut

#endif  // TREECUT_TREE_HPP_
