#ifndef TREECUT_CUTS_HPP_
#define TREECUT_CUTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "treecut/display_graph.hpp"
#include "treecut/tree.hpp"

namespace treecut {

/// Sorted, duplicate-free list of display-graph edge ids.
using EdgeSet = std::vector<EdgeId>;

EdgeSet make_edge_set(std::vector<EdgeId> edges);

inline constexpr std::size_t kDefaultVertexLimit = 26;
inline constexpr std::size_t kMaxVertexLimit = 64;

class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(std::size_t vertices, std::size_t limit)
      : std::runtime_error("display graph has " + std::to_string(vertices) + " vertices, limit is " +
                           std::to_string(limit)),
        vertices_(vertices),
        limit_(limit) {}
  std::size_t vertices() const { return vertices_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t vertices_;
  std::size_t limit_;
};

/// A minimal cut of the display graph.
///
/// When G(P) is disconnected a minimal cut lives inside one component C: it
/// is a minimal cut of C, and side_a/side_b partition V(C) only. For a
/// connected graph this is the usual notion. side_a holds the least vertex of
/// C. Equality and ordering look at the edge set only.
struct Cut {
  EdgeSet edges;
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
  /// Edges of each input tree that lie in the cut, indexed by tree.
  std::vector<EdgeSet> per_tree;

  friend bool operator==(const Cut& x, const Cut& y) { return x.edges == y.edges; }
  friend auto operator<=>(const Cut& x, const Cut& y) { return x.edges <=> y.edges; }
};

/// Definitional check: the edges lie in one component, their removal splits
/// it into exactly two pieces and every edge joins the two pieces.
std::optional<Cut> make_minimal_cut(const DisplayGraph& g, std::vector<EdgeId> edges);
bool is_minimal_cut(const DisplayGraph& g, std::span<const EdgeId> edges);

/// All minimal cuts of a connected display graph, sorted by edge set.
/// Throws std::invalid_argument if g is disconnected and LimitExceeded if it
/// has more than `vertex_limit` vertices.
std::vector<Cut> enumerate_minimal_cuts(const DisplayGraph& g, std::size_t vertex_limit = kDefaultVertexLimit);

/// As above, run on every component of a possibly disconnected graph.
std::vector<Cut> enumerate_component_cuts(const DisplayGraph& g, std::size_t vertex_limit = kDefaultVertexLimit);

/// For every tree, the tree's edges in `edges` share a common endpoint.
bool is_legal_cut(const DisplayGraph& g, std::span<const EdgeId> edges);
bool is_nice_cut(const DisplayGraph& g, const Cut& cut);

/// G - c1 has at most one component containing an edge of c2.
bool cuts_parallel(const DisplayGraph& g, const Cut& c1, const Cut& c2);

/// Leaf labels of the two sides. If G(P) is disconnected the labels outside
/// the cut's component join the side holding that component's least label.
/// Throws std::invalid_argument unless the cut is nice.
Split sigma_of_cut(const DisplayGraph& g, const Cut& cut);

/// Non-trivial splits among sigma_of_cut over `cuts`.
SplitSet splits_of_cutset(const DisplayGraph& g, std::span<const Cut> cuts);

/// Symmetric pairwise-parallelism table over a cut family, with each row
/// also available as a bitset for fast intersection.
class ParallelMatrix {
 public:
  ParallelMatrix(const DisplayGraph& g, std::span<const Cut> cuts);

  std::size_t size() const { return n_; }
  bool parallel(std::size_t i, std::size_t j) const { return (rows_[i][j / 64] >> (j % 64)) & 1U; }
  const std::vector<std::uint64_t>& row(std::size_t i) const { return rows_[i]; }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

std::vector<std::string> edge_names(const DisplayGraph& g, std::span<const EdgeId> edges);

}  // namespace treecut

#endif  // TREECUT_CUTS_HPP_
