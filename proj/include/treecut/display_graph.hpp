#ifndef TREECUT_DISPLAY_GRAPH_HPP_
#define TREECUT_DISPLAY_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treecut/tree.hpp"

namespace treecut {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Union of the trees of a profile with equally-labelled leaves identified.
///
/// Vertex ids: internal vertices first, numbered tree by tree in each tree's
/// vertex order (their display name is that 1-based running number), followed
/// by the leaves in label order (named by their label). Edges are sorted by
/// endpoint ids, smaller endpoint first.
class DisplayGraph {
 public:
  struct Vertex {
    bool leaf = false;
    std::string name;
    Label label;                   // leaves only
    std::size_t tree = 0;          // internals only
    PhyloTree::VertexId local = 0;  // internals only
  };

  struct TreeEdgeRef {
    std::size_t tree;
    std::size_t local_edge;
  };

  struct Edge {
    VertexId u;
    VertexId v;
    /// Source trees. Only two identical two-leaf trees can share an edge.
    std::vector<TreeEdgeRef> sources;
  };

  explicit DisplayGraph(Profile profile);

  const Profile& profile() const { return profile_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Inc(u): ids of all edges incident on `u`. Throws std::out_of_range.
  const std::vector<EdgeId>& incident_edges(VertexId u) const { return incidence_.at(u); }
  std::vector<VertexId> neighbors(VertexId u) const;

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<VertexId> leaf_vertex(const Label& label) const;
  /// Looks up an edge by endpoint names, in either order, e.g. ("1", "2").
  std::optional<EdgeId> find_edge(const std::string& u, const std::string& v) const;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  /// "u-v" with the smaller vertex id first.
  std::string edge_name(EdgeId e) const;

  VertexId vertex_of(std::size_t tree, PhyloTree::VertexId local) const;
  EdgeId edge_of(std::size_t tree, std::size_t local_edge) const;
  /// Display-graph ids of the edges of tree `tree`, in the tree's edge order.
  const std::vector<EdgeId>& tree_edges(std::size_t tree) const { return tree_edges_.at(tree); }
  bool edge_in_tree(EdgeId e, std::size_t tree) const;
  bool is_internal_edge(EdgeId e) const;

  /// Component index per vertex; components numbered by least vertex id.
  std::vector<std::size_t> component_labels(std::span<const EdgeId> removed = {}) const;
  std::size_t component_count(std::span<const EdgeId> removed = {}) const;
  bool connected() const { return component_count() == 1; }

 private:
  Profile profile_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::size_t internal_count_ = 0;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::vector<VertexId>> local_to_global_;
  std::vector<std::vector<EdgeId>> tree_edges_;
};

struct SubProfile {
  Profile profile;
  std::vector<std::size_t> tree_indices;  // positions in the original profile
};

/// One sub-profile per connected component of G(P), ordered by the first tree
/// each contains. A one-leaf tree whose label no other tree carries forms its
/// own component.
std::vector<SubProfile> connected_components(const DisplayGraph& g);

/// Graphviz rendering: leaves as boxes, internals as circles, edges coloured
/// by source tree. Output is sorted and byte-stable.
std::string to_dot(const DisplayGraph& g);

/// Colour used for tree `index` in DOT output.
std::string tree_color(std::size_t index);
std::string dot_escape(const std::string& text);

}  // namespace treecut

#endif  // TREECUT_DISPLAY_GRAPH_HPP_
