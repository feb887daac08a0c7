#ifndef TREECUT_ELIG_HPP_
#define TREECUT_ELIG_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treecut/display_graph.hpp"

namespace treecut {

/// Edge label intersection graph: the line graph of the display graph. Vertex
/// i stands for display-graph edge i, so ids are shared with EdgeId.
class Elig {
 public:
  using Endpoints = std::pair<std::size_t, std::size_t>;

  explicit Elig(const DisplayGraph& g);

  /// Line graph of an arbitrary simple graph given by vertex names and edges.
  static Elig line_graph(std::vector<std::string> vertex_names, std::vector<Endpoints> edges);

  std::size_t vertex_count() const { return endpoints_.size(); }
  std::size_t edge_count() const;
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_.at(i); }
  bool adjacent(std::size_t i, std::size_t j) const;
  /// Underlying edge of vertex i.
  const Endpoints& endpoints(std::size_t i) const { return endpoints_.at(i); }
  /// "uv": the two endpoint names concatenated, smaller id first.
  std::string name(std::size_t i) const;
  std::size_t find(const std::string& name) const;

  /// Component index per vertex of Elig - removed.
  std::vector<std::size_t> component_labels(std::span<const std::size_t> removed) const;

 private:
  Elig(std::vector<std::string> base_names, std::vector<Endpoints> endpoints);

  std::vector<std::string> base_names_;
  std::vector<Endpoints> endpoints_;
  std::vector<std::vector<std::size_t>> adj_;
};

/// f is non-empty and at least two components of Elig - f are full, i.e.
/// touch every vertex of f.
bool is_minimal_separator(const Elig& elig, std::span<const std::size_t> f);

/// For every tree T, f's vertices coming from T are pairwise adjacent, i.e.
/// form a clique of LG(T).
bool is_legal_separator(const Elig& elig, const DisplayGraph& g, std::span<const std::size_t> f);

/// Elig - f1 has at most one component meeting f2.
bool separators_parallel(const Elig& elig, std::span<const std::size_t> f1, std::span<const std::size_t> f2);

/// Every legal minimal separator of LG(P), sorted. Candidates are unions of one
/// clique of LG(T) per tree, so the search is confined to legal sets from the
/// start; each candidate is then checked against the full-component test.
std::vector<std::vector<std::size_t>> enumerate_legal_minimal_separators(const Elig& elig, const DisplayGraph& g);

/// Graphviz rendering with "uv" vertex names, vertices coloured by source
/// tree and cross-tree adjacencies in black.
std::string to_dot(const Elig& elig, const DisplayGraph& g);

}  // namespace treecut

#endif  // TREECUT_ELIG_HPP_
