#include "treecut/display_graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace treecut {

DisplayGraph::DisplayGraph(Profile profile) : profile_(std::move(profile)) {
  const auto k = profile_.size();
  local_to_global_.resize(k);
  tree_edges_.resize(k);

  std::size_t counter = 0;
  for (std::size_t t = 0; t < k; ++t) {
    const auto& tree = profile_.tree(t);
    local_to_global_[t].assign(tree.vertex_count(), 0);
    for (auto v : tree.internal_vertices()) {
      local_to_global_[t][v] = vertices_.size();
      vertices_.push_back(Vertex{false, std::to_string(++counter), {}, t, v});
    }
  }
  internal_count_ = vertices_.size();
  std::map<Label, VertexId> leaf_ids;
  for (const auto& label : profile_.labels()) {
    leaf_ids.emplace(label, vertices_.size());
    vertices_.push_back(Vertex{true, label, label, 0, 0});
  }
  for (std::size_t t = 0; t < k; ++t) {
    const auto& tree = profile_.tree(t);
    for (PhyloTree::VertexId v = 0; v < tree.vertex_count(); ++v) {
      if (tree.is_leaf(v)) local_to_global_[t][v] = leaf_ids.at(tree.label(v));
    }
  }

  std::map<std::pair<VertexId, VertexId>, std::vector<TreeEdgeRef>> pairs;
  for (std::size_t t = 0; t < k; ++t) {
    const auto& tree = profile_.tree(t);
    for (std::size_t i = 0; i < tree.edges().size(); ++i) {
      auto a = local_to_global_[t][tree.edges()[i].first];
      auto b = local_to_global_[t][tree.edges()[i].second];
      pairs[{std::min(a, b), std::max(a, b)}].push_back({t, i});
    }
  }
  for (auto& [uv, refs] : pairs) edges_.push_back(Edge{uv.first, uv.second, std::move(refs)});

  incidence_.resize(vertices_.size());
  for (std::size_t t = 0; t < k; ++t) tree_edges_[t].assign(profile_.tree(t).edges().size(), 0);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    incidence_[edges_[e].u].push_back(e);
    incidence_[edges_[e].v].push_back(e);
    for (const auto& ref : edges_[e].sources) tree_edges_[ref.tree][ref.local_edge] = e;
  }
}

std::vector<VertexId> DisplayGraph::neighbors(VertexId u) const {
  std::vector<VertexId> out;
  for (auto e : incident_edges(u)) out.push_back(edges_[e].u == u ? edges_[e].v : edges_[e].u);
  return out;
}

std::optional<VertexId> DisplayGraph::find_vertex(const std::string& name) const {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].name == name) return v;
  }
  return std::nullopt;
}

std::optional<VertexId> DisplayGraph::leaf_vertex(const Label& label) const {
  auto first = vertices_.begin() + static_cast<std::ptrdiff_t>(internal_count_);
  auto it = std::lower_bound(first, vertices_.end(), label,
                             [](const Vertex& v, const Label& l) { return v.label < l; });
  if (it == vertices_.end() || it->label != label) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<EdgeId> DisplayGraph::find_edge(VertexId u, VertexId v) const {
  if (u >= vertices_.size() || v >= vertices_.size()) return std::nullopt;
  for (auto e : incidence_[u]) {
    if (edges_[e].u == v || edges_[e].v == v) return e;
  }
  return std::nullopt;
}

std::optional<EdgeId> DisplayGraph::find_edge(const std::string& u, const std::string& v) const {
  auto a = find_vertex(u);
  auto b = find_vertex(v);
  if (!a || !b) return std::nullopt;
  return find_edge(*a, *b);
}

std::string DisplayGraph::edge_name(EdgeId e) const {
  const auto& edge = edges_.at(e);
  return vertices_[edge.u].name + "-" + vertices_[edge.v].name;
}

VertexId DisplayGraph::vertex_of(std::size_t tree, PhyloTree::VertexId local) const {
  return local_to_global_.at(tree).at(local);
}

EdgeId DisplayGraph::edge_of(std::size_t tree, std::size_t local_edge) const {
  return tree_edges_.at(tree).at(local_edge);
}

bool DisplayGraph::edge_in_tree(EdgeId e, std::size_t tree) const {
  const auto& sources = edges_.at(e).sources;
  return std::any_of(sources.begin(), sources.end(), [&](const TreeEdgeRef& r) { return r.tree == tree; });
}

bool DisplayGraph::is_internal_edge(EdgeId e) const {
  const auto& edge = edges_.at(e);
  return !vertices_[edge.u].leaf && !vertices_[edge.v].leaf;
}

std::vector<std::size_t> DisplayGraph::component_labels(std::span<const EdgeId> removed) const {
  std::vector<bool> skip(edges_.size(), false);
  for (auto e : removed) skip.at(e) = true;
  const auto none = vertices_.size();
  std::vector<std::size_t> comp(vertices_.size(), none);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < vertices_.size(); ++s) {
    if (comp[s] != none) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto e : incidence_[v]) {
        if (skip[e]) continue;
        auto w = edges_[e].u == v ? edges_[e].v : edges_[e].u;
        if (comp[w] == none) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::size_t DisplayGraph::component_count(std::span<const EdgeId> removed) const {
  auto comp = component_labels(removed);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

std::vector<SubProfile> connected_components(const DisplayGraph& g) {
  const auto comp = g.component_labels();
  const auto& profile = g.profile();
  std::vector<std::size_t> order;  // component ids in order of first tree
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t t = 0; t < profile.size(); ++t) {
    auto c = comp[g.vertex_of(t, 0)];
    if (!members.contains(c)) order.push_back(c);
    members[c].push_back(t);
  }
  std::vector<SubProfile> out;
  for (auto c : order) {
    std::vector<PhyloTree> trees;
    for (auto t : members[c]) trees.push_back(profile.tree(t));
    out.push_back(SubProfile{Profile(std::move(trees)), members[c]});
  }
  return out;
}

std::string tree_color(std::size_t index) {
  static const std::array<const char*, 9> palette{"red",   "blue",    "darkgreen", "orange", "purple",
                                                  "brown", "magenta", "cyan",      "gray40"};
  return palette[index % palette.size()];
}

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string to_dot(const DisplayGraph& g) {
  std::ostringstream out;
  out << "graph display {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& vx = g.vertex(v);
    out << "  v" << v << " [label=\"" << dot_escape(vx.name) << "\", shape=" << (vx.leaf ? "box" : "circle") << "];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    std::string color;
    for (const auto& ref : edge.sources) {
      if (!color.empty()) color += ':';
      color += tree_color(ref.tree);
    }
    out << "  v" << edge.u << " -- v" << edge.v << " [color=\"" << color << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace treecut
