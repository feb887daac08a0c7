#include "treecut/agreement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace treecut {

namespace {

EdgeSet cut_of_edge(const PhyloTree& supertree, std::size_t edge_index, const DisplayGraph& g) {
  const auto [lu, lv] = edge_bipartition(supertree, edge_index);
  std::vector<EdgeId> out;
  for (std::size_t t = 0; t < g.profile().size(); ++t) {
    const auto& tree = g.profile().tree(t);
    LabelSet a;
    LabelSet b;
    for (const auto& l : tree.labels()) (lu.contains(l) ? a : b).insert(l);
    if (a.empty() || b.empty()) continue;
    bool found = false;
    for (std::size_t j = 0; j < tree.edges().size() && !found; ++j) {
      auto [x, y] = edge_bipartition(tree, j);
      if ((x == a && y == b) || (x == b && y == a)) {
        out.push_back(g.edge_of(t, j));
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("supertree does not agree with input tree " + std::to_string(t + 1));
  }
  return make_edge_set(std::move(out));
}

void check_agreement(const PhyloTree& supertree, const Profile& profile) {
  if (supertree.labels() != profile.labels()) throw std::invalid_argument("supertree label set differs from profile");
  for (const auto& t : profile.trees()) {
    if (!agrees(supertree, t)) throw std::invalid_argument("supertree is not an agreement supertree");
  }
}

struct FarSide {
  PhyloTree::VertexId u;
  PhyloTree::VertexId v;
  std::vector<LabelSet> groups;  // ordered by least label
};

FarSide far_side(const PhyloTree& supertree, std::size_t edge_index, PhyloTree::VertexId endpoint,
                 const DisplayGraph& g) {
  const auto [x, y] = supertree.edges().at(edge_index);
  if (endpoint != x && endpoint != y) throw std::invalid_argument("vertex is not an endpoint of the edge");
  FarSide side{endpoint, endpoint == x ? y : x, {}};
  const auto cut = cut_of_edge(supertree, edge_index, g);
  const auto comp = g.component_labels(cut);
  std::map<std::size_t, LabelSet> by_component;
  for (const auto& l : supertree.labels_beyond(side.u, side.v)) by_component[comp[*g.leaf_vertex(l)]].insert(l);
  for (auto& [c, labels] : by_component) side.groups.push_back(std::move(labels));
  std::sort(side.groups.begin(), side.groups.end(),
            [](const LabelSet& p, const LabelSet& q) { return *p.begin() < *q.begin(); });
  return side;
}

}  // namespace

std::vector<EdgeSet> agreement_cut_function(const PhyloTree& supertree, const DisplayGraph& g) {
  check_agreement(supertree, g.profile());
  std::vector<EdgeSet> out;
  for (std::size_t i = 0; i < supertree.edges().size(); ++i) out.push_back(cut_of_edge(supertree, i, g));
  return out;
}

std::vector<EdgeSet> agreement_cut_function(const PhyloTree& supertree, const Profile& profile) {
  return agreement_cut_function(supertree, DisplayGraph(profile));
}

std::size_t far_side_groups(const PhyloTree& supertree, std::size_t edge_index, PhyloTree::VertexId endpoint,
                            const DisplayGraph& g) {
  return far_side(supertree, edge_index, endpoint, g).groups.size();
}

PhyloTree split_edge_at(const PhyloTree& supertree, std::size_t edge_index, PhyloTree::VertexId endpoint,
                        const DisplayGraph& g) {
  check_agreement(supertree, g.profile());
  const auto side = far_side(supertree, edge_index, endpoint, g);
  if (supertree.is_leaf(side.u)) throw std::invalid_argument("cannot split an edge at a leaf");
  if (side.groups.size() < 2) throw std::invalid_argument("labels beyond the edge form a single group");

  const auto n = supertree.vertex_count();
  // Root the far subtree R_v at v.
  std::vector<PhyloTree::VertexId> parent(n, n);
  std::vector<PhyloTree::VertexId> preorder;
  std::vector<bool> far(n, false);
  std::vector<PhyloTree::VertexId> stack{side.v};
  parent[side.v] = side.u;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    far[v] = true;
    preorder.push_back(v);
    for (auto w : supertree.neighbors(v)) {
      if (w != parent[v]) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }

  std::vector<Label> labels;
  std::vector<PhyloTree::Edge> edges;
  std::vector<PhyloTree::VertexId> kept_id(n, n);
  for (PhyloTree::VertexId v = 0; v < n; ++v) {
    if (far[v]) continue;
    kept_id[v] = labels.size();
    labels.push_back(supertree.label(v));
  }
  for (auto [a, b] : supertree.edges()) {
    if (!far[a] && !far[b]) edges.emplace_back(kept_id[a], kept_id[b]);
  }

  for (const auto& group : side.groups) {
    std::vector<std::size_t> count(n, 0);
    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
      auto v = *it;
      if (supertree.is_leaf(v) && group.contains(supertree.label(v))) ++count[v];
      if (v != side.v) count[parent[v]] += count[v];
    }
    auto top = side.v;
    while (true) {
      auto next = n;
      for (auto w : supertree.neighbors(top)) {
        if (w != parent[top] && count[w] == count[top]) next = w;
      }
      if (next == n) break;
      top = next;
    }
    std::vector<PhyloTree::VertexId> copy(n, n);
    for (auto v : preorder) {
      if (count[v] == 0) continue;
      bool below_top = v == top || (copy[parent[v]] != n && v != side.v);
      if (!below_top) continue;
      copy[v] = labels.size();
      labels.push_back(supertree.label(v));
      edges.emplace_back(v == top ? kept_id[side.u] : copy[parent[v]], copy[v]);
    }
  }
  return PhyloTree::normalized(std::move(labels), std::move(edges));
}

PhyloTree minimize_cut_function(PhyloTree supertree, const DisplayGraph& g, std::size_t max_steps) {
  check_agreement(supertree, g.profile());
  for (std::size_t step = 0; step < max_steps; ++step) {
    std::optional<std::size_t> target;
    for (std::size_t i = 0; i < supertree.edges().size() && !target; ++i) {
      if (supertree.is_internal_edge(i) && !is_minimal_cut(g, cut_of_edge(supertree, i, g))) target = i;
    }
    if (!target) return supertree;
    const auto [x, y] = supertree.edges()[*target];
    if (far_side_groups(supertree, *target, x, g) > 1) {
      supertree = split_edge_at(supertree, *target, x, g);
    } else if (far_side_groups(supertree, *target, y, g) > 1) {
      supertree = split_edge_at(supertree, *target, y, g);
    } else {
      throw std::logic_error("non-minimal cut cannot be split at either endpoint");
    }
  }
  throw std::logic_error("cut function did not reach a fixpoint");
}

}  // namespace treecut
