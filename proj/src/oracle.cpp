#include "treecut/oracle.hpp"

#include <map>
#include <stdexcept>

namespace treecut {

namespace {

// Binary trees on the first k labels as lists of edges between vertex ids.
struct Raw {
  std::vector<Label> labels;
  std::vector<PhyloTree::Edge> edges;
};

void insert_leaves(const std::vector<Label>& order, std::size_t next, Raw& raw, std::vector<PhyloTree>& out) {
  if (next == order.size()) {
    out.push_back(PhyloTree::normalized(raw.labels, raw.edges));
    return;
  }
  const auto edge_count = raw.edges.size();
  for (std::size_t i = 0; i < edge_count; ++i) {
    const auto [a, b] = raw.edges[i];
    const auto mid = raw.labels.size();
    const auto leaf = mid + 1;
    raw.labels.push_back("");
    raw.labels.push_back(order[next]);
    raw.edges[i] = {a, mid};
    raw.edges.emplace_back(mid, b);
    raw.edges.emplace_back(mid, leaf);
    insert_leaves(order, next + 1, raw, out);
    raw.edges.resize(edge_count);
    raw.edges[i] = {a, b};
    raw.labels.resize(mid);
  }
}

template <typename Fits>
std::optional<PhyloTree> first_fitting(const Profile& profile, std::size_t max_labels, Fits fits) {
  for (const auto& candidate : enumerate_trees(profile.labels(), max_labels).trees) {
    bool ok = true;
    for (const auto& t : profile.trees()) {
      if (!fits(candidate, t)) {
        ok = false;
        break;
      }
    }
    if (ok) return candidate;
  }
  return std::nullopt;
}

}  // namespace

TreeCatalog enumerate_trees(const LabelSet& labels, std::size_t max_labels) {
  if (labels.empty()) throw std::invalid_argument("cannot enumerate trees on no labels");
  if (labels.size() > max_labels) {
    throw std::invalid_argument("oracle is limited to " + std::to_string(max_labels) + " labels");
  }
  const std::vector<Label> order(labels.begin(), labels.end());
  std::vector<PhyloTree> binary;
  if (order.size() <= 3) {
    Raw raw;
    for (const auto& l : order) raw.labels.push_back(l);
    if (order.size() == 2) raw.edges.emplace_back(0, 1);
    if (order.size() == 3) {
      raw.labels.push_back("");
      for (PhyloTree::VertexId v = 0; v < 3; ++v) raw.edges.emplace_back(v, 3);
    }
    binary.push_back(PhyloTree::normalized(raw.labels, raw.edges));
  } else {
    Raw raw{{order[0], order[1], order[2], ""}, {{0, 3}, {1, 3}, {2, 3}}};
    insert_leaves(order, 3, raw, binary);
  }

  std::map<SplitSet, PhyloTree> seen;
  std::vector<PhyloTree> frontier;
  for (auto& t : binary) {
    if (seen.emplace(splits_of(t), t).second) frontier.push_back(std::move(t));
  }
  while (!frontier.empty()) {
    std::vector<PhyloTree> next;
    for (const auto& t : frontier) {
      for (std::size_t e = 0; e < t.edges().size(); ++e) {
        if (!t.is_internal_edge(e)) continue;
        auto c = contract_edge(t, e);
        if (seen.emplace(splits_of(c), c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }

  TreeCatalog catalog{labels, {}};
  for (auto& [splits, tree] : seen) catalog.trees.push_back(std::move(tree));
  return catalog;
}

std::optional<PhyloTree> oracle_compatible(const Profile& profile, std::size_t max_labels) {
  return first_fitting(profile, max_labels, [](const PhyloTree& s, const PhyloTree& t) { return displays(s, t); });
}

std::optional<PhyloTree> oracle_agreement(const Profile& profile, std::size_t max_labels) {
  return first_fitting(profile, max_labels, [](const PhyloTree& s, const PhyloTree& t) { return agrees(s, t); });
}

}  // namespace treecut
