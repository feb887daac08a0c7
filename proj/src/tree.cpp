#include "treecut/tree.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>

namespace treecut {

namespace {

bool intersects(const LabelSet& x, const LabelSet& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

bool subset_of(const LabelSet& x, const LabelSet& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

LabelSet intersection(const LabelSet& x, const LabelSet& y) {
  LabelSet out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
  return out;
}

// Mutable adjacency used while building trees; vertices carry an optional label.
struct RawTree {
  std::vector<Label> labels;
  std::vector<std::vector<std::size_t>> adj;

  std::size_t add(Label label = {}) {
    labels.push_back(std::move(label));
    adj.emplace_back();
    return labels.size() - 1;
  }
  void link(std::size_t u, std::size_t v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  void unlink(std::size_t u, std::size_t v) {
    std::erase(adj[u], v);
    std::erase(adj[v], u);
  }
  LabelSet beyond(std::size_t to, std::size_t from) const {
    LabelSet out;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{to, from}};
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      if (!labels[v].empty()) out.insert(labels[v]);
      for (auto w : adj[v]) {
        if (w != parent) stack.emplace_back(w, v);
      }
    }
    return out;
  }
  std::vector<PhyloTree::Edge> edge_list() const {
    std::vector<PhyloTree::Edge> out;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      for (auto v : adj[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }
};

}  // namespace

std::string join_labels(const LabelSet& labels, const std::string& sep) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += sep;
    out += l;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Split

Split::Split(LabelSet a, LabelSet b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || b_.empty()) throw std::invalid_argument("split side is empty");
  if (intersects(a_, b_)) throw std::invalid_argument("split sides overlap");
  if (*b_.begin() < *a_.begin()) std::swap(a_, b_);
}

LabelSet Split::labels() const {
  LabelSet out = a_;
  out.insert(b_.begin(), b_.end());
  return out;
}

const LabelSet* Split::side_of(const Label& label) const {
  if (a_.contains(label)) return &a_;
  if (b_.contains(label)) return &b_;
  return nullptr;
}

std::optional<Split> Split::restricted_to(const LabelSet& y) const {
  auto a = intersection(a_, y);
  auto b = intersection(b_, y);
  if (a.empty() || b.empty()) return std::nullopt;
  return Split(std::move(a), std::move(b));
}

std::string Split::to_string() const {
  bool single = std::all_of(a_.begin(), a_.end(), [](const Label& l) { return l.size() == 1; }) &&
                std::all_of(b_.begin(), b_.end(), [](const Label& l) { return l.size() == 1; });
  const std::string sep = single ? "" : ",";
  return join_labels(a_, sep) + "|" + join_labels(b_, sep);
}

bool splits_compatible(const Split& s1, const Split& s2) {
  return !intersects(s1.side_a(), s2.side_a()) || !intersects(s1.side_a(), s2.side_b()) ||
         !intersects(s1.side_b(), s2.side_a()) || !intersects(s1.side_b(), s2.side_b());
}

IncompatibleSplits::IncompatibleSplits(Split first, Split second)
    : std::invalid_argument("incompatible splits " + first.to_string() + " and " + second.to_string()),
      first_(std::move(first)),
      second_(std::move(second)) {}

// ---------------------------------------------------------------------------
// PhyloTree

PhyloTree::PhyloTree(std::vector<Label> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), adj_(labels_.size()) {
  const auto n = labels_.size();
  if (n == 0) throw std::invalid_argument("tree has no vertices");
  if (edges.size() + 1 != n) throw std::invalid_argument("tree must have exactly n-1 edges");

  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self loop");
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("tree is not connected");

  for (VertexId v = 0; v < n; ++v) {
    if (is_leaf(v)) {
      leaf_index_.emplace_back(labels_[v], v);
      if (n > 1 && adj_[v].size() != 1) {
        throw std::invalid_argument("labelled vertex '" + labels_[v] + "' is not a leaf");
      }
    } else if (n < 3 || adj_[v].size() < 3) {
      throw std::invalid_argument("unlabelled vertex of degree < 3");
    }
  }
  std::sort(leaf_index_.begin(), leaf_index_.end());
  for (std::size_t i = 1; i < leaf_index_.size(); ++i) {
    if (leaf_index_[i - 1].first == leaf_index_[i].first) {
      throw std::invalid_argument("duplicate leaf label '" + leaf_index_[i].first + "'");
    }
  }
}

PhyloTree PhyloTree::normalized(std::vector<Label> labels, std::vector<Edge> edges) {
  const auto n = labels.size();
  std::vector<std::set<VertexId>> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> alive(n, true);
  std::size_t alive_count = n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (!alive[v] || !labels[v].empty() || alive_count == 1) continue;
      if (adj[v].size() <= 1) {
        for (auto w : adj[v]) adj[w].erase(v);
        adj[v].clear();
        alive[v] = false;
        --alive_count;
        changed = true;
      } else if (adj[v].size() == 2) {
        auto x = *adj[v].begin();
        auto y = *std::next(adj[v].begin());
        adj[x].erase(v);
        adj[y].erase(v);
        adj[x].insert(y);
        adj[y].insert(x);
        adj[v].clear();
        alive[v] = false;
        --alive_count;
        changed = true;
      }
    }
  }

  std::vector<VertexId> renumber(n, 0);
  std::vector<Label> out_labels;
  for (VertexId v = 0; v < n; ++v) {
    if (alive[v]) {
      renumber[v] = out_labels.size();
      out_labels.push_back(labels[v]);
    }
  }
  std::vector<Edge> out_edges;
  for (VertexId v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (auto w : adj[v]) {
      if (v < w) out_edges.emplace_back(renumber[v], renumber[w]);
    }
  }
  return PhyloTree(std::move(out_labels), std::move(out_edges));
}

std::optional<PhyloTree::VertexId> PhyloTree::leaf(const Label& label) const {
  auto it = std::lower_bound(leaf_index_.begin(), leaf_index_.end(), std::make_pair(label, VertexId{0}));
  if (it == leaf_index_.end() || it->first != label) return std::nullopt;
  return it->second;
}

LabelSet PhyloTree::labels() const {
  LabelSet out;
  for (const auto& [label, v] : leaf_index_) out.insert(out.end(), label);
  return out;
}

std::vector<PhyloTree::VertexId> PhyloTree::internal_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (!is_leaf(v)) out.push_back(v);
  }
  return out;
}

bool PhyloTree::is_internal_edge(std::size_t edge_index) const {
  const auto& [u, v] = edges_.at(edge_index);
  return !is_leaf(u) && !is_leaf(v);
}

LabelSet PhyloTree::labels_beyond(VertexId to, VertexId from) const {
  LabelSet out;
  std::vector<std::pair<VertexId, VertexId>> stack{{from, to}};
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    if (is_leaf(v)) out.insert(labels_[v]);
    for (auto w : adj_[v]) {
      if (w != parent) stack.emplace_back(w, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Profile

Profile::Profile(std::vector<PhyloTree> trees) : trees_(std::move(trees)) {
  if (trees_.empty()) throw std::invalid_argument("profile must contain at least one tree");
  for (const auto& t : trees_) {
    auto l = t.labels();
    labels_.insert(l.begin(), l.end());
  }
}

// ---------------------------------------------------------------------------
// Operations

std::pair<LabelSet, LabelSet> edge_bipartition(const PhyloTree& tree, std::size_t edge_index) {
  const auto& [u, v] = tree.edges().at(edge_index);
  return {tree.labels_beyond(v, u), tree.labels_beyond(u, v)};
}

SplitSet splits_of(const PhyloTree& tree) {
  SplitSet out;
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    if (!tree.is_internal_edge(i)) continue;
    auto [a, b] = edge_bipartition(tree, i);
    out.emplace(std::move(a), std::move(b));
  }
  return out;
}

PhyloTree tree_from_splits(const SplitSet& splits, const LabelSet& labels) {
  if (labels.empty()) throw std::invalid_argument("empty label set");
  std::vector<const Split*> nontrivial;
  for (const auto& s : splits) {
    if (s.labels() != labels) {
      throw std::invalid_argument("split " + s.to_string() + " is not over {" + join_labels(labels, ",") + "}");
    }
    if (!s.trivial()) nontrivial.push_back(&s);
  }
  for (std::size_t i = 0; i < nontrivial.size(); ++i) {
    for (std::size_t j = i + 1; j < nontrivial.size(); ++j) {
      if (!splits_compatible(*nontrivial[i], *nontrivial[j])) {
        throw IncompatibleSplits(*nontrivial[i], *nontrivial[j]);
      }
    }
  }

  RawTree raw;
  if (labels.size() == 1) {
    raw.add(*labels.begin());
    return PhyloTree(raw.labels, {});
  }
  if (labels.size() == 2) {
    auto a = raw.add(*labels.begin());
    auto b = raw.add(*labels.rbegin());
    raw.link(a, b);
    return PhyloTree(raw.labels, raw.edge_list());
  }

  auto center = raw.add();
  for (const auto& l : labels) raw.link(center, raw.add(l));

  for (const Split* split : nontrivial) {
    const LabelSet& side = split->side_a();
    bool placed = false;
    for (std::size_t w = 0; w < raw.labels.size() && !placed; ++w) {
      if (!raw.labels[w].empty()) continue;
      std::vector<std::size_t> in_side;
      std::vector<std::size_t> out_side;
      bool clean = true;
      for (auto nb : raw.adj[w]) {
        auto branch = raw.beyond(nb, w);
        if (subset_of(branch, side)) {
          in_side.push_back(nb);
        } else if (!intersects(branch, side)) {
          out_side.push_back(nb);
        } else {
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      placed = true;
      if (in_side.size() < 2 || out_side.size() < 2) continue;  // already an edge
      auto fresh = raw.add();
      for (auto nb : in_side) {
        raw.unlink(w, nb);
        raw.link(fresh, nb);
      }
      raw.link(w, fresh);
    }
    if (!placed) throw std::logic_error("no vertex accepts split " + split->to_string());
  }
  return PhyloTree(raw.labels, raw.edge_list());
}

PhyloTree restrict_tree(const PhyloTree& tree, const LabelSet& labels) {
  if (labels.empty()) throw std::invalid_argument("restriction to an empty label set");
  for (const auto& l : labels) {
    if (!tree.leaf(l)) throw std::invalid_argument("label '" + l + "' is not in the tree");
  }
  const auto n = tree.vertex_count();
  const auto root = *tree.leaf(*labels.begin());

  std::vector<std::size_t> parent(n, n);
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::size_t> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto w : tree.neighbors(v)) {
      if (parent[w] == n) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::size_t> count(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto v = *it;
    if (tree.is_leaf(v) && labels.contains(tree.label(v))) ++count[v];
    if (v != root) count[parent[v]] += count[v];
  }

  std::vector<Label> raw_labels;
  std::vector<PhyloTree::Edge> raw_edges;
  std::vector<std::size_t> renumber(n, n);
  for (PhyloTree::VertexId v = 0; v < n; ++v) {
    if (count[v] == 0) continue;
    renumber[v] = raw_labels.size();
    raw_labels.push_back(tree.label(v));
  }
  for (PhyloTree::VertexId v = 0; v < n; ++v) {
    if (count[v] > 0 && v != root) raw_edges.emplace_back(renumber[parent[v]], renumber[v]);
  }
  return PhyloTree::normalized(std::move(raw_labels), std::move(raw_edges));
}

PhyloTree contract_edge(const PhyloTree& tree, std::size_t edge_index) {
  if (!tree.is_internal_edge(edge_index)) throw std::invalid_argument("only internal edges can be contracted");
  const auto [keep, drop] = tree.edges()[edge_index];
  std::vector<Label> labels = tree.vertex_labels();
  std::vector<PhyloTree::Edge> edges;
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    if (i == edge_index) continue;
    auto [u, v] = tree.edges()[i];
    if (u == drop) u = keep;
    if (v == drop) v = keep;
    edges.emplace_back(u, v);
  }
  // `drop` is left isolated; normalization removes it.
  return PhyloTree::normalized(std::move(labels), std::move(edges));
}

namespace {

void require_label_subset(const PhyloTree& supertree, const PhyloTree& tree) {
  for (const auto& l : tree.labels()) {
    if (!supertree.leaf(l)) throw std::invalid_argument("label '" + l + "' missing from supertree");
  }
}

}  // namespace

bool displays(const PhyloTree& supertree, const PhyloTree& tree) {
  require_label_subset(supertree, tree);
  auto restricted = splits_of(restrict_tree(supertree, tree.labels()));
  auto own = splits_of(tree);
  return std::includes(restricted.begin(), restricted.end(), own.begin(), own.end());
}

bool agrees(const PhyloTree& supertree, const PhyloTree& tree) {
  require_label_subset(supertree, tree);
  return splits_of(restrict_tree(supertree, tree.labels())) == splits_of(tree);
}

bool trees_isomorphic(const PhyloTree& t1, const PhyloTree& t2) {
  return t1.labels() == t2.labels() && splits_of(t1) == splits_of(t2);
}

}  // namespace treecut
