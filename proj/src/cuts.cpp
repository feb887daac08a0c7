#include "treecut/cuts.hpp"

#include <algorithm>
#include <bit>

namespace treecut {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

// Bitmask view of the display graph used by the enumerator.
struct MaskGraph {
  std::vector<Mask> adj;

  explicit MaskGraph(const DisplayGraph& g) : adj(g.vertex_count(), 0) {
    for (const auto& e : g.edges()) {
      adj[e.u] |= bit(e.v);
      adj[e.v] |= bit(e.u);
    }
  }

  Mask neighborhood(Mask set) const {
    Mask out = 0;
    for (Mask s = set; s != 0; s &= s - 1) out |= adj[std::countr_zero(s)];
    return out;
  }

  Mask reach(Mask start, Mask within) const {
    Mask seen = start & within;
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = neighborhood(frontier) & within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }
};

// Grows connected vertex sets `in` from the component's least vertex,
// branching on one frontier vertex at a time. `out` holds vertices fixed on the
// other side; they must stay inside a single component of the remainder, which
// guarantees every leaf of the search is a connected bipartition.
class BondEnumerator {
 public:
  BondEnumerator(const MaskGraph& graph, Mask component) : graph_(graph), component_(component) {}

  std::vector<Mask> run() {
    if (std::popcount(component_) < 2) return {};
    grow(component_ & -component_, 0);
    return std::move(found_);
  }

 private:
  bool feasible(Mask in, Mask out) const {
    Mask rest = component_ & ~in;
    if (rest == 0) return false;
    if (out == 0) return true;
    Mask reached = graph_.reach(out & -out, rest);
    return (out & ~reached) == 0;
  }

  void grow(Mask in, Mask out) {
    Mask frontier = graph_.neighborhood(in) & component_ & ~in & ~out;
    if (frontier == 0) {
      found_.push_back(in);
      return;
    }
    Mask w = frontier & -frontier;
    if (feasible(in | w, out)) grow(in | w, out);
    if (feasible(in, out | w)) grow(in, out | w);
  }

  const MaskGraph& graph_;
  Mask component_;
  std::vector<Mask> found_;
};

Cut cut_from_side(const DisplayGraph& g, Mask side_a, Mask component) {
  Cut cut;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    bool a = (side_a >> edge.u) & 1U;
    bool b = (side_a >> edge.v) & 1U;
    if (a != b) cut.edges.push_back(e);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if ((side_a >> v) & 1U) {
      cut.side_a.push_back(v);
    } else if ((component >> v) & 1U) {
      cut.side_b.push_back(v);
    }
  }
  cut.per_tree.resize(g.profile().size());
  for (auto e : cut.edges) {
    for (const auto& ref : g.edge(e).sources) cut.per_tree[ref.tree].push_back(e);
  }
  return cut;
}

void check_limit(const DisplayGraph& g, std::size_t vertex_limit) {
  if (vertex_limit > kMaxVertexLimit) {
    throw std::invalid_argument("vertex limit above " + std::to_string(kMaxVertexLimit));
  }
  if (g.vertex_count() > vertex_limit) throw LimitExceeded(g.vertex_count(), vertex_limit);
}

std::vector<Cut> enumerate_in(const DisplayGraph& g, const std::vector<Mask>& components) {
  MaskGraph graph(g);
  std::vector<Cut> out;
  for (auto component : components) {
    for (auto side : BondEnumerator(graph, component).run()) out.push_back(cut_from_side(g, side, component));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

EdgeSet make_edge_set(std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::optional<Cut> make_minimal_cut(const DisplayGraph& g, std::vector<EdgeId> edges) {
  auto set = make_edge_set(std::move(edges));
  if (set.empty()) return std::nullopt;
  for (auto e : set) {
    if (e >= g.edge_count()) return std::nullopt;
  }
  const auto before = g.component_labels();
  const auto comp = before[g.edge(set.front()).u];
  for (auto e : set) {
    if (before[g.edge(e).u] != comp) return std::nullopt;
  }
  const auto after = g.component_labels(set);
  const auto count_before = *std::max_element(before.begin(), before.end()) + 1;
  const auto count_after = *std::max_element(after.begin(), after.end()) + 1;
  if (count_after != count_before + 1) return std::nullopt;
  for (auto e : set) {
    if (after[g.edge(e).u] == after[g.edge(e).v]) return std::nullopt;
  }

  VertexId least = g.vertex_count();
  for (VertexId v = 0; v < g.vertex_count() && least == g.vertex_count(); ++v) {
    if (before[v] == comp) least = v;
  }
  Cut cut;
  cut.edges = std::move(set);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (before[v] != comp) continue;
    (after[v] == after[least] ? cut.side_a : cut.side_b).push_back(v);
  }
  cut.per_tree.resize(g.profile().size());
  for (auto e : cut.edges) {
    for (const auto& ref : g.edge(e).sources) cut.per_tree[ref.tree].push_back(e);
  }
  return cut;
}

bool is_minimal_cut(const DisplayGraph& g, std::span<const EdgeId> edges) {
  return make_minimal_cut(g, std::vector<EdgeId>(edges.begin(), edges.end())).has_value();
}

std::vector<Cut> enumerate_minimal_cuts(const DisplayGraph& g, std::size_t vertex_limit) {
  check_limit(g, vertex_limit);
  if (!g.connected()) throw std::invalid_argument("display graph is disconnected");
  Mask all = g.vertex_count() == 64 ? ~Mask{0} : bit(g.vertex_count()) - 1;
  return enumerate_in(g, {all});
}

std::vector<Cut> enumerate_component_cuts(const DisplayGraph& g, std::size_t vertex_limit) {
  check_limit(g, vertex_limit);
  const auto comp = g.component_labels();
  std::vector<Mask> components;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (comp[v] >= components.size()) components.resize(comp[v] + 1, 0);
    components[comp[v]] |= bit(v);
  }
  return enumerate_in(g, components);
}

bool is_legal_cut(const DisplayGraph& g, std::span<const EdgeId> edges) {
  for (std::size_t t = 0; t < g.profile().size(); ++t) {
    std::vector<VertexId> common;
    bool first = true;
    for (auto e : edges) {
      if (!g.edge_in_tree(e, t)) continue;
      std::vector<VertexId> ends{g.edge(e).u, g.edge(e).v};
      if (first) {
        common = ends;
        first = false;
      } else {
        std::erase_if(common, [&](VertexId v) { return v != ends[0] && v != ends[1]; });
      }
      if (common.empty()) return false;
    }
  }
  return true;
}

bool is_nice_cut(const DisplayGraph& g, const Cut& cut) {
  // Each side induces a connected subgraph, so it has an edge iff it has two vertices.
  return is_legal_cut(g, cut.edges) && cut.side_a.size() >= 2 && cut.side_b.size() >= 2;
}

bool cuts_parallel(const DisplayGraph& g, const Cut& c1, const Cut& c2) {
  const auto pieces = g.component_labels(c1.edges);
  std::optional<std::size_t> seen;
  for (auto e : c2.edges) {
    if (std::binary_search(c1.edges.begin(), c1.edges.end(), e)) continue;
    auto piece = pieces[g.edge(e).u];
    if (seen && *seen != piece) return false;
    seen = piece;
  }
  return true;
}

Split sigma_of_cut(const DisplayGraph& g, const Cut& cut) {
  if (!is_nice_cut(g, cut)) throw std::invalid_argument("sigma is only defined for nice minimal cuts");
  LabelSet a;
  LabelSet b;
  for (auto v : cut.side_a) {
    if (g.vertex(v).leaf) a.insert(g.vertex(v).label);
  }
  for (auto v : cut.side_b) {
    if (g.vertex(v).leaf) b.insert(g.vertex(v).label);
  }
  if (a.empty() || b.empty()) throw std::logic_error("nice cut with a leafless side");
  LabelSet rest;
  for (const auto& l : g.profile().labels()) {
    if (!a.contains(l) && !b.contains(l)) rest.insert(l);
  }
  if (!rest.empty()) {
    auto& anchor = *a.begin() < *b.begin() ? a : b;
    anchor.insert(rest.begin(), rest.end());
  }
  return Split(std::move(a), std::move(b));
}

SplitSet splits_of_cutset(const DisplayGraph& g, std::span<const Cut> cuts) {
  SplitSet out;
  for (const auto& cut : cuts) {
    auto s = sigma_of_cut(g, cut);
    if (!s.trivial()) out.insert(std::move(s));
  }
  return out;
}

ParallelMatrix::ParallelMatrix(const DisplayGraph& g, std::span<const Cut> cuts)
    : n_(cuts.size()), rows_(cuts.size(), std::vector<std::uint64_t>((cuts.size() + 63) / 64, 0)) {
  std::vector<std::vector<std::size_t>> pieces;
  pieces.reserve(n_);
  for (const auto& c : cuts) pieces.push_back(g.component_labels(c.edges));
  auto one_way = [&](std::size_t i, std::size_t j) {
    std::optional<std::size_t> seen;
    for (auto e : cuts[j].edges) {
      if (std::binary_search(cuts[i].edges.begin(), cuts[i].edges.end(), e)) continue;
      auto piece = pieces[i][g.edge(e).u];
      if (seen && *seen != piece) return false;
      seen = piece;
    }
    return true;
  };
  for (std::size_t i = 0; i < n_; ++i) {
    rows_[i][i / 64] |= std::uint64_t{1} << (i % 64);
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (one_way(i, j)) {
        rows_[i][j / 64] |= std::uint64_t{1} << (j % 64);
        rows_[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
}

std::vector<std::string> edge_names(const DisplayGraph& g, std::span<const EdgeId> edges) {
  std::vector<std::string> out;
  for (auto e : edges) out.push_back(g.edge_name(e));
  return out;
}

}  // namespace treecut
