#include "treecut/elig.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace treecut {

namespace {

std::vector<std::string> display_names(const DisplayGraph& g) {
  std::vector<std::string> out;
  for (const auto& v : g.vertices()) out.push_back(v.name);
  return out;
}

std::vector<Elig::Endpoints> display_endpoints(const DisplayGraph& g) {
  std::vector<Elig::Endpoints> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Components of Elig - removed; removed vertices get label `none`.
struct Pieces {
  std::vector<std::size_t> label;
  std::size_t count = 0;
  std::size_t none = 0;
};

Pieces pieces_without(const Elig& elig, std::span<const std::size_t> removed) {
  Pieces p;
  p.label = elig.component_labels(removed);
  p.none = elig.vertex_count();
  for (auto l : p.label) {
    if (l != p.none) p.count = std::max(p.count, l + 1);
  }
  return p;
}

void extend_cliques(const Elig& elig, const std::vector<std::size_t>& pool, std::size_t start,
                    std::vector<std::size_t>& current, std::vector<std::vector<std::size_t>>& out) {
  out.push_back(current);
  for (std::size_t i = start; i < pool.size(); ++i) {
    auto v = pool[i];
    bool ok = std::all_of(current.begin(), current.end(), [&](std::size_t w) { return elig.adjacent(v, w); });
    if (!ok) continue;
    current.push_back(v);
    extend_cliques(elig, pool, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

Elig::Elig(std::vector<std::string> base_names, std::vector<Endpoints> endpoints)
    : base_names_(std::move(base_names)), endpoints_(std::move(endpoints)), adj_(endpoints_.size()) {
  std::vector<std::vector<std::size_t>> incident(base_names_.size());
  for (std::size_t i = 0; i < endpoints_.size(); ++i) {
    auto& [u, v] = endpoints_[i];
    if (u >= base_names_.size() || v >= base_names_.size()) throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    incident[u].push_back(i);
    incident[v].push_back(i);
  }
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        adj_[inc[a]].push_back(inc[b]);
        adj_[inc[b]].push_back(inc[a]);
      }
    }
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

Elig::Elig(const DisplayGraph& g) : Elig(display_names(g), display_endpoints(g)) {}

Elig Elig::line_graph(std::vector<std::string> vertex_names, std::vector<Endpoints> edges) {
  return Elig(std::move(vertex_names), std::move(edges));
}

std::size_t Elig::edge_count() const {
  std::size_t total = 0;
  for (const auto& nbrs : adj_) total += nbrs.size();
  return total / 2;
}

bool Elig::adjacent(std::size_t i, std::size_t j) const {
  const auto& nbrs = adj_.at(i);
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::string Elig::name(std::size_t i) const {
  const auto& [u, v] = endpoints_.at(i);
  return base_names_[u] + base_names_[v];
}

std::size_t Elig::find(const std::string& name) const {
  for (std::size_t i = 0; i < vertex_count(); ++i) {
    if (this->name(i) == name) return i;
  }
  throw std::out_of_range("no ELIG vertex named '" + name + "'");
}

std::vector<std::size_t> Elig::component_labels(std::span<const std::size_t> removed) const {
  const auto none = vertex_count();
  std::vector<bool> skip(vertex_count(), false);
  for (auto r : removed) skip.at(r) = true;
  std::vector<std::size_t> label(vertex_count(), none);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < vertex_count(); ++s) {
    if (skip[s] || label[s] != none) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj_[v]) {
        if (!skip[w] && label[w] == none) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_minimal_separator(const Elig& elig, std::span<const std::size_t> f) {
  if (f.empty()) return false;
  const auto p = pieces_without(elig, f);
  if (p.count < 2) return false;
  const std::set<std::size_t> members(f.begin(), f.end());
  std::vector<std::size_t> touching(p.count, 0);  // how many members of f each piece touches
  for (auto u : members) {
    std::set<std::size_t> seen;
    for (auto w : elig.neighbors(u)) {
      if (p.label[w] != p.none) seen.insert(p.label[w]);
    }
    for (auto c : seen) ++touching[c];
  }
  return std::count(touching.begin(), touching.end(), members.size()) >= 2;
}

bool is_legal_separator(const Elig& elig, const DisplayGraph& g, std::span<const std::size_t> f) {
  for (std::size_t t = 0; t < g.profile().size(); ++t) {
    std::vector<std::size_t> mine;
    for (auto v : f) {
      if (g.edge_in_tree(v, t)) mine.push_back(v);
    }
    for (std::size_t a = 0; a < mine.size(); ++a) {
      for (std::size_t b = a + 1; b < mine.size(); ++b) {
        if (mine[a] != mine[b] && !elig.adjacent(mine[a], mine[b])) return false;
      }
    }
  }
  return true;
}

bool separators_parallel(const Elig& elig, std::span<const std::size_t> f1, std::span<const std::size_t> f2) {
  const auto p = pieces_without(elig, f1);
  std::set<std::size_t> hit;
  for (auto v : f2) {
    if (p.label.at(v) != p.none) hit.insert(p.label[v]);
  }
  return hit.size() <= 1;
}

std::vector<std::vector<std::size_t>> enumerate_legal_minimal_separators(const Elig& elig, const DisplayGraph& g) {
  std::vector<std::vector<std::vector<std::size_t>>> per_tree;
  for (std::size_t t = 0; t < g.profile().size(); ++t) {
    std::vector<std::size_t> pool(g.tree_edges(t).begin(), g.tree_edges(t).end());
    std::sort(pool.begin(), pool.end());
    std::vector<std::vector<std::size_t>> cliques;
    std::vector<std::size_t> current;
    extend_cliques(elig, pool, 0, current, cliques);
    per_tree.push_back(std::move(cliques));
  }

  std::set<std::vector<std::size_t>> found;
  std::vector<std::size_t> choice(per_tree.size(), 0);
  while (true) {
    std::vector<std::size_t> candidate;
    for (std::size_t t = 0; t < per_tree.size(); ++t) {
      const auto& c = per_tree[t][choice[t]];
      candidate.insert(candidate.end(), c.begin(), c.end());
    }
    std::sort(candidate.begin(), candidate.end());
    candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
    if (!found.contains(candidate) && is_legal_separator(elig, g, candidate) &&
        is_minimal_separator(elig, candidate)) {
      found.insert(candidate);
    }
    std::size_t t = 0;
    while (t < choice.size() && ++choice[t] == per_tree[t].size()) choice[t++] = 0;
    if (t == choice.size()) break;
  }
  return {found.begin(), found.end()};
}

std::string to_dot(const Elig& elig, const DisplayGraph& g) {
  auto first_tree = [&](std::size_t i) { return g.edge(i).sources.front().tree; };
  std::ostringstream out;
  out << "graph elig {\n";
  for (std::size_t i = 0; i < elig.vertex_count(); ++i) {
    out << "  e" << i << " [label=\"" << dot_escape(elig.name(i)) << "\", color=\"" << tree_color(first_tree(i))
        << "\"];\n";
  }
  for (std::size_t i = 0; i < elig.vertex_count(); ++i) {
    for (auto j : elig.neighbors(i)) {
      if (j < i) continue;
      bool same = first_tree(i) == first_tree(j) && g.edge(i).sources.size() == 1 && g.edge(j).sources.size() == 1;
      out << "  e" << i << " -- e" << j << " [color=\"" << (same ? tree_color(first_tree(i)) : "black") << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace treecut
