#include "treecut/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace treecut {

namespace {

using Row = std::vector<std::uint64_t>;

bool test_bit(const Row& row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1U; }

bool intersects(const Row& x, const Row& y) {
  for (std::size_t w = 0; w < x.size(); ++w) {
    if ((x[w] & y[w]) != 0) return true;
  }
  return false;
}

bool within_agreement_bound(const Cut& cut) {
  return std::all_of(cut.per_tree.begin(), cut.per_tree.end(), [](const EdgeSet& s) { return s.size() <= 1; });
}

bool serves(const DisplayGraph& g, const Cut& cut, const Requirement& req) {
  const auto& mine = cut.per_tree.at(req.tree);
  return mine.size() == 1 && mine.front() == g.edge_of(req.tree, req.edge);
}

class Search {
 public:
  Search(const std::vector<Cut>& cuts, const std::vector<std::vector<std::size_t>>& candidates,
         const std::vector<std::vector<std::size_t>>& served, const ParallelMatrix& parallel)
      : cuts_(cuts), candidates_(candidates), served_(served), parallel_(parallel) {
    const auto words = (cuts.size() + 63) / 64;
    masks_.assign(candidates.size(), Row(words, 0));
    for (std::size_t r = 0; r < candidates.size(); ++r) {
      for (auto c : candidates[r]) masks_[r][c / 64] |= std::uint64_t{1} << (c % 64);
    }
    order_.resize(candidates.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return candidates[x].size() < candidates[y].size(); });
  }

  std::optional<std::vector<std::size_t>> run() {
    Row allowed((cuts_.size() + 63) / 64, ~std::uint64_t{0});
    std::vector<int> covered(candidates_.size(), 0);
    chosen_.clear();
    if (step(allowed, covered)) return chosen_;
    return std::nullopt;
  }

 private:
  bool step(const Row& allowed, std::vector<int>& covered) {
    auto next = std::find_if(order_.begin(), order_.end(), [&](std::size_t r) { return covered[r] == 0; });
    if (next == order_.end()) return true;
    const auto r = *next;

    std::vector<std::size_t> options;
    for (auto c : candidates_[r]) {
      if (test_bit(allowed, c)) options.push_back(c);
    }
    auto gain = [&](std::size_t c) {
      return std::count_if(served_[c].begin(), served_[c].end(), [&](std::size_t q) { return covered[q] == 0; });
    };
    std::stable_sort(options.begin(), options.end(), [&](std::size_t x, std::size_t y) { return gain(x) > gain(y); });

    for (auto c : options) {
      Row narrowed(allowed.size());
      const auto& row = parallel_.row(c);
      for (std::size_t w = 0; w < allowed.size(); ++w) narrowed[w] = allowed[w] & row[w];
      for (auto q : served_[c]) ++covered[q];
      bool viable = true;
      for (std::size_t q = 0; q < candidates_.size() && viable; ++q) {
        if (covered[q] == 0 && !intersects(masks_[q], narrowed)) viable = false;
      }
      chosen_.push_back(c);
      if (viable && step(narrowed, covered)) return true;
      chosen_.pop_back();
      for (auto q : served_[c]) --covered[q];
    }
    return false;
  }

  const std::vector<Cut>& cuts_;
  const std::vector<std::vector<std::size_t>>& candidates_;
  const std::vector<std::vector<std::size_t>>& served_;
  const ParallelMatrix& parallel_;
  std::vector<Row> masks_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> chosen_;
};

bool supertree_fits(const Profile& profile, const PhyloTree& supertree, Mode mode) {
  return std::all_of(profile.trees().begin(), profile.trees().end(), [&](const PhyloTree& t) {
    return mode == Mode::agreement ? agrees(supertree, t) : displays(supertree, t);
  });
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::agreement ? "agreement" : "compatibility"; }

std::vector<Requirement> requirements_of(const Profile& profile) {
  std::vector<Requirement> out;
  for (std::size_t t = 0; t < profile.size(); ++t) {
    const auto& tree = profile.tree(t);
    for (std::size_t e = 0; e < tree.edges().size(); ++e) {
      if (tree.is_internal_edge(e)) out.push_back({t, e});
    }
  }
  return out;
}

std::vector<Cut> candidate_cuts(const DisplayGraph& g, std::span<const Cut> family, const Requirement& req,
                                Mode mode) {
  std::vector<Cut> out;
  for (const auto& cut : family) {
    if (!serves(g, cut, req) || !is_legal_cut(g, cut.edges)) continue;
    if (mode == Mode::agreement && !within_agreement_bound(cut)) continue;
    out.push_back(cut);
  }
  return out;
}

Witness make_witness(const DisplayGraph& g, std::vector<Cut> cuts, Mode mode) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto splits = splits_of_cutset(g, cuts);
  auto supertree = tree_from_splits(splits, g.profile().labels());
  return Witness{mode, std::move(cuts), std::move(splits), std::move(supertree)};
}

Decision decide(const Profile& profile, Mode mode, const SolverOptions& options) {
  const DisplayGraph g(profile);
  std::vector<Cut> family;
  try {
    family = enumerate_component_cuts(g, options.vertex_limit);
  } catch (const LimitExceeded& e) {
    return Decision{Verdict::limit, std::nullopt, e.what()};
  }

  const auto reqs = requirements_of(profile);
  std::vector<Cut> useful;
  std::vector<std::vector<std::size_t>> served;
  std::vector<std::vector<std::size_t>> candidates(reqs.size());
  for (const auto& cut : family) {
    if (!is_legal_cut(g, cut.edges)) continue;
    if (mode == Mode::agreement && !within_agreement_bound(cut)) continue;
    std::vector<std::size_t> mine;
    for (std::size_t r = 0; r < reqs.size(); ++r) {
      if (serves(g, cut, reqs[r])) mine.push_back(r);
    }
    if (mine.empty()) continue;
    for (auto r : mine) candidates[r].push_back(useful.size());
    useful.push_back(cut);
    served.push_back(std::move(mine));
  }
  for (const auto& c : candidates) {
    if (c.empty()) return Decision{Verdict::no, std::nullopt, {}};
  }

  const ParallelMatrix parallel(g, useful);
  auto chosen = Search(useful, candidates, served, parallel).run();
  if (!chosen) return Decision{Verdict::no, std::nullopt, {}};

  std::vector<Cut> picked;
  for (auto c : *chosen) picked.push_back(useful[c]);
  auto witness = make_witness(g, std::move(picked), mode);
  if (!supertree_fits(profile, witness.supertree, mode)) {
    throw std::logic_error("supertree built from the cut family does not fit the profile");
  }
  return Decision{Verdict::yes, std::move(witness), {}};
}

Decision decide_compatibility(const Profile& profile, const SolverOptions& options) {
  return decide(profile, Mode::compatibility, options);
}

Decision decide_agreement(const Profile& profile, const SolverOptions& options) {
  return decide(profile, Mode::agreement, options);
}

WitnessReport verify_witness(const Profile& profile, const Witness& witness) {
  WitnessReport report;
  auto fail = [&](const std::string& reason) {
    report.ok = false;
    if (std::find(report.reasons.begin(), report.reasons.end(), reason) == report.reasons.end()) {
      report.reasons.push_back(reason);
    }
  };

  const DisplayGraph g(profile);
  std::vector<Cut> cuts;
  for (const auto& given : witness.cuts) {
    auto cut = make_minimal_cut(g, given.edges);
    if (!cut) {
      fail("minimality");
      continue;
    }
    if (!is_legal_cut(g, cut->edges)) fail("legality");
    if (witness.mode == Mode::agreement && !within_agreement_bound(*cut)) fail("agreement-bound");
    cuts.push_back(std::move(*cut));
  }
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      if (i != j && !cuts_parallel(g, cuts[i], cuts[j])) fail("parallelism");
    }
  }
  for (const auto& req : requirements_of(profile)) {
    bool covered = std::any_of(cuts.begin(), cuts.end(), [&](const Cut& c) { return serves(g, c, req); });
    if (!covered) fail("completeness");
  }

  bool nice = std::all_of(cuts.begin(), cuts.end(), [&](const Cut& c) { return is_nice_cut(g, c); });
  if (!nice || cuts.size() != witness.cuts.size() || splits_of_cutset(g, cuts) != witness.splits) fail("splits");

  try {
    if (!trees_isomorphic(witness.supertree, tree_from_splits(witness.splits, profile.labels()))) fail("supertree");
  } catch (const std::invalid_argument&) {
    fail("supertree");
  }
  if (witness.supertree.labels() == profile.labels()) {
    for (const auto& t : profile.trees()) {
      if (!displays(witness.supertree, t)) fail("display");
      if (witness.mode == Mode::agreement && !agrees(witness.supertree, t)) fail("agree");
    }
  } else {
    fail("supertree");
  }
  return report;
}

std::vector<Cut> cuts_from_names(const DisplayGraph& g, const std::vector<std::vector<std::string>>& names) {
  std::vector<Cut> out;
  for (const auto& list : names) {
    std::vector<EdgeId> edges;
    for (const auto& name : list) {
      auto dash = name.find('-');
      std::optional<EdgeId> e;
      // Labels may contain '-', so try every split point.
      for (; dash != std::string::npos && !e; dash = name.find('-', dash + 1)) {
        e = g.find_edge(name.substr(0, dash), name.substr(dash + 1));
      }
      if (!e) throw std::invalid_argument("unknown display-graph edge '" + name + "'");
      edges.push_back(*e);
    }
    auto cut = make_minimal_cut(g, std::move(edges));
    if (!cut) throw std::invalid_argument("edge set is not a minimal cut");
    out.push_back(std::move(*cut));
  }
  return out;
}

}  // namespace treecut
