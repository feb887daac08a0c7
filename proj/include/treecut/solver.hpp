#ifndef TREECUT_SOLVER_HPP_
#define TREECUT_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treecut/cuts.hpp"
#include "treecut/display_graph.hpp"
#include "treecut/tree.hpp"

namespace treecut {

enum class Mode { compatibility, agreement };

std::string to_string(Mode mode);

/// An internal edge of one input tree that some chosen cut must isolate.
struct Requirement {
  std::size_t tree;
  std::size_t edge;  // index into profile.tree(tree).edges()

  friend bool operator==(const Requirement&, const Requirement&) = default;
  friend auto operator<=>(const Requirement&, const Requirement&) = default;
};

std::vector<Requirement> requirements_of(const Profile& profile);

/// A complete, pairwise parallel family of legal minimal cuts with the splits
/// it induces and the supertree built from those splits.
struct Witness {
  Mode mode;
  std::vector<Cut> cuts;  // sorted by edge set
  SplitSet splits;
  PhyloTree supertree;
};

enum class Verdict { yes, no, limit };

struct Decision {
  Verdict verdict;
  std::optional<Witness> witness;  // set iff verdict == yes
  std::string detail;              // limit message
};

struct SolverOptions {
  std::size_t vertex_limit = kDefaultVertexLimit;
};

/// Legal minimal cuts F with F ∩ E(T) = {e}; in agreement mode also
/// |F ∩ E(T')| <= 1 for every tree T'. Drawn from `family`, order kept.
std::vector<Cut> candidate_cuts(const DisplayGraph& g, std::span<const Cut> family, const Requirement& req,
                                Mode mode);

Decision decide(const Profile& profile, Mode mode, const SolverOptions& options = {});
Decision decide_compatibility(const Profile& profile, const SolverOptions& options = {});
Decision decide_agreement(const Profile& profile, const SolverOptions& options = {});

/// Splits and supertree for a given cut family. Throws std::invalid_argument
/// if a cut is not a nice minimal cut, IncompatibleSplits if the splits clash.
Witness make_witness(const DisplayGraph& g, std::vector<Cut> cuts, Mode mode);

struct WitnessReport {
  bool ok = true;
  std::vector<std::string> reasons;  // distinct failure kinds, in check order
};

/// Re-checks every witness property from scratch against a freshly built
/// display graph. Reasons: "minimality", "legality", "parallelism",
/// "completeness", "agreement-bound", "splits", "supertree", "display",
/// "agree".
WitnessReport verify_witness(const Profile& profile, const Witness& witness);

/// Looks up cuts given as lists of edge names such as {"1-2", "5-6"}.
/// Throws std::invalid_argument for unknown edges or non-minimal sets.
std::vector<Cut> cuts_from_names(const DisplayGraph& g, const std::vector<std::vector<std::string>>& names);

}  // namespace treecut

#endif  // TREECUT_SOLVER_HPP_
