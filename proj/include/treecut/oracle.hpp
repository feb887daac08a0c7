#ifndef TREECUT_ORACLE_HPP_
#define TREECUT_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "treecut/tree.hpp"

namespace treecut {

inline constexpr std::size_t kOracleLabelLimit = 7;

/// Every unrooted phylogenetic tree on a label set, binary or not.
struct TreeCatalog {
  LabelSet labels;
  std::vector<PhyloTree> trees;  // ordered by split set
};

/// Binary trees by leaf insertion, closed under internal-edge contraction and
/// deduplicated by split set. Throws std::invalid_argument for an empty label
/// set or more than `max_labels` labels.
TreeCatalog enumerate_trees(const LabelSet& labels, std::size_t max_labels = kOracleLabelLimit);

/// First catalog tree on L(P) that displays every input tree.
std::optional<PhyloTree> oracle_compatible(const Profile& profile, std::size_t max_labels = kOracleLabelLimit);
/// First catalog tree on L(P) that agrees with every input tree.
std::optional<PhyloTree> oracle_agreement(const Profile& profile, std::size_t max_labels = kOracleLabelLimit);

}  // namespace treecut

#endif  // TREECUT_ORACLE_HPP_
