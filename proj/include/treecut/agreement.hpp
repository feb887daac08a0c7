#ifndef TREECUT_AGREEMENT_HPP_
#define TREECUT_AGREEMENT_HPP_

#include <cstddef>
#include <vector>

#include "treecut/cuts.hpp"
#include "treecut/display_graph.hpp"
#include "treecut/tree.hpp"

namespace treecut {

/// Cut function of an agreement supertree S: entry i holds the display-graph
/// edges of every input-tree edge whose bipartition is the restriction of the
/// bipartition of S's edge i. The sets are cuts of G(P) but need not be
/// minimal. Throws std::invalid_argument unless S agrees with every tree.
std::vector<EdgeSet> agreement_cut_function(const PhyloTree& supertree, const DisplayGraph& g);
std::vector<EdgeSet> agreement_cut_function(const PhyloTree& supertree, const Profile& profile);

/// Splits edge {endpoint, v} of S at `endpoint`. The labels beyond v are
/// grouped by the component of G(P) - Ψ(edge) they fall into; S_v is removed
/// and, per group, the minimal subtree of the former S_v spanning the group
/// is hung directly off `endpoint`. Throws std::invalid_argument if the
/// endpoint is a leaf or the labels beyond v form a single group.
PhyloTree split_edge_at(const PhyloTree& supertree, std::size_t edge_index, PhyloTree::VertexId endpoint,
                        const DisplayGraph& g);

/// Number of groups the labels beyond v fall into, as used by split_edge_at.
std::size_t far_side_groups(const PhyloTree& supertree, std::size_t edge_index, PhyloTree::VertexId endpoint,
                            const DisplayGraph& g);

/// Applies split_edge_at to the first internal edge with a non-minimal cut
/// until none is left. Throws std::logic_error after `max_steps` rounds or if
/// a non-minimal edge cannot be split at either endpoint.
PhyloTree minimize_cut_function(PhyloTree supertree, const DisplayGraph& g, std::size_t max_steps = 1000);

}  // namespace treecut

#endif  // TREECUT_AGREEMENT_HPP_
