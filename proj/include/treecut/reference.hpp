#ifndef TREECUT_REFERENCE_HPP_
#define TREECUT_REFERENCE_HPP_

#include <string>
#include <vector>

#include "treecut/tree.hpp"

namespace treecut {

/// Two trees on a..g that are compatible but have no agreement supertree.
/// Preorder numbering gives internal vertices 1-3 and 4-7 in G(P).
Profile seven_taxon_profile();
std::vector<std::string> seven_taxon_newick();

/// Complete pairwise parallel nice cut family for seven_taxon_profile, with
/// the splits its cuts induce, in the same order.
std::vector<std::vector<std::string>> seven_taxon_cut_family();
std::vector<std::string> seven_taxon_family_splits();

/// Two trees on a..f with agreement supertree ((a,b),f,(c,(d,e))).
Profile six_taxon_profile();
std::vector<std::string> six_taxon_newick();
std::vector<std::vector<std::string>> six_taxon_cut_family();
std::string six_taxon_supertree();

}  // namespace treecut

#endif  // TREECUT_REFERENCE_HPP_
