#ifndef TREECUT_NEWICK_HPP_
#define TREECUT_NEWICK_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "treecut/tree.hpp"

namespace treecut {

class NewickError : public std::runtime_error {
 public:
  NewickError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses one Newick tree terminated by ';'. Branch lengths, internal node
/// names and [comments] are dropped; a degree-two root is suppressed.
/// Vertices are numbered in preorder of the input text.
PhyloTree parse_newick(std::string_view text);

/// Deterministic Newick: rooted at the neighbour of the least leaf, children
/// ordered by the least label in their subtree.
std::string to_newick(const PhyloTree& tree);

}  // namespace treecut

#endif  // TREECUT_NEWICK_HPP_
