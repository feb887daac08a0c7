#include "treecut/reference.hpp"

#include "treecut/newick.hpp"

namespace treecut {

namespace {

Profile parse_all(const std::vector<std::string>& lines) {
  std::vector<PhyloTree> trees;
  for (const auto& l : lines) trees.push_back(parse_newick(l));
  return Profile(std::move(trees));
}

}  // namespace

std::vector<std::string> seven_taxon_newick() { return {"(a,b,c,(f,(d,e)));", "(a,b,(c,(d,e,(f,g))));"}; }

Profile seven_taxon_profile() { return parse_all(seven_taxon_newick()); }

std::vector<std::vector<std::string>> seven_taxon_cut_family() {
  return {{"1-2", "5-6"}, {"2-3", "6-7", "5-6"}, {"4-5", "1-2", "1-c"}, {"6-7", "2-f"}};
}

std::vector<std::string> seven_taxon_family_splits() { return {"abc|defg", "abcfg|de", "ab|cdefg", "abcde|fg"}; }

std::vector<std::string> six_taxon_newick() { return {"(a,b,(c,(d,e)));", "(a,b,(f,(c,d)));"}; }

Profile six_taxon_profile() { return parse_all(six_taxon_newick()); }

std::vector<std::vector<std::string>> six_taxon_cut_family() { return {{"1-2", "4-5"}, {"1-2", "5-6"}, {"2-3", "6-d"}}; }

std::string six_taxon_supertree() { return "((a,b),f,(c,(d,e)));"; }

}  // namespace treecut
