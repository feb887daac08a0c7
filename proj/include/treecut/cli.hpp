#ifndef TREECUT_CLI_HPP_
#define TREECUT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "treecut/display_graph.hpp"
#include "treecut/solver.hpp"

namespace treecut {

/// Process exit codes of the treecut tool.
enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitError = 2, kExitLimit = 3 };

inline constexpr int kWitnessSchema = 1;

/// {"schema":1,"mode":...,"cuts":[["1-2",...],...],"splits":[[["a","b"],["c","d"]],...],"supertree":"..."}
std::string witness_to_json(const DisplayGraph& g, const Witness& witness);
/// Inverse of witness_to_json. Throws std::invalid_argument on malformed input.
Witness witness_from_json(const DisplayGraph& g, const std::string& text);

/// Reads a profile from files holding one Newick tree per line. Blank lines
/// and lines starting with '#' are skipped. Throws std::runtime_error with
/// "file:line: message" on parse errors.
Profile read_profile(const std::vector<std::string>& paths);

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treecut

#endif  // TREECUT_CLI_HPP_
