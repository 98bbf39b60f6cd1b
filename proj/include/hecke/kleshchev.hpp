#pragma once

#include "hecke/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hecke {

/// Normal r-nodes of b, top to bottom. A removable r-node x is normal when,
/// for every addable r-node y below x, the removable r-nodes strictly between
/// x and y outnumber the addable r-nodes strictly between them, and there are
/// at least as many removable as addable r-nodes below x.
std::vector<Node> normalNodes(const Bipartition& b, const Params& p, Residue r);

/// The highest normal r-node.
std::optional<Node> goodNode(const Bipartition& b, const Params& p, Residue r);

struct KleshchevResult {
  bool kleshchev = false;
  /// Good-node removals taking b down to the empty bipartition (when kleshchev).
  std::vector<std::pair<Residue, Node>> witness;
};

/// Recursive test: b is Kleshchev iff b is empty or removing some good node
/// leaves a Kleshchev bipartition. Residues are tried in increasing order.
/// Results are memoized per (b, e, f); safe to call from several threads.
KleshchevResult isKleshchev(const Bipartition& b, const Params& p);

}  // namespace hecke
