#pragma once

// Blocks by residue multiset, hook linkage, and the Jantzen sum formula in the
// range n < e where each valuation is a signed count of matching hook pairs.

#include "hecke/core.hpp"

#include <map>
#include <vector>

#include "json.hpp"

namespace hecke {

struct Block {
  Params params;
  int n = 0;
  std::vector<Bipartition> members;  // decreasing dominance
  std::vector<Residue> residue;      // sorted multiset
};

/// Bipartitions of n grouped by residue multiset, blocks in order of first
/// appearance in the enumeration.
std::vector<Block> blocks(int n, const Params& p, int bound = kDefaultEnumerationBound);

/// Reachability by moves that remove a rim hook and put back one of the same
/// size whose foot has the same residue.
bool linkedByHooks(const Bipartition& a, const Bipartition& b, const Params& p);

/// Signed count of hook pairs with a common complement and equal foot residue;
/// zero unless a strictly dominates b. Throws DomainError when n >= e.
int valuation(const Bipartition& a, const Bipartition& b, const Params& p);

using SpechtCombination = std::map<Bipartition, int>;

/// Right-hand side of the sum formula over strictly dominated bipartitions.
/// Throws DomainError when n >= e.
SpechtCombination jantzenSum(const Bipartition& a, const Params& p);

/// [{bipartition, coefficient}, ...] in decreasing dominance.
nlohmann::json toJson(const SpechtCombination& c);
nlohmann::json toJson(const Block& b);

}  // namespace hecke
