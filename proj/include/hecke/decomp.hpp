#pragma once

// Decomposition matrices: bidiagonal matrices for blocks in the finite-type
// range, and fixture tables assembled from canonical-basis candidates.

#include "hecke/core.hpp"
#include "hecke/fock.hpp"
#include "hecke/jantzen.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hecke {

struct DecompMatrix {
  std::vector<Bipartition> rows;  // Specht labels
  std::vector<Bipartition> cols;  // simple labels
  std::vector<std::vector<int>> entries;

  int at(const Bipartition& row, const Bipartition& col) const;
  friend bool operator==(const DecompMatrix&, const DecompMatrix&) = default;
};

/// Describes the first violation of d_mm = 1 and d_lm != 0 only for l ⊵ m.
std::optional<std::string> unitriangularityViolation(const DecompMatrix& m);

std::string render(const DecompMatrix& m);
nlohmann::json toJson(const DecompMatrix& m);

enum class BlockKind { kSimple, kOneA, kOutOfRegime };
enum class CaseTag { kCase1, kCase2Swapped };

std::string toString(BlockKind k);
std::string toString(CaseTag c);

struct BlockClass {
  BlockKind kind = BlockKind::kOutOfRegime;
  CaseTag caseTag = CaseTag::kCase1;
  /// Increasing dominance. One member for simple blocks.
  std::vector<Bipartition> family;
  /// First k with -k-1 not a residue of the block (finite e only).
  std::optional<int> k;
  /// Charge used for the path-sequence frame: f, or e - f after the swap.
  int frameF = 0;
};

/// True when n < min(e, 2f + 4) (n < 2f + 4 for e = inf).
bool inFiniteRegime(int n, const Params& p);

/// Throws InternalError if the block contradicts the classification. By
/// default k is the first missing residue; `k` overrides it and must also
/// have -k-1 missing (DomainError otherwise).
BlockClass classifyBlock(const Block& b, std::optional<int> k = std::nullopt);

/// Rows in increasing dominance; throws DomainError out of the regime.
DecompMatrix decompositionMatrix(const Block& b);

/// The block containing b.
Block blockOf(const Bipartition& b, const Params& p);

enum class FixtureTag { kS4Case1, kS4F0, kS5Case1, kS5Case2 };

std::string toString(FixtureTag t);
FixtureTag parseFixtureTag(std::string_view text);
/// Parameters the fixture is checked at by default.
Params defaultFixtureParams(FixtureTag t);

/// Columns built from F-product candidates, one per printed column.
struct FixtureColumn {
  Bipartition label;
  FWord word;  // empty when the column follows from unitriangularity
  std::optional<CanonicalCandidate> candidate;
};

struct FixtureComputation {
  DecompMatrix expected;  // printed table
  DecompMatrix computed;
  std::vector<FixtureColumn> columns;
};

/// Builds both matrices. Throws DomainError for parameters outside the range
/// of the table.
FixtureComputation computeFixture(FixtureTag t, const Params& p);

/// The computed matrix; throws InternalError when a word fails candidacy or
/// the matrix differs from the printed table.
DecompMatrix fixtureMatrices(FixtureTag t, const Params& p);

}  // namespace hecke
