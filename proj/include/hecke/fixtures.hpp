#pragma once

// Worked examples reproduced from the literature: named bipartition families,
// F-product displays, and the ledger run by `verify-fixtures`.

#include "hecke/core.hpp"
#include "hecke/fock.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

namespace family {

/// ((0),(k,1^{e-k})).
Bipartition lambdaK(int e, int k);
/// ((k,1^{e-k}),(0)).
Bipartition muK(int e, int k);
/// ((f-l,1^{e-f-k}),(k,1^l)).
Bipartition lambdaKL(int e, int f, int k, int l);

/// The six bipartitions of the residue {-1,0,0,1} block at f = 0, least dominant first.
std::vector<Bipartition> fZeroSix();
/// ((0),(2^{f+2})), ((1),(2^{f+1},1)), ((1^2),(2^{f+1})), ((2),(2^f,1^2)), ((2,1),(2^f,1)).
std::vector<Bipartition> chargeFive(int f);

}  // namespace family

struct Display {
  enum class Mode {
    kExact,    // the product equals `terms`
    kLeading,  // a candidate led by the first term; listed terms match, the rest is more dominant
    kColumn,   // a candidate whose column at v = 1 is `terms` evaluated at v = 1
  };

  std::string name;
  FWord word;
  Mode mode = Mode::kExact;
  std::vector<std::pair<Bipartition, LaurentPoly>> terms;  // leader first
};

struct DisplayResult {
  bool pass = false;
  std::string detail;
};

DisplayResult checkDisplay(const Display& d, const Params& p);

/// Every n = e display at (e, f): the lambda_k, lambda_{k,0}, lambda_{k,l} and
/// lambda_{1,l} words for f >= 1, the lambda_k words for f = 0.
std::vector<Display> nEqualsEDisplays(const Params& p);
/// The n = 2f + 4 displays: two exact products for f = 0, four for f >= 1.
std::vector<Display> twoFPlusFourDisplays(const Params& p);

/// Kleshchev members of the residue {0,...,e-1} block at n = e as predicted
/// by the hook-family description, and as computed.
std::vector<Bipartition> predictedKleshchevNEqualsE(const Params& p);
std::vector<Bipartition> computedKleshchevNEqualsE(const Params& p);

struct LedgerEntry {
  std::string group;
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<std::string> ledgerGroups();
/// Runs every worked example (or one group). Never throws for a failing check.
std::vector<LedgerEntry> fixtureLedger(const std::optional<std::string>& group = std::nullopt);

}  // namespace hecke
