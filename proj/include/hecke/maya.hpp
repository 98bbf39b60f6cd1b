#pragma once

// Path sequences (Maya diagrams) of partitions and bipartitions, the A/B/C/D
// column calculus and the one-A block families.

#include "hecke/core.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

/// Doubly infinite 0/1 sequence, all 0 far left and all 1 far right. Index t
/// sits right of the bar when t >= 1. Only the window from the first 1 to the
/// last 0 is stored; an empty window starts at the first 1.
class PathSeq {
 public:
  PathSeq() = default;
  /// bits[k] is the bit at index start + k; bits outside are taken as 0 on the
  /// left and 1 on the right. The result is normalized.
  static PathSeq fromBits(int start, const std::vector<int>& bits);

  int bit(int t) const;
  int windowStart() const { return start_; }
  /// Last index of the window (windowStart - 1 when empty).
  int windowEnd() const { return start_ + static_cast<int>(window_.size()) - 1; }
  const std::vector<int>& window() const { return window_; }

  /// Ones at indices <= 0 equal zeros at indices >= 1.
  bool balanced() const;

  /// `...00101|011011...`
  std::string render() const;

  friend bool operator==(const PathSeq&, const PathSeq&) = default;

 private:
  int start_ = 1;
  std::vector<int> window_;
};

PathSeq partitionToPath(const Partition& p);
/// Throws DomainError for an unbalanced sequence.
Partition pathToPartition(const PathSeq& s);

/// Content k -> number of nodes of content k (zero entries omitted).
std::map<int, int> contentCounts(const PathSeq& s);

/// Number of index pairs i < j with bit 1 at i and bit 0 at j.
int hookCount(const PathSeq& s);

/// Top row is the first component; the bottom row is the second component
/// shifted f places right, so column t reads (p_t, s_{t-f}).
struct BiPathSeq {
  PathSeq top;
  PathSeq bottom;
  int f = 0;

  std::pair<int, int> column(int t) const { return {top.bit(t), bottom.bit(t - f)}; }
  /// Smallest and largest column where either row leaves its constant tail.
  int firstColumn() const;
  int lastColumn() const;

  /// Two lines with bars after column 0 and after column f.
  std::string render() const;

  friend bool operator==(const BiPathSeq&, const BiPathSeq&) = default;
};

BiPathSeq bipartitionToBiPath(const Bipartition& b, const Params& p);
/// Inverse of bipartitionToBiPath. Throws DomainError when a row is unbalanced.
Bipartition biPathToBipartition(const BiPathSeq& s);

/// A = (0,1), B = (1,0), C = (0,0), D = (1,1), counted in the left (t <= 0),
/// middle (1 <= t <= f) and right (t > f) regions.
struct RegionCounts {
  int aL = 0, aM = 0, aR = 0;
  int bL = 0, bM = 0, bR = 0;
  int cM = 0, cR = 0;
  int dL = 0, dM = 0;

  int a() const { return aL + aM + aR; }
  int b() const { return bL + bM + bR; }

  friend bool operator==(const RegionCounts&, const RegionCounts&) = default;
};

RegionCounts regionCounts(const BiPathSeq& s);

struct IdentityCheck {
  std::string name;
  bool evaluated = false;
  bool holds = false;
};

/// left-balance, right-balance, middle-width, b-count always; hook-bound and
/// single-a only when n <= 2f + 3.
std::vector<IdentityCheck> checkIdentities(const RegionCounts& rc, const Params& p, int n);

/// The f + 2 bipartitions obtained by moving the single A across the A/B
/// columns, in increasing dominance (A leftmost first). Throws DomainError
/// unless there is exactly one A; InternalError if a placement is invalid.
std::vector<Bipartition> oneAFamily(const BiPathSeq& s);

}  // namespace hecke
