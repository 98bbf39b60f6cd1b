#include "hecke/maya.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

PathSeq PathSeq::fromBits(int start, const std::vector<int>& bits) {
  for (int b : bits)
    if (b != 0 && b != 1) throw DomainError("path sequence bits must be 0 or 1");
  std::size_t lo = 0;
  std::size_t hi = bits.size();
  while (lo < hi && bits[lo] == 0) ++lo;
  while (hi > lo && bits[hi - 1] == 1) --hi;
  // An empty window still records where the 0s end.
  PathSeq s;
  s.start_ = start + static_cast<int>(lo);
  s.window_.assign(bits.begin() + lo, bits.begin() + hi);
  return s;
}

int PathSeq::bit(int t) const {
  if (t < start_) return 0;
  if (t > windowEnd()) return 1;
  return window_[t - start_];
}

bool PathSeq::balanced() const {
  int onesLeft = 0;
  int zerosRight = 0;
  for (int t = std::min(start_, 1); t <= std::max(windowEnd(), 0); ++t) {
    if (t <= 0 && bit(t) == 1) ++onesLeft;
    if (t >= 1 && bit(t) == 0) ++zerosRight;
  }
  return onesLeft == zerosRight;
}

std::string PathSeq::render() const {
  const int lo = std::min(start_, 0) - 2;
  const int hi = std::max(windowEnd(), 1) + 2;
  std::string out = "...";
  for (int t = lo; t <= hi; ++t) {
    out += static_cast<char>('0' + bit(t));
    if (t == 0) out += '|';
  }
  return out + "...";
}

PathSeq partitionToPath(const Partition& p) {
  const int len = p.length();
  const int lo = 1 - len;
  const int hi = std::max(p.row(1), 1);
  std::vector<int> bits(hi - lo + 1, 1);
  for (int i = 1; i <= len; ++i) bits[p.row(i) - i + 1 - lo] = 0;
  return PathSeq::fromBits(lo, bits);
}

Partition pathToPartition(const PathSeq& s) {
  if (!s.balanced()) throw DomainError("unbalanced path sequence: " + s.render());
  std::vector<int> parts;
  for (int t = s.windowEnd(); t >= s.windowStart(); --t)
    if (s.bit(t) == 0) parts.push_back(t + static_cast<int>(parts.size()));
  return Partition(parts);
}

std::map<int, int> contentCounts(const PathSeq& s) {
  std::map<int, int> out;
  int ones = 0;
  for (int k = s.windowStart(); k <= s.windowEnd(); ++k) {
    ones += s.bit(k);
    const int c = ones - std::max(k, 0);
    if (c != 0) out[k] = c;
  }
  return out;
}

int hookCount(const PathSeq& s) {
  int ones = 0;
  int count = 0;
  for (int b : s.window()) {
    if (b == 1) ++ones;
    else count += ones;
  }
  return count;
}

int BiPathSeq::firstColumn() const { return std::min(top.windowStart(), bottom.windowStart() + f); }
int BiPathSeq::lastColumn() const { return std::max(top.windowEnd(), bottom.windowEnd() + f); }

std::string BiPathSeq::render() const {
  const int lo = std::min(firstColumn(), 1) - 3;
  const int hi = std::max(lastColumn(), f) + 2;
  std::string lines[2] = {"...", "..."};
  for (int t = lo; t <= hi; ++t) {
    auto [p, s] = column(t);
    lines[0] += static_cast<char>('0' + p);
    lines[1] += static_cast<char>('0' + s);
    if (t == 0 || t == f) {
      lines[0] += '|';
      lines[1] += '|';
    }
  }
  return lines[0] + "...\n" + lines[1] + "...";
}

BiPathSeq bipartitionToBiPath(const Bipartition& b, const Params& p) {
  return {partitionToPath(b.first), partitionToPath(b.second), p.f};
}

Bipartition biPathToBipartition(const BiPathSeq& s) {
  return {pathToPartition(s.top), pathToPartition(s.bottom)};
}

RegionCounts regionCounts(const BiPathSeq& s) {
  RegionCounts rc;
  const int lo = std::min(s.firstColumn(), 1) - 1;
  const int hi = std::max(s.lastColumn(), s.f) + 1;
  for (int t = lo; t <= hi; ++t) {
    const auto col = s.column(t);
    const bool a = col == std::pair{0, 1};
    const bool b = col == std::pair{1, 0};
    const bool c = col == std::pair{0, 0};
    const bool d = col == std::pair{1, 1};
    if (t <= 0) {
      rc.aL += a;
      rc.bL += b;
      rc.dL += d;
    } else if (t <= s.f) {
      rc.aM += a;
      rc.bM += b;
      rc.cM += c;
      rc.dM += d;
    } else {
      rc.aR += a;
      rc.bR += b;
      rc.cR += c;
    }
  }
  return rc;
}

std::vector<IdentityCheck> checkIdentities(const RegionCounts& r, const Params& p, int n) {
  const int f = p.f;
  const bool small = n <= 2 * f + 3;
  const int hookBound = (r.bL + r.dL) * (r.aM + r.cM + r.aR + r.cR) +
                        (r.aL + r.dL + r.aM + r.dM) * (r.bR + r.cR) + (r.bM + r.dM) * (r.aR + r.cR) +
                        (r.aL + r.dL) * (r.bM + r.cM) + r.aL * r.bL + r.aM * r.bM + r.aR * r.bR;
  return {
      {"left-balance", true, r.bL + r.dL == r.aM + r.cM + r.aR + r.cR},
      {"right-balance", true, r.bR + r.cR == r.aL + r.dL + r.aM + r.dM},
      {"middle-width", true, f == r.aM + r.bM + r.cM + r.dM},
      {"b-count", true, r.b() == f + r.a()},
      {"hook-bound", small, small && 2 * f + 3 >= hookBound},
      {"single-a", small, small && r.a() <= 1},
  };
}

std::vector<Bipartition> oneAFamily(const BiPathSeq& s) {
  const auto rc = regionCounts(s);
  if (rc.a() != 1)
    throw DomainError("one-A family needs exactly one A column, found " + std::to_string(rc.a()));

  const int lo = std::min(s.firstColumn(), 1) - 1;
  const int hi = std::max(s.lastColumn(), s.f) + 1;
  std::vector<int> slots;
  for (int t = lo; t <= hi; ++t) {
    const auto col = s.column(t);
    if (col.first != col.second) slots.push_back(t);
  }

  std::vector<Bipartition> family;
  for (int a : slots) {
    std::vector<int> top;
    std::vector<int> bottom;
    for (int t = lo; t <= hi; ++t) {
      auto [p, q] = s.column(t);
      if (p != q) std::tie(p, q) = t == a ? std::pair{0, 1} : std::pair{1, 0};
      top.push_back(p);
      bottom.push_back(q);
    }
    BiPathSeq placed{PathSeq::fromBits(lo, top), PathSeq::fromBits(lo - s.f, bottom), s.f};
    if (!placed.top.balanced() || !placed.bottom.balanced())
      throw InternalError("one-A placement does not give a bipartition:\n" + placed.render());
    family.push_back(biPathToBipartition(placed));
  }
  for (std::size_t k = 1; k < family.size(); ++k)
    if (!strictlyDominates(family[k], family[k - 1]))
      throw InternalError("one-A family is not a dominance chain at " + toString(family[k]));
  return family;
}

}  // namespace hecke
