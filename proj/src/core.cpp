#include "hecke/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hecke {

Order Order::finite(int e) {
  if (e < 1) throw DomainError("order of q must be positive, got " + std::to_string(e));
  return Order{e};
}

int Order::value() const {
  if (!value_) throw DomainError("order is infinite");
  return *value_;
}

std::string Order::toString() const { return value_ ? std::to_string(*value_) : "inf"; }

Order Order::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinite();
  int e = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), e);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("bad order '" + std::string(text) + "' (expected an integer or 'inf')");
  return finite(e);
}

Params Params::make(Order e, int f) {
  if (e.isFinite() && e.value() < 3)
    throw DomainError("out of scope: q = ±1 (e = 1 or 2) is not handled");
  if (f < 0) throw DomainError("charge f must be non-negative");
  if (e.isFinite() && 2 * f > e.value())
    throw DomainError("charge f = " + std::to_string(f) + " is not normalized (need 2f <= e)");
  return Params{e, f};
}

Residue Params::reduce(std::int64_t c) const {
  if (e.isInfinite()) return static_cast<Residue>(c);
  const std::int64_t m = e.value();
  return static_cast<Residue>(((c % m) + m) % m);
}

Params normalizeParams(Order e, int f0) {
  if (e.isFinite() && e.value() < 3)
    throw DomainError("out of scope: q = ±1 (e = 1 or 2) is not handled");
  if (f0 < 0) throw DomainError("charge must be non-negative");
  if (e.isInfinite()) return Params{e, f0};
  const int m = e.value();
  if (f0 >= m) throw DomainError("charge f0 must satisfy 0 <= f0 < e");
  return Params{e, std::min(f0, m - f0)};
}

// --- Partition ------------------------------------------------------------

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::row(int i) const { return i >= 1 && i <= length() ? parts[i - 1] : 0; }

int Partition::column(int j) const {
  int c = 0;
  for (int x : parts) {
    if (x < j) break;
    ++c;
  }
  return c;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  const int width = parts.empty() ? 0 : parts.front();
  for (int j = 1; j <= width; ++j) c.push_back(column(j));
  return Partition(std::move(c));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  return std::lexicographical_compare_three_way(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                                b.parts.end());
}

// --- Nodes ------------------------------------------------------------------

bool isBelow(const Node& b, const Node& a) {
  return (a.comp == b.comp && a.row < b.row) || a.comp < b.comp;
}

bool topToBottomLess(const Node& a, const Node& b) {
  if (a.comp != b.comp) return a.comp < b.comp;
  if (a.row != b.row) return a.row < b.row;
  return a.col < b.col;
}

std::string toString(const Node& x) {
  return "(" + std::to_string(x.row) + "," + std::to_string(x.col) + "," + std::to_string(x.comp) + ")";
}

// --- Bipartition ------------------------------------------------------------

bool Bipartition::contains(const Node& x) const {
  if (x.comp != 1 && x.comp != 2) return false;
  return x.row >= 1 && x.col >= 1 && x.col <= component(x.comp).row(x.row);
}

std::strong_ordering operator<=>(const Bipartition& a, const Bipartition& b) {
  if (auto c = a.first.size() <=> b.first.size(); c != 0) return c;
  if (auto c = a.first <=> b.first; c != 0) return c;
  return a.second <=> b.second;
}

namespace {

Partition parseComponent(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v <= 0)
      throw ParseError("bad part '" + std::string(tok) + "' in bipartition literal");
    if (!parts.empty() && v > parts.back())
      throw ParseError("bipartition literal component is not weakly decreasing");
    parts.push_back(v);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string componentString(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts[i]);
  }
  return out;
}

}  // namespace

Bipartition parseBipartition(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("bipartition literal needs exactly one '|': '" + std::string(text) + "'");
  return {parseComponent(text.substr(0, bar)), parseComponent(text.substr(bar + 1))};
}

std::string toString(const Bipartition& b) {
  return componentString(b.first) + "|" + componentString(b.second);
}

std::ostream& operator<<(std::ostream& os, const Bipartition& b) { return os << toString(b); }

std::int64_t content(const Node& x, const Params& p) {
  return static_cast<std::int64_t>(x.col) - x.row + static_cast<std::int64_t>(x.comp - 1) * p.f;
}

Residue residue(const Node& x, const Params& p) { return p.reduce(content(x, p)); }

std::vector<Residue> residueMultiset(const Bipartition& b, const Params& p) {
  std::vector<Residue> out;
  out.reserve(b.size());
  for (int k = 1; k <= 2; ++k) {
    const auto& part = b.component(k);
    for (int i = 1; i <= part.length(); ++i)
      for (int j = 1; j <= part.row(i); ++j) out.push_back(residue(Node{i, j, k}, p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- Dominance --------------------------------------------------------------

namespace {

// Partial sums padded to `len` entries (constant after the last part).
std::vector<int> partialSums(const Partition& p, int len, int offset) {
  std::vector<int> s(len, offset);
  int acc = offset;
  for (int i = 0; i < len; ++i) {
    acc += p.row(i + 1);
    s[i] = acc;
  }
  return s;
}

}  // namespace

bool dominates(const Bipartition& a, const Bipartition& b) {
  const int l1 = std::max({a.first.length(), b.first.length(), 1});
  const auto sa1 = partialSums(a.first, l1, 0);
  const auto sb1 = partialSums(b.first, l1, 0);
  for (int i = 0; i < l1; ++i)
    if (sa1[i] < sb1[i]) return false;
  const int l2 = std::max({a.second.length(), b.second.length(), 1});
  const auto sa2 = partialSums(a.second, l2, a.first.size());
  const auto sb2 = partialSums(b.second, l2, b.first.size());
  for (int i = 0; i < l2; ++i)
    if (sa2[i] < sb2[i]) return false;
  return true;
}

bool strictlyDominates(const Bipartition& a, const Bipartition& b) { return a != b && dominates(a, b); }

Dominance dominance(const Bipartition& a, const Bipartition& b) {
  if (a.size() != b.size()) throw DomainError("dominance compares bipartitions of equal size");
  if (a == b) return Dominance::kEqual;
  if (dominates(a, b)) return Dominance::kStrictlyDominates;
  if (dominates(b, a)) return Dominance::kStrictlyDominated;
  return Dominance::kIncomparable;
}

// --- Addable / removable ----------------------------------------------------

std::vector<Node> addableNodes(const Bipartition& b, const Params& p, std::optional<Residue> r) {
  std::vector<Node> out;
  for (int k = 1; k <= 2; ++k) {
    const auto& part = b.component(k);
    for (int i = 1; i <= part.length() + 1; ++i) {
      const int cur = part.row(i);
      if (i == 1 || part.row(i - 1) > cur) {
        Node x{i, cur + 1, k};
        if (!r || residue(x, p) == *r) out.push_back(x);
      }
    }
  }
  return out;
}

std::vector<Node> removableNodes(const Bipartition& b, const Params& p, std::optional<Residue> r) {
  std::vector<Node> out;
  for (int k = 1; k <= 2; ++k) {
    const auto& part = b.component(k);
    for (int i = 1; i <= part.length(); ++i) {
      if (part.row(i) > part.row(i + 1)) {
        Node x{i, part.row(i), k};
        if (!r || residue(x, p) == *r) out.push_back(x);
      }
    }
  }
  return out;
}

Bipartition addNode(const Bipartition& b, const Node& x) {
  Bipartition out = b;
  auto& parts = out.component(x.comp).parts;
  if (x.row == static_cast<int>(parts.size()) + 1 && x.col == 1) {
    parts.push_back(1);
  } else if (x.row >= 1 && x.row <= static_cast<int>(parts.size()) && parts[x.row - 1] + 1 == x.col &&
             (x.row == 1 || parts[x.row - 2] >= x.col)) {
    ++parts[x.row - 1];
  } else {
    throw DomainError("node " + toString(x) + " is not addable to " + toString(b));
  }
  return out;
}

Bipartition removeNode(const Bipartition& b, const Node& x) {
  Bipartition out = b;
  auto& parts = out.component(x.comp).parts;
  const auto& part = b.component(x.comp);
  if (!b.contains(x) || part.row(x.row) != x.col || part.row(x.row + 1) >= x.col)
    throw DomainError("node " + toString(x) + " is not removable from " + toString(b));
  if (--parts[x.row - 1] == 0) parts.pop_back();
  return out;
}

std::vector<Bipartition> arrowTargets(const Bipartition& b, const Params& p, Residue i) {
  std::vector<Bipartition> out;
  for (const auto& x : addableNodes(b, p, i)) out.push_back(addNode(b, x));
  return out;
}

// --- Rim hooks --------------------------------------------------------------

RimHook rimHookAt(const Bipartition& b, const Node& x) {
  if (!b.contains(x)) throw DomainError("node " + toString(x) + " is not in " + toString(b));
  const auto& part = b.component(x.comp);
  const int last = part.column(x.col);  // row of the foot

  RimHook h;
  h.corner = x;
  h.foot = Node{last, x.col, x.comp};
  h.legLength = last - x.row;

  std::vector<int> rows = part.parts;
  for (int r = x.row; r <= last; ++r) {
    const int from = r < last ? part.row(r + 1) : x.col;
    for (int c = from; c <= part.row(r); ++c) h.cells.push_back(Node{r, c, x.comp});
    rows[r - 1] = r < last ? part.row(r + 1) - 1 : x.col - 1;
  }
  h.remainder = b;
  h.remainder.component(x.comp) = Partition(std::move(rows));
  return h;
}

std::vector<RimHook> allRimHooks(const Bipartition& b) {
  std::vector<RimHook> out;
  out.reserve(b.size());
  for (int k = 1; k <= 2; ++k) {
    const auto& part = b.component(k);
    for (int i = 1; i <= part.length(); ++i)
      for (int j = 1; j <= part.row(i); ++j) out.push_back(rimHookAt(b, Node{i, j, k}));
  }
  return out;
}

// --- Enumeration --------------------------------------------------------------

namespace {

void partitionsInto(int n, int maxPart, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(n, maxPart); p >= 1; --p) {
    prefix.push_back(p);
    partitionsInto(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumeratePartitions(int n) {
  if (n < 0) throw DomainError("cannot enumerate partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitionsInto(n, n, prefix, out);
  return out;
}

std::vector<Bipartition> enumerateBipartitions(int n, int bound) {
  if (n < 0) throw DomainError("cannot enumerate bipartitions of a negative integer");
  if (n > bound)
    throw DomainError("n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(bound));
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a) {
    const auto firsts = enumeratePartitions(a);
    const auto seconds = enumeratePartitions(n - a);
    for (const auto& p : firsts)
      for (const auto& q : seconds) out.emplace_back(p, q);
  }
  return out;
}

}  // namespace hecke
