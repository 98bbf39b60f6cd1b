#pragma once

// Partitions, bipartitions and their node combinatorics for the type-B Hecke
// algebra with T_0 normalized to (T_0 - 1)(T_0 - q^f) = 0.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// Raised for inputs outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed textual input (bipartition literals, words).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Multiplicative order of q: a positive integer or infinity.
class Order {
 public:
  static Order finite(int e);
  static Order infinite() { return Order{}; }

  bool isInfinite() const { return !value_.has_value(); }
  bool isFinite() const { return value_.has_value(); }
  /// Precondition: isFinite().
  int value() const;

  std::string toString() const;
  static Order parse(std::string_view text);

  friend bool operator==(const Order&, const Order&) = default;

 private:
  Order() = default;
  explicit Order(int e) : value_(e) {}
  std::optional<int> value_;
};

using Residue = int;

struct Params {
  Order e = Order::infinite();
  int f = 0;

  /// Validates e >= 3 (or infinite) and 0 <= 2f <= e.
  static Params make(Order e, int f);

  /// Reduces a content to a residue (identity when e is infinite).
  Residue reduce(std::int64_t content) const;

  friend bool operator==(const Params&, const Params&) = default;
};

/// Renormalizes a raw charge f0 to min(f0, e - f0). Rejects e in {1, 2}.
Params normalizeParams(Order e, int f0);

struct Partition {
  std::vector<int> parts;  // weakly decreasing, no zeros

  Partition() = default;
  /// Trailing zeros are dropped; throws DomainError if not weakly decreasing.
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  /// Row i (1-based); zero beyond the last row.
  int row(int i) const;
  /// Length of column j (1-based).
  int column(int j) const;
  Partition conjugate() const;
  bool empty() const { return parts.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
};

struct Node {
  int row = 1;
  int col = 1;
  int comp = 1;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Total "below" order: component 1 rows top-to-bottom, then component 2.
/// Returns true when b is below a.
bool isBelow(const Node& b, const Node& a);
/// Strict-weak order realizing the top-to-bottom reading.
bool topToBottomLess(const Node& a, const Node& b);

std::string toString(const Node& x);

struct Bipartition {
  Partition first;
  Partition second;

  Bipartition() = default;
  Bipartition(Partition a, Partition b) : first(std::move(a)), second(std::move(b)) {}

  int size() const { return first.size() + second.size(); }
  const Partition& component(int k) const { return k == 1 ? first : second; }
  Partition& component(int k) { return k == 1 ? first : second; }
  bool contains(const Node& x) const;
  /// Components exchanged.
  Bipartition swapped() const { return {second, first}; }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  /// Linear extension of dominance: |first|, then first, then second
  /// (each lexicographically). a ⊳ b implies a > b.
  friend std::strong_ordering operator<=>(const Bipartition& a, const Bipartition& b);
};

/// Literal grammar: `4,2,1|2,2,1`, `|2,2`, `|`.
Bipartition parseBipartition(std::string_view text);
std::string toString(const Bipartition& b);
std::ostream& operator<<(std::ostream& os, const Bipartition& b);

std::int64_t content(const Node& x, const Params& p);
Residue residue(const Node& x, const Params& p);

/// Sorted list of residues of all nodes (the canonical multiset encoding).
std::vector<Residue> residueMultiset(const Bipartition& b, const Params& p);

enum class Dominance { kStrictlyDominates, kEqual, kStrictlyDominated, kIncomparable };

/// a ⊵ b.
bool dominates(const Bipartition& a, const Bipartition& b);
/// a ⊳ b.
bool strictlyDominates(const Bipartition& a, const Bipartition& b);
/// Throws DomainError when sizes differ.
Dominance dominance(const Bipartition& a, const Bipartition& b);

std::vector<Node> addableNodes(const Bipartition& b, const Params& p,
                               std::optional<Residue> r = std::nullopt);
std::vector<Node> removableNodes(const Bipartition& b, const Params& p,
                                 std::optional<Residue> r = std::nullopt);

Bipartition addNode(const Bipartition& b, const Node& x);
Bipartition removeNode(const Bipartition& b, const Node& x);

/// All μ with b →ⁱ μ, in the order of the added nodes (top to bottom).
std::vector<Bipartition> arrowTargets(const Bipartition& b, const Params& p, Residue i);

struct RimHook {
  Node corner;
  std::vector<Node> cells;  // row by row, top to bottom, left to right
  int legLength = 0;
  Node foot;
  Bipartition remainder;

  int size() const { return static_cast<int>(cells.size()); }
};

/// The rim hook r_x for x in [b]. Throws DomainError if x is not in the diagram.
RimHook rimHookAt(const Bipartition& b, const Node& x);
/// One rim hook per node of b, in node order.
std::vector<RimHook> allRimHooks(const Bipartition& b);

inline constexpr int kDefaultEnumerationBound = 30;

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> enumeratePartitions(int n);
/// All bipartitions of n in decreasing dominance (refined lexicographically).
std::vector<Bipartition> enumerateBipartitions(int n, int bound = kDefaultEnumerationBound);

}  // namespace hecke
