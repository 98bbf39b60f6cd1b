#pragma once

// The level-two Fock space over Z[v, v^-1] with the F_i / E_i action and the
// canonical-basis sufficiency test for F-products of the empty bipartition.

#include "hecke/core.hpp"
#include "hecke/laurent.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hecke {

/// Finite Z[v, v^-1]-combination of bipartitions, all of one size.
class FockVector {
 public:
  using Terms = std::map<Bipartition, LaurentPoly>;

  FockVector() = default;
  explicit FockVector(const Bipartition& b, LaurentPoly c = LaurentPoly(1));

  static FockVector vacuum() { return FockVector(Bipartition{}); }

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t support() const { return terms_.size(); }
  /// Coefficient of b (zero when absent).
  LaurentPoly coeff(const Bipartition& b) const;
  /// Size of the bipartitions in the support; nullopt for the zero vector.
  std::optional<int> degree() const;

  /// Throws DomainError when b has a different size from the current support.
  void add(const Bipartition& b, const LaurentPoly& c);
  FockVector& operator+=(const FockVector& o);

  friend bool operator==(const FockVector&, const FockVector&) = default;

  /// Least dominant term first: `(|2,2) + v(1|2,1) + v^2(2,2|)`.
  std::string toString() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const FockVector& u);

/// [{bipartition, coeff: [[exp, c], ...]}, ...], least dominant first.
nlohmann::json toJson(const FockVector& u);

FockVector applyF(const FockVector& u, Residue i, const Params& p);
FockVector applyE(const FockVector& u, Residue i, const Params& p);
/// F_i^(m) = F_i^m / [m]!. Throws InternalError if the division is inexact.
FockVector applyFDivided(const FockVector& u, Residue i, int m, const Params& p);

struct WordLetter {
  Residue residue = 0;
  int power = 1;

  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

/// Operator word, written left to right as in F_{i1}^{(m1)} ... F_{il}^{(ml)}.
using FWord = std::vector<WordLetter>;

/// Applies the word to the empty bipartition, rightmost letter first.
FockVector fProduct(const FWord& word, const Params& p);

/// Parses `F0,F1^2,F-1` (residues reduced mod e when e is finite).
FWord parseWord(std::string_view text, const Params& p);
std::string toString(const FWord& w);

struct CanonicalCandidate {
  Bipartition leader;
  std::map<Bipartition, LaurentPoly> tail;  // d_{λμ}(v) in vZ[v], λ ⊳ leader
};

/// Succeeds when u = μ + Σ d_λ(v) λ with d_λ ∈ vZ[v] and every λ ⊳ μ.
std::optional<CanonicalCandidate> asCanonicalCandidate(const FockVector& u);

/// Specialization at v = 1, including leader ↦ 1.
std::map<Bipartition, int> decompColumn(const CanonicalCandidate& c);

}  // namespace hecke
