#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

/// Integer Laurent polynomial in v. Zero coefficients are never stored, so
/// equality is structural.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<std::pair<const int, Coeff>> terms);

  static LaurentPoly monomial(int exponent, Coeff c = 1);

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  /// Precondition: !isZero().
  int minExponent() const { return terms_.begin()->first; }
  int maxExponent() const { return terms_.rbegin()->first; }
  Coeff evaluateAtOne() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form, highest exponent first: `v^2 + 2 + v^-1`.
  std::string toString() const;
  /// [[exponent, coefficient], ...] sorted by exponent.
  std::vector<std::pair<int, Coeff>> toPairs() const;

 private:
  void add(int exponent, Coeff c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Balanced quantum integer [m] = v^{m-1} + v^{m-3} + ... + v^{1-m}; [0] = 0.
LaurentPoly quantumInteger(int m);
/// [m]! = [1][2]...[m].
LaurentPoly quantumFactorial(int m);

/// p / q, exact in Z[v, v^-1]. Throws DomainError if q = 0 or the division
/// leaves a remainder.
LaurentPoly exactDivide(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace hecke
