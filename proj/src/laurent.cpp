#include "hecke/laurent.hpp"

#include "hecke/core.hpp"

#include <sstream>

namespace hecke {

LaurentPoly::LaurentPoly(Coeff constant) { add(0, constant); }

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Coeff>> terms) {
  for (const auto& [e, c] : terms) add(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, Coeff c) {
  LaurentPoly p;
  p.add(exponent, c);
  return p;
}

void LaurentPoly::add(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly::Coeff LaurentPoly::evaluateAtOne() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add(e1 + e2, c1 * c2);
  *this = std::move(r);
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

std::string LaurentPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Coeff a = c < 0 ? -c : c;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::toPairs() const {
  return {terms_.begin(), terms_.end()};
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.toString(); }

LaurentPoly quantumInteger(int m) {
  if (m < 0) throw DomainError("quantum integer needs m >= 0");
  LaurentPoly p;
  for (int j = 0; j < m; ++j) p += LaurentPoly::monomial(m - 1 - 2 * j);
  return p;
}

LaurentPoly quantumFactorial(int m) {
  LaurentPoly p(1);
  for (int j = 2; j <= m; ++j) p *= quantumInteger(j);
  return p;
}

LaurentPoly exactDivide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.isZero()) throw DomainError("division by the zero Laurent polynomial");
  const int qTop = q.maxExponent();
  const int qSpan = qTop - q.minExponent();
  const auto qLead = q.coeff(qTop);

  LaurentPoly quotient;
  LaurentPoly rem = p;
  while (!rem.isZero()) {
    const int top = rem.maxExponent();
    const auto lead = rem.coeff(top);
    if (top - rem.minExponent() < qSpan || lead % qLead != 0)
      throw DomainError("inexact division: (" + p.toString() + ") / (" + q.toString() + ")");
    const auto step = LaurentPoly::monomial(top - qTop, lead / qLead);
    quotient += step;
    rem -= step * q;
  }
  return quotient;
}

}  // namespace hecke
