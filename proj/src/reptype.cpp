#include "hecke/reptype.hpp"

#include <algorithm>

namespace hecke {

std::string toString(RepType t) { return t == RepType::kFinite ? "FINITE" : "INFINITE"; }

namespace {

void requirePositive(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
}

RepType finiteIf(bool b) { return b ? RepType::kFinite : RepType::kInfinite; }

}  // namespace

RepType repTypeB(int n, const Order& e, const ParamSpec& spec) {
  requirePositive(n);
  if (e.isFinite() && e.value() < 3) throw DomainError("out of scope: q = ±1 (e = 1 or 2) is not handled");
  if (std::holds_alternative<Generic>(spec)) return finiteIf(e.isInfinite() || n < 2 * e.value());
  const Params p = normalizeParams(e, std::get<Charge>(spec).f0);
  const int bound = 2 * p.f + 4;
  return finiteIf(n < (e.isFinite() ? std::min(e.value(), bound) : bound));
}

RepType repTypeA(int n, const Order& e) {
  requirePositive(n);
  if (e.isFinite() && e.value() < 2) throw DomainError("type A needs q != 1 (e >= 2)");
  return finiteIf(e.isInfinite() || n < 2 * e.value());
}

UnoWitness unoConjectureWitness(const Order& e, int n) {
  requirePositive(n);
  if (e.isInfinite() || e.value() % 2 != 0) throw DomainError("the window needs an even finite e");
  if (e.value() < 4) throw DomainError("out of scope: q = ±1 (e = 1 or 2) is not handled");
  UnoWitness w;
  w.e = e.value();
  w.f = w.e / 2 - 1;
  w.n = n;
  w.inWindow = w.f + 1 <= n && n < w.e;
  w.typeB = repTypeB(n, e, Charge{w.f});
  const std::string window = std::to_string(w.f + 1) + " <= " + std::to_string(n) + " < " + std::to_string(w.e);
  if (w.inWindow)
    w.narrative = "inside the window " + window + ": finite type, not semisimple";
  else if (n >= w.e)
    w.narrative = "outside the window: n >= e gives infinite type";
  else
    w.narrative = "outside the window: n < e/2 lies on the semisimple side";
  return w;
}

}  // namespace hecke
