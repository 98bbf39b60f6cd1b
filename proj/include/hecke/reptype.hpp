#pragma once

// Finite versus infinite representation type as closed-form predicates.

#include "hecke/core.hpp"

#include <string>
#include <variant>

namespace hecke {

enum class RepType { kFinite, kInfinite };

std::string toString(RepType t);

/// Q generic relative to q.
struct Generic {};
/// Q = -q^f0, renormalized to the charge min(f0, e - f0).
struct Charge {
  int f0 = 0;
};
using ParamSpec = std::variant<Generic, Charge>;

/// Type B: generic Q is finite iff n < 2e; a charge is finite iff
/// n < min(e, 2f + 4). Rejects n < 1 and e in {1, 2}.
RepType repTypeB(int n, const Order& e, const ParamSpec& spec);

/// Type A: finite iff n < 2e. Accepts e >= 2 (q != 1).
RepType repTypeA(int n, const Order& e);

struct UnoWitness {
  int e = 0;
  int f = 0;  // e/2 - 1
  int n = 0;
  bool inWindow = false;  // e/2 <= n < e
  RepType typeB = RepType::kFinite;
  std::string narrative;
};

/// Checks the window e/2 = f + 1 <= n < e for f = e/2 - 1. Needs an even finite e >= 4.
UnoWitness unoConjectureWitness(const Order& e, int n);

}  // namespace hecke
