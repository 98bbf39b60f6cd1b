// Acceptance gate: one PASS/FAIL line per criterion. Expected values are
// transcribed here independently of the library's fixture tables.

#include "oracles.hpp"

#include "hecke/core.hpp"
#include "hecke/decomp.hpp"
#include "hecke/fock.hpp"
#include "hecke/jantzen.hpp"
#include "hecke/kleshchev.hpp"
#include "hecke/maya.hpp"
#include "hecke/reptype.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hecke;

namespace {

// ---------------------------------------------------------------- helpers

struct Report {
  bool ok = true;
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    ok = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

Params P(int e, int f) { return Params::make(e < 0 ? Order::infinite() : Order::finite(e), f); }

std::vector<int> repeat(int value, int times) { return std::vector<int>(std::max(times, 0), value); }

Partition part(std::vector<int> head, std::vector<int> tail = {}) {
  std::vector<int> p;
  for (int x : head)
    if (x > 0) p.push_back(x);
  for (int x : tail)
    if (x > 0) p.push_back(x);
  return Partition(p);
}

/// (a, 1^b)
Partition hook(int a, int b) { return a == 0 ? Partition{} : part({a}, repeat(1, b)); }

Bipartition bp(Partition a, Partition b) { return {std::move(a), std::move(b)}; }

// Families of the n = e block.
Bipartition lam(int e, int k) { return bp(Partition{}, hook(k, e - k)); }
Bipartition mu(int e, int k) { return bp(hook(k, e - k), Partition{}); }
Bipartition lamKL(int e, int f, int k, int l) { return bp(hook(f - l, e - f - k), hook(k, l)); }

using Word = std::vector<std::pair<int, int>>;  // (residue, divided power), written left to right

/// Increasing run F_a F_{a+1} ... F_b (empty when a > b).
Word up(int a, int b) {
  Word w;
  for (int i = a; i <= b; ++i) w.push_back({i, 1});
  return w;
}

/// Decreasing run F_a F_{a-1} ... F_b (empty when a < b).
Word down(int a, int b) {
  Word w;
  for (int i = a; i >= b; --i) w.push_back({i, 1});
  return w;
}

Word cat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

FWord toFWord(const Word& w, const Params& p) {
  FWord out;
  for (auto [r, m] : w) out.push_back({p.reduce(r), m});
  return out;
}

FockVector product(const Word& w, const Params& p) { return fProduct(toFWord(w, p), p); }

using Terms = std::vector<std::pair<Bipartition, int>>;  // (bipartition, power of v), coefficient 1

FockVector vec(const Terms& terms) {
  FockVector u;
  for (const auto& [b, k] : terms) u.add(b, LaurentPoly::monomial(k));
  return u;
}

std::string describe(const Word& w, const Params& p) {
  return toString(toFWord(w, p)) + " at e=" + p.e.toString() + " f=" + std::to_string(p.f);
}

/// Bipartitions of n whose residues are exactly `res` (sorted), by direct cell walk.
std::vector<Bipartition> blockByCells(int n, std::vector<int> res, const Params& p) {
  std::sort(res.begin(), res.end());
  std::vector<Bipartition> out;
  for (const auto& b : oracle::bipartitions(n)) {
    std::vector<int> r;
    for (const auto& [i, j, k] : oracle::cells(b)) r.push_back(oracle::residue(i, j, k, p));
    std::sort(r.begin(), r.end());
    if (r == res) out.push_back(b);
  }
  return out;
}

std::vector<std::vector<Bipartition>> blocksByCells(int n, const Params& p) {
  std::map<std::vector<int>, std::vector<Bipartition>> groups;
  for (const auto& b : oracle::bipartitions(n)) {
    std::vector<int> r;
    for (const auto& [i, j, k] : oracle::cells(b)) r.push_back(oracle::residue(i, j, k, p));
    std::sort(r.begin(), r.end());
    groups[r].push_back(b);
  }
  std::vector<std::vector<Bipartition>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  return out;
}

/// Sorts a dominance chain least dominant first; nullopt if not a chain.
std::optional<std::vector<Bipartition>> asChain(std::vector<Bipartition> members) {
  std::sort(members.begin(), members.end(), [](const Bipartition& a, const Bipartition& b) {
    return oracle::strictlyDominates(b, a);
  });
  for (std::size_t i = 1; i < members.size(); ++i)
    if (!oracle::strictlyDominates(members[i], members[i - 1])) return std::nullopt;
  return members;
}

bool inRegime(int n, int e, int f) { return n < std::min(e, 2 * f + 4); }

// ---------------------------------------------------------------- criterion 1

Report fockFixtures() {
  Report r;
  auto check = [&](const Word& w, const Params& p, const Terms& expected) {
    r.expect(product(w, p) == vec(expected), describe(w, p));
  };
  // The outer F_{f-l} applied to a displayed two-term bracket.
  auto checkBracket = [&](const Word& w, const Params& p, int outer, const Terms& bracket) {
    const auto expected = applyF(vec(bracket), p.reduce(outer), p);
    r.expect(product(w, p) == expected, describe(w, p));
  };

  for (int e : {5, 6, 7}) {
    // f = 0, e > 4: the six-member block at n = 4.
    {
      const auto p = P(e, 0);
      const Bipartition l1 = bp({}, part({2, 2})), l2 = bp(part({1}), part({2, 1})),
                        l3 = bp(part({1, 1}), part({2})), l4 = bp(part({2}), part({1, 1})),
                        l5 = bp(part({2, 1}), part({1})), l6 = bp(part({2, 2}), {});
      check({{0, 1}, {1, 1}, {e - 1, 1}, {0, 1}}, p, {{l1, 0}, {l2, 1}, {l5, 1}, {l6, 2}});
      check({{1, 1}, {e - 1, 1}, {0, 2}}, p, {{l2, 0}, {l4, 1}, {l3, 1}, {l5, 2}});
      // intermediate lines
      check({{1, 1}, {e - 1, 1}, {0, 1}}, p, {{bp({}, part({2, 1})), 0}, {bp(part({2, 1}), {}), 1}});
      check({{e - 1, 1}, {0, 2}}, p, {{bp(part({1}), part({1, 1})), 0}, {bp(part({1, 1}), part({1})), 1}});
    }

    // f >= 1, e > 2f + 4: the block of ((2,2),(2^f)).
    for (int f = 1; 2 * f + 4 < e; ++f) {
      const auto p = P(e, f);
      const Word w = cat({up(1, f + 1), {{e - 1, 1}, {0, 2}}, up(1, f)});
      check(w, p,
            {{bp(part({1}), part(repeat(2, f + 1), {1})), 0},
             {bp(part({2}), part(repeat(2, f), {1, 1})), 1},
             {bp(part({1, 1}), part(repeat(2, f + 1))), 1},
             {bp(part({2, 1}), part(repeat(2, f), {1})), 2}});
      check(cat({{{e - 1, 1}, {0, 2}}, up(1, f)}), p,
            {{bp(part({1}), part(repeat(1, f + 2))), 0}, {bp(part({1, 1}), part(repeat(1, f + 1))), 1}});
    }

    // f >= 1, n = e.
    for (int f = 1; 2 * f <= e; ++f) {
      const auto p = P(e, f);
      for (int k = 1; k <= e - f; ++k) {
        const Word w = cat({up(f + k, e - 1), {{0, 1}}, down(f + k - 1, f + 1), up(1, f)});
        r.expect(product(cat({down(f + k - 1, f + 1), up(1, f)}), p) == vec({{bp({}, hook(k, f - 1)), 0}}),
                 describe(w, p) + " (inner)");
        if (k < e - f)
          check(w, p, {{lam(e, k), 0}, {lam(e, k + 1), 1}, {lamKL(e, f, k + 1, f - 1), 1}, {lamKL(e, f, k, f - 1), 2}});
        else
          check(w, p, {{lam(e, e - f), 0}, {lam(e, e - f + 1), 1}, {lamKL(e, f, e - f, f - 1), 2}});
      }
      for (int k = e - f + 1; k < e; ++k) {
        const int s = k - e + f;
        const Word w = cat({up(s, f - 1), down(s - 1, 0), down(e - 1, f)});
        check(w, p, {{lam(e, k), 0}, {lam(e, k + 1), 1}, {lamKL(e, f, e - f, e - k), 1}, {lamKL(e, f, e - f, e - k - 1), 2}});
        check(cat({down(s - 1, 0), down(e - 1, f)}), p, {{bp({}, part({k})), 0}, {bp(part({s}), part({e - f})), 1}});
      }
      for (int k = 1; k <= e - f; ++k) {
        const Word w = cat({down(f + k - 1, f), up(f + k, e - 1), down(f - 1, 0)});
        if (k != 1)
          check(w, p, {{lamKL(e, f, k, 0), 0}, {lamKL(e, f, k - 1, 0), 1}, {mu(e, f + k - 1), 1}, {mu(e, f + k), 2}});
        else
          check(w, p, {{lamKL(e, f, 1, 0), 0}, {mu(e, f), 1}, {mu(e, f + 1), 2}});
        check(cat({up(f + k, e - 1), down(f - 1, 0)}), p, {{bp(hook(f, e - f - k), {}), 0}});
      }
      for (int l = 1; l < f; ++l) {
        for (int k = 2; k <= e - f; ++k) {
          const Word w = cat({up(f - l, f - 1), down(f + k - 1, f), up(f + k, e - 1), down(f - l - 1, 0)});
          checkBracket(w, p, f - l,
                       {{bp(hook(f - l, e - f - k), hook(k, l - 1)), 0},
                        {bp(hook(f - l, e - f - k + 1), hook(k - 1, l - 1)), 1}});
          check(cat({up(f + k, e - 1), down(f - l - 1, 0)}), p, {{bp(hook(f - l, e - f - k), {}), 0}});
        }
        const Word w = cat({up(f - l, f - 1), {{f, 1}}, up(f + 1, e - 1), down(f - l - 1, 0)});
        checkBracket(w, p, f - l,
                     {{bp(hook(f - l, e - f - 1), part(repeat(1, l))), 0},
                      {bp(hook(f - l, e - f + l - 1), {}), 1}});
        check(cat({up(f + 1, e - 1), down(f - l - 1, 0)}), p, {{bp(hook(f - l, e - f - 1), {}), 0}});
        check(cat({{{f, 1}}, up(f + 1, e - 1), down(f - l - 1, 0)}), p,
              {{bp(hook(f - l, e - f - 1), part({1})), 0}, {bp(hook(f - l, e - f), {}), 1}});
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------- criterion 2

using Table = std::vector<std::vector<int>>;

/// Regenerates a table from candidates; -1 marks a column with no word.
Report compareTable(const std::string& name, const Params& p, const std::vector<Bipartition>& rows,
                    const std::vector<Bipartition>& cols, const std::vector<std::optional<Word>>& words,
                    const Table& expected) {
  Report r;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::map<Bipartition, int> column;
    if (words[j]) {
      const auto c = asCanonicalCandidate(product(*words[j], p));
      r.expect(c.has_value(), name + ": column " + toString(cols[j]) + " word is not a candidate");
      if (!c) continue;
      r.expect(c->leader == cols[j], name + ": column " + toString(cols[j]) + " led by " + toString(c->leader));
      column = decompColumn(*c);
    } else {
      // Unitriangularity: only the diagonal among rows not dominating the label.
      for (const auto& row : rows) {
        if (row == cols[j]) column[row] = 1;
        r.expect(row == cols[j] || !oracle::dominates(row, cols[j]),
                 name + ": unitriangular fill needs the label to dominate its rows");
      }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int got = column.contains(rows[i]) ? column.at(rows[i]) : 0;
      r.expect(got == expected[i][j], name + ": cell (" + toString(rows[i]) + ", " + toString(cols[j]) + ") = " +
                                          std::to_string(got) + ", printed " + std::to_string(expected[i][j]));
    }
  }
  return r;
}

/// All F-words (with adjacent equal letters merged into divided powers) over a residue multiset.
std::vector<Word> wordsOver(std::vector<int> residues) {
  std::sort(residues.begin(), residues.end());
  std::vector<Word> out;
  do {
    // every way of cutting runs of equal letters
    std::function<void(std::size_t, Word)> rec = [&](std::size_t i, Word w) {
      if (i == residues.size()) {
        out.push_back(w);
        return;
      }
      std::size_t j = i;
      while (j < residues.size() && residues[j] == residues[i]) ++j;
      for (std::size_t m = 1; m <= j - i; ++m) {
        // a run merged into the previous letter would duplicate a split; forbid equal neighbours
        if (!w.empty() && w.back().first == residues[i]) break;
        Word x = w;
        x.push_back({residues[i], static_cast<int>(m)});
        rec(i + m, x);
      }
    };
    rec(0, {});
  } while (std::next_permutation(residues.begin(), residues.end()));
  return out;
}

Report decompFixtures() {
  Report total;
  auto merge = [&](const Report& r) {
    total.ok = total.ok && r.ok;
    total.checks += r.checks;
    for (const auto& f : r.failures)
      if (total.failures.size() < 5) total.failures.push_back(f);
  };

  {  // n = e, e = 5, f = 2
    const int e = 5, f = 2;
    const auto p = P(e, f);
    const std::vector<Bipartition> rows{lam(e, 1), lam(e, 2), lamKL(e, f, 2, f - 1), lamKL(e, f, 1, f - 1)};
    const std::vector<Bipartition> cols{lam(e, 1), lam(e, 2), lamKL(e, f, 3, f - 1), lamKL(e, f, 2, f - 1),
                                        lamKL(e, f, 1, f - 1)};
    auto lamWord = [&](int k) { return cat({up(f + k, e - 1), {{0, 1}}, down(f + k - 1, f + 1), up(1, f)}); };
    auto klWord = [&](int k, int l) {
      return cat({up(f - l, f - 1), down(f + k - 1, f), up(f + k, e - 1), down(f - l - 1, 0)});
    };
    const Word oneL = cat({up(f - 1, f - 1), {{f, 1}}, up(f + 1, e - 1), down(f - 2, 0)});
    const Table printed{{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 1, 1, 1, 0}, {1, 0, 0, 1, 1}};
    merge(compareTable("n=e", p, rows, cols, {lamWord(1), lamWord(2), klWord(3, 1), klWord(2, 1), oneL}, printed));
  }
  {  // f = 0, e = 5, n = 4: printed transposed
    const int e = 5;
    const auto p = P(e, 0);
    const std::vector<Bipartition> rows{bp({}, part({2, 2})),      bp(part({1}), part({2, 1})),
                                        bp(part({1, 1}), part({2})), bp(part({2}), part({1, 1})),
                                        bp(part({2, 1}), part({1})), bp(part({2, 2}), {})};
    const std::vector<Bipartition> cols{rows[0], rows[1]};
    const Table transposed{{1, 1, 0, 0, 1, 1}, {0, 1, 1, 1, 1, 0}};
    Table printed(rows.size(), std::vector<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) printed[i][j] = transposed[j][i];
    merge(compareTable("f=0 n=4", p, rows, cols,
                       {Word{{0, 1}, {1, 1}, {e - 1, 1}, {0, 1}}, Word{{1, 1}, {e - 1, 1}, {0, 2}}}, printed));
  }
  {  // f = 1, e = 7, n = 6
    const int e = 7, f = 1;
    const auto p = P(e, f);
    const std::vector<Bipartition> labels{bp({}, part(repeat(2, f + 2))), bp(part({1}), part(repeat(2, f + 1), {1})),
                                          bp(part({1, 1}), part(repeat(2, f + 1))),
                                          bp(part({2}), part(repeat(2, f), {1, 1})),
                                          bp(part({2, 1}), part(repeat(2, f), {1}))};
    const Table printed{{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 1, 1, 1, 1}};
    const Word w1 = cat({up(0, f + 1), {{e - 1, 1}}, up(0, f)});
    const Word w2 = cat({up(1, f + 1), {{e - 1, 1}, {0, 2}}, up(1, f)});
    const Word w3 = cat({up(1, f + 1), up(0, f), {{e - 1, 1}, {0, 1}}});
    const Word w4 = cat({{{e - 1, 1}}, up(2, f + 1), {{0, 1}, {1, 2}}, up(2, f), {{0, 1}}});
    // No word is printed for the last column; search for one over the block's residues.
    std::optional<Word> w5;
    std::vector<int> res{-1, 0, 0, f + 1};
    for (int i = 1; i <= f; ++i) res.insert(res.end(), {i, i});
    for (const auto& w : wordsOver(res))
      if (const auto c = asCanonicalCandidate(product(w, p)); c && c->leader == labels[4]) {
        w5 = w;
        break;
      }
    merge(compareTable("2f+4", p, labels, labels, {w1, w2, w3, w4, w5}, printed));
  }
  return total;
}

// ---------------------------------------------------------------- criterion 3

Report kleshchevCensus() {
  Report r;
  auto kleshchevIn = [](const std::vector<Bipartition>& members, const Params& p) {
    std::set<Bipartition> out;
    for (const auto& b : members)
      if (isKleshchev(b, p).kleshchev) out.insert(b);
    return out;
  };
  for (int e : {5, 6, 7}) {
    std::vector<int> all(e);
    for (int i = 0; i < e; ++i) all[i] = i;
    for (int f = 0; 2 * f <= e; ++f) {
      const auto p = P(e, f);
      std::set<Bipartition> expected;
      for (int k = 1; k < e; ++k) expected.insert(lam(e, k));
      if (f > 0)
        for (int k = 1; k <= e - f; ++k)
          for (int l = 0; l < f; ++l) expected.insert(lamKL(e, f, k, l));
      r.expect(kleshchevIn(blockByCells(e, all, p), p) == expected,
               "n=e Kleshchev list at e=" + std::to_string(e) + " f=" + std::to_string(f));
    }
    // f = 0, residues {-1, 0, 0, 1}
    const auto p = P(e, 0);
    const auto six = blockByCells(4, {e - 1, 0, 0, 1}, p);
    const std::set<Bipartition> expectedSix{bp({}, part({2, 2})),      bp(part({1}), part({2, 1})),
                                            bp(part({1, 1}), part({2})), bp(part({2}), part({1, 1})),
                                            bp(part({2, 1}), part({1})), bp(part({2, 2}), {})};
    r.expect(std::set<Bipartition>(six.begin(), six.end()) == expectedSix, "six-member block at e=" + std::to_string(e));
    r.expect(kleshchevIn(six, p) == std::set<Bipartition>{bp({}, part({2, 2})), bp(part({1}), part({2, 1}))},
             "only two Kleshchev in the six-member block at e=" + std::to_string(e));
  }
  for (int e : {7, 11})
    for (int f : {1, 2}) {
      const auto p = P(e, f);
      for (int n = 1; n <= 5 && inRegime(n, e, f); ++n)
        for (const auto& members : blocksByCells(n, p)) {
          if (members.size() == 1) continue;
          const auto chain = asChain(members);
          r.expect(chain.has_value(), "block is not a dominance chain");
          if (!chain) continue;
          for (std::size_t i = 0; i < chain->size(); ++i)
            r.expect(isKleshchev((*chain)[i], p).kleshchev == (i + 1 < chain->size()),
                     "chain member " + toString((*chain)[i]) + " at e=" + std::to_string(e) + " f=" + std::to_string(f));
        }
    }
  return r;
}

// ---------------------------------------------------------------- criterion 4

Report repTypeTable() {
  Report r;
  std::vector<std::optional<int>> orders{std::nullopt};
  for (int e = 3; e <= 12; ++e) orders.push_back(e);
  for (const auto& e : orders) {
    const Order order = e ? Order::finite(*e) : Order::infinite();
    const int maxF = e ? *e / 2 : 7;
    for (int f = 0; f <= maxF; ++f) {
      const int bound = e ? std::min(*e, 2 * f + 4) : 2 * f + 4;
      std::optional<int> flip;
      for (int n = 1; n <= 14; ++n) {
        const auto got = repTypeB(n, order, Charge{f});
        r.expect(got == (n < bound ? RepType::kFinite : RepType::kInfinite),
                 "e=" + order.toString() + " f=" + std::to_string(f) + " n=" + std::to_string(n));
        if (!flip && got == RepType::kInfinite) flip = n;
      }
      if (bound <= 14) r.expect(flip == bound, "flip point at e=" + order.toString() + " f=" + std::to_string(f));
    }
    for (int n = 1; n <= 14; ++n) {
      const bool finite = !e || n < 2 * *e;
      r.expect(repTypeB(n, order, Generic{}) == (finite ? RepType::kFinite : RepType::kInfinite),
               "generic e=" + order.toString() + " n=" + std::to_string(n));
    }
  }
  return r;
}

// ---------------------------------------------------------------- criterion 5

Report jantzenIdentity() {
  Report r;
  for (int e : {7, 11})
    for (int f : {1, 2}) {
      const auto p = P(e, f);
      for (int n = 1; n <= 5 && inRegime(n, e, f); ++n)
        for (const auto& members : blocksByCells(n, p)) {
          const auto chain = asChain(members);
          r.expect(chain.has_value(), "block is not a dominance chain");
          if (!chain) continue;
          for (std::size_t i = 0; i < chain->size(); ++i) {
            SpechtCombination expected;
            for (std::size_t j = 0; j < i; ++j) expected[(*chain)[j]] = (i - 1 - j) % 2 == 0 ? 1 : -1;
            r.expect(jantzenSum((*chain)[i], p) == expected,
                     "sum for " + toString((*chain)[i]) + " at e=" + std::to_string(e) + " f=" + std::to_string(f));
          }
        }
    }
  return r;
}

// ---------------------------------------------------------------- criterion 6

/// Bit of the path sequence: 0 exactly at positions lambda_i - i + 1.
int pathBit(const std::vector<int>& parts, int t) {
  for (int i = 1; i <= static_cast<int>(parts.size()) + 1 - std::min(t, 0) + 1; ++i) {
    const int li = i <= static_cast<int>(parts.size()) ? parts[i - 1] : 0;
    if (li - i + 1 == t) return 0;
  }
  return 1;
}

struct Counts {
  int al = 0, am = 0, ar = 0, bl = 0, bm = 0, br = 0, cm = 0, cr = 0, dl = 0, dm = 0;
};

Counts countColumns(const Bipartition& b, int f) {
  const auto& p = b.first.parts;
  const auto& s = b.second.parts;
  const int reach = b.size() + f + 4;
  Counts c;
  for (int t = -reach; t <= reach; ++t) {
    const int x = pathBit(p, t), y = pathBit(s, t - f);
    const int region = t <= 0 ? 0 : (t <= f ? 1 : 2);
    const bool A = x == 0 && y == 1, B = x == 1 && y == 0, C = x == 0 && y == 0, D = x == 1 && y == 1;
    if (region == 0) {
      c.al += A, c.bl += B, c.dl += D;
    } else if (region == 1) {
      c.am += A, c.bm += B, c.cm += C, c.dm += D;
    } else {
      c.ar += A, c.br += B, c.cr += C;
    }
  }
  return c;
}

Report mayaSuite() {
  Report r;
  for (int f = 0; f <= 3; ++f) {
    const auto p = P(-1, f);
    for (int n = 0; n <= 9; ++n)
      for (const auto& b : oracle::bipartitions(n)) {
        const auto s = bipartitionToBiPath(b, p);
        r.expect(biPathToBipartition(s) == b, "round trip " + toString(b));
        r.expect(hookCount(s.top) + hookCount(s.bottom) == n, "hook count " + toString(b));
        r.expect(contentCounts(s.top) == oracle::contentCounts(b.first.parts) &&
                     contentCounts(s.bottom) == oracle::contentCounts(b.second.parts),
                 "content counts " + toString(b));
        for (int t = -n - 2; t <= n + f + 2; ++t)
          r.expect(s.column(t) == std::pair<int, int>{pathBit(b.first.parts, t), pathBit(b.second.parts, t - f)},
                   "column " + std::to_string(t) + " of " + toString(b));

        const auto c = countColumns(b, f);
        const auto rc = regionCounts(s);
        r.expect(rc == RegionCounts{c.al, c.am, c.ar, c.bl, c.bm, c.br, c.cm, c.cr, c.dl, c.dm},
                 "region counts " + toString(b));
        r.expect(c.bl + c.dl == c.am + c.cm + c.ar + c.cr, "left balance " + toString(b));
        r.expect(c.br + c.cr == c.al + c.dl + c.am + c.dm, "right balance " + toString(b));
        r.expect(f == c.am + c.bm + c.cm + c.dm, "middle width " + toString(b));
        r.expect(c.bl + c.bm + c.br == f + c.al + c.am + c.ar, "b count " + toString(b));
        const auto ids = checkIdentities(rc, p, n);
        if (n <= 2 * f + 3) {
          const int rhs = (c.bl + c.dl) * (c.am + c.cm + c.ar + c.cr) + (c.al + c.dl + c.am + c.dm) * (c.br + c.cr) +
                          (c.bm + c.dm) * (c.ar + c.cr) + (c.al + c.dl) * (c.bm + c.cm) + c.al * c.bl + c.am * c.bm +
                          c.ar * c.br;
          r.expect(2 * f + 3 >= rhs, "hook bound " + toString(b));
          r.expect(c.al + c.am + c.ar <= 1, "single A " + toString(b));
        }
        for (const auto& id : ids)
          if (id.evaluated) r.expect(id.holds, id.name + " reported failing for " + toString(b));
      }
  }
  for (int f = 0; f <= 2; ++f) {
    bool found = false;
    for (const auto& b : oracle::bipartitions(2 * f + 4)) {
      const auto c = countColumns(b, f);
      found = found || c.al + c.am + c.ar > 1;
    }
    r.expect(found, "no bipartition with two A's at n=2f+4, f=" + std::to_string(f));
  }
  // Worked two-row example.
  const auto example = bipartitionToBiPath(bp(part({4, 2, 1}), part({2, 2, 1})), P(-1, 2)).render();
  r.expect(example == "...000101|01|1011...\n...000001|01|0011...", "two-row display:\n" + example);
  return r;
}

// ---------------------------------------------------------------- criterion 7

Report crossModule() {
  Report r;
  int candidatesSeen = 0;
  for (int e : {7, 11})
    for (int f : {1, 2}) {
      const auto p = P(e, f);
      for (int n = 1; n <= 5 && inRegime(n, e, f); ++n)
        for (const auto& blk : blocks(n, p)) {
          const int size = static_cast<int>(blk.members.size());
          r.expect(size == 1 || size == f + 2 || size == e - f + 2, "census value " + std::to_string(size));
          try {
            (void)classifyBlock(blk);
            const auto m = decompositionMatrix(blk);
            std::set<Bipartition> seen;
            for (const auto& w : wordsOver(blk.residue)) {
              const auto c = asCanonicalCandidate(product(w, p));
              if (!c || !seen.insert(c->leader).second) continue;
              ++candidatesSeen;
              const auto col = std::find(m.cols.begin(), m.cols.end(), c->leader);
              r.expect(col != m.cols.end(), "candidate leader " + toString(c->leader) + " is not a column");
              if (col == m.cols.end()) continue;
              const auto j = static_cast<std::size_t>(col - m.cols.begin());
              const auto d = decompColumn(*c);
              for (std::size_t i = 0; i < m.rows.size(); ++i) {
                const int want = d.contains(m.rows[i]) ? d.at(m.rows[i]) : 0;
                r.expect(m.entries[i][j] == want, "column " + toString(c->leader) + " row " + toString(m.rows[i]));
              }
            }
          } catch (const std::exception& ex) {
            r.expect(false, std::string("classification error: ") + ex.what());
          }
        }
    }
  r.expect(candidatesSeen > 0, "no canonical candidates found");
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Report()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Fock expansions", fockFixtures},
      {2, "decomposition tables", decompFixtures},
      {3, "Kleshchev census", kleshchevCensus},
      {4, "representation-type truth table", repTypeTable},
      {5, "Jantzen alternating sums", jantzenIdentity},
      {6, "path-sequence properties", mayaSuite},
      {7, "cross-module consistency", crossModule},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Report rep;
    try {
      rep = c.run();
    } catch (const std::exception& ex) {
      rep.ok = false;
      rep.failures.push_back(std::string("exception: ") + ex.what());
    }
    std::cout << (rep.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << rep.checks
              << " checks)\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    all = all && rep.ok;
  }
  return all ? 0 : 1;
}
