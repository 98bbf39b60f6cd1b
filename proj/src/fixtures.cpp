#include "hecke/fixtures.hpp"

#include "hecke/decomp.hpp"
#include "hecke/jantzen.hpp"
#include "hecke/kleshchev.hpp"
#include "hecke/maya.hpp"
#include "hecke/reptype.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hecke {

namespace family {

namespace {

Partition hook(int arm, int legs) {
  if (arm == 0) return Partition{};
  std::vector<int> parts{arm};
  parts.insert(parts.end(), legs, 1);
  return Partition(parts);
}

Partition twos(int count, std::vector<int> tail = {}) {
  std::vector<int> parts(count, 2);
  parts.insert(parts.end(), tail.begin(), tail.end());
  return Partition(parts);
}

}  // namespace

Bipartition lambdaK(int e, int k) { return {Partition{}, hook(k, e - k)}; }
Bipartition muK(int e, int k) { return {hook(k, e - k), Partition{}}; }
Bipartition lambdaKL(int e, int f, int k, int l) { return {hook(f - l, e - f - k), hook(k, l)}; }

std::vector<Bipartition> fZeroSix() {
  return {parseBipartition("|2,2"),  parseBipartition("1|2,1"), parseBipartition("1,1|2"),
          parseBipartition("2|1,1"), parseBipartition("2,1|1"), parseBipartition("2,2|")};
}

std::vector<Bipartition> chargeFive(int f) {
  return {
      {Partition{}, twos(f + 2)},
      {Partition({1}), twos(f + 1, {1})},
      {Partition({1, 1}), twos(f + 1)},
      {Partition({2}), twos(f, {1, 1})},
      {Partition({2, 1}), twos(f, {1})},
  };
}

}  // namespace family

namespace {

struct Word {
  explicit Word(const Params& params) : p(params) {}

  Word& asc(int a, int b) {
    for (int i = a; i <= b; ++i) w.push_back({p.reduce(i), 1});
    return *this;
  }
  Word& desc(int b, int a) {
    for (int i = b; i >= a; --i) w.push_back({p.reduce(i), 1});
    return *this;
  }
  Word& f(int i, int power = 1) {
    w.push_back({p.reduce(i), power});
    return *this;
  }
  operator FWord() const { return w; }  // NOLINT(google-explicit-constructor)

  const Params& p;
  FWord w;
};

const LaurentPoly kOne(1);
const LaurentPoly kV = LaurentPoly::monomial(1);
const LaurentPoly kV2 = LaurentPoly::monomial(2);

std::string describe(const std::vector<std::pair<Bipartition, LaurentPoly>>& terms) {
  FockVector u;
  for (const auto& [b, c] : terms) u.add(b, c);
  return u.toString();
}

}  // namespace

DisplayResult checkDisplay(const Display& d, const Params& p) {
  const FockVector u = fProduct(d.word, p);
  const std::string got = "F-product " + toString(d.word) + " = " + u.toString();
  auto fail = [&](const std::string& why) { return DisplayResult{false, why + "; " + got}; };

  if (d.mode == Display::Mode::kExact) {
    FockVector expected;
    for (const auto& [b, c] : d.terms) expected.add(b, c);
    if (u != expected) return fail("expected " + expected.toString());
    return {true, got};
  }

  const auto cand = asCanonicalCandidate(u);
  if (!cand) return fail("not a canonical candidate");
  if (cand->leader != d.terms.front().first)
    return fail("leader " + toString(cand->leader) + ", expected " + toString(d.terms.front().first));

  if (d.mode == Display::Mode::kLeading) {
    for (const auto& [b, c] : d.terms)
      if (u.coeff(b) != c) return fail("coefficient of " + toString(b) + " should be " + c.toString());
    return {true, got};
  }

  std::map<Bipartition, int> expected;
  for (const auto& [b, c] : d.terms) expected[b] += static_cast<int>(c.evaluateAtOne());
  if (decompColumn(*cand) != expected) return fail("column should be " + describe(d.terms) + " at v = 1");
  return {true, got};
}

std::vector<Display> nEqualsEDisplays(const Params& p) {
  if (p.e.isInfinite()) throw DomainError("the n = e displays need a finite e");
  const int e = p.e.value();
  const int f = p.f;
  using family::lambdaK;
  using family::lambdaKL;
  using family::muK;
  using M = Display::Mode;
  std::vector<Display> out;
  auto name = [](const std::string& base, int k, int l = -1) {
    return base + "[k=" + std::to_string(k) + (l >= 0 ? ",l=" + std::to_string(l) : "") + "]";
  };

  if (f == 0) {
    for (int k = 1; k < e; ++k)
      out.push_back({name("lambda_k", k), Word(p).asc(k, e - 1).desc(k - 1, 0), M::kColumn,
                     {{lambdaK(e, k), kOne}, {lambdaK(e, k + 1), kOne}, {muK(e, k), kOne}, {muK(e, k + 1), kOne}}});
    return out;
  }

  for (int k = 1; k <= e - f; ++k) {
    Display d{name("lambda_k", k), Word(p).asc(f + k, e - 1).f(0).desc(f + k - 1, f + 1).asc(1, f), M::kExact, {}};
    if (k < e - f)
      d.terms = {{lambdaK(e, k), kOne},
                 {lambdaK(e, k + 1), kV},
                 {lambdaKL(e, f, k + 1, f - 1), kV},
                 {lambdaKL(e, f, k, f - 1), kV2}};
    else
      d.terms = {{lambdaK(e, k), kOne}, {lambdaK(e, k + 1), kV}, {lambdaKL(e, f, e - f, f - 1), kV2}};
    out.push_back(d);
  }
  for (int k = e - f + 1; k < e; ++k) {
    const int s = k - e + f;
    out.push_back({name("lambda_k", k), Word(p).asc(s, f - 1).desc(s - 1, 0).desc(e - 1, f + 1).f(f), M::kExact,
                   {{lambdaK(e, k), kOne},
                    {lambdaK(e, k + 1), kV},
                    {lambdaKL(e, f, e - f, e - k), kV},
                    {lambdaKL(e, f, e - f, e - k - 1), kV2}}});
  }
  for (int k = 1; k <= e - f; ++k) {
    Display d{name("lambda_kl", k, 0), Word(p).desc(f + k - 1, f).asc(f + k, e - 1).desc(f - 1, 0), M::kExact, {}};
    if (k != 1)
      d.terms = {{lambdaKL(e, f, k, 0), kOne},
                 {lambdaKL(e, f, k - 1, 0), kV},
                 {muK(e, f + k - 1), kV},
                 {muK(e, f + k), kV2}};
    else
      d.terms = {{lambdaKL(e, f, 1, 0), kOne}, {muK(e, f), kV}, {muK(e, f + 1), kV2}};
    out.push_back(d);
  }
  for (int l = 1; l < f; ++l) {
    for (int k = 2; k <= e - f; ++k)
      out.push_back({name("lambda_kl", k, l),
                     Word(p).asc(f - l, f - 1).desc(f + k - 1, f).asc(f + k, e - 1).desc(f - l - 1, 0), M::kColumn,
                     {{lambdaKL(e, f, k, l), kOne},
                      {lambdaKL(e, f, k, l - 1), kOne},
                      {lambdaKL(e, f, k - 1, l), kOne},
                      {lambdaKL(e, f, k - 1, l - 1), kOne}}});
    out.push_back({name("lambda_kl", 1, l), Word(p).asc(f - l, f - 1).f(f).asc(f + 1, e - 1).desc(f - l - 1, 0),
                   M::kColumn,
                   {{lambdaKL(e, f, 1, l), kOne},
                    {lambdaKL(e, f, 1, l - 1), kOne},
                    {muK(e, f - l), kOne},
                    {muK(e, f - l + 1), kOne}}});
  }
  return out;
}

std::vector<Display> twoFPlusFourDisplays(const Params& p) {
  using M = Display::Mode;
  const int f = p.f;
  if (p.e.isFinite() && p.e.value() <= 2 * f + 4) throw DomainError("the n = 2f+4 displays need e > 2f+4");
  if (f == 0) {
    const auto lam = family::fZeroSix();
    return {
        {"lambda_1", Word(p).f(0).f(1).f(-1).f(0), M::kExact,
         {{lam[0], kOne}, {lam[1], kV}, {lam[4], kV}, {lam[5], kV2}}},
        {"lambda_2", Word(p).f(1).f(-1).f(0, 2), M::kExact, {{lam[1], kOne}, {lam[3], kV}, {lam[2], kV}, {lam[4], kV2}}},
    };
  }
  const auto lam = family::chargeFive(f);
  return {
      {"lambda_1", Word(p).asc(0, f + 1).f(-1).asc(0, f), M::kLeading,
       {{lam[0], kOne}, {lam[1], kV}, {lam[4], kV}}},
      {"lambda_2", Word(p).asc(1, f + 1).f(-1).f(0, 2).asc(1, f), M::kExact,
       {{lam[1], kOne}, {lam[3], kV}, {lam[2], kV}, {lam[4], kV2}}},
      {"lambda_3", Word(p).asc(1, f + 1).asc(0, f).f(-1).f(0), M::kLeading, {{lam[2], kOne}, {lam[4], kV}}},
      {"lambda_4", Word(p).f(-1).asc(2, f + 1).f(0).f(1, 2).asc(2, f).f(0), M::kLeading,
       {{lam[3], kOne}, {lam[4], kV}}},
  };
}

std::vector<Bipartition> predictedKleshchevNEqualsE(const Params& p) {
  const int e = p.e.value();
  std::vector<Bipartition> out;
  for (int k = 1; k < e; ++k) out.push_back(family::lambdaK(e, k));
  for (int k = 1; k <= e - p.f; ++k)
    for (int l = 0; l < p.f; ++l) out.push_back(family::lambdaKL(e, p.f, k, l));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bipartition> computedKleshchevNEqualsE(const Params& p) {
  const int e = p.e.value();
  const auto blk = blockOf(family::lambdaK(e, 1), p);
  std::vector<Bipartition> out;
  for (const auto& b : blk.members)
    if (isKleshchev(b, p).kleshchev) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

// --- ledger ------------------------------------------------------------------

namespace {

struct Ledger {
  std::optional<std::string> only;
  std::vector<LedgerEntry> entries;

  bool wants(const std::string& group) const { return !only || *only == group; }

  void run(const std::string& group, const std::string& name, const std::function<DisplayResult()>& body) {
    if (!wants(group)) return;
    try {
      auto r = body();
      entries.push_back({group, name, r.pass, r.detail});
    } catch (const std::exception& ex) {
      entries.push_back({group, name, false, std::string("exception: ") + ex.what()});
    }
  }
  void check(const std::string& group, const std::string& name, const std::function<bool()>& body) {
    run(group, name, [&] { return DisplayResult{body(), ""}; });
  }
};

Params P(int e, int f) { return Params::make(e < 0 ? Order::infinite() : Order::finite(e), f); }
std::string label(int e, int f) { return "e=" + (e < 0 ? std::string("inf") : std::to_string(e)) + ",f=" + std::to_string(f); }

void coreGroup(Ledger& L) {
  L.check("CORE", "normalize e=10 f0=4 keeps f=4", [] { return normalizeParams(Order::finite(10), 4).f == 4; });
  L.check("CORE", "content of (1,1,2) at f=2 is 2", [] { return content(Node{1, 1, 2}, P(7, 2)) == 2; });
  L.check("CORE", "content of (3,1,1) at f=2 is -2", [] { return content(Node{3, 1, 1}, P(7, 2)) == -2; });
  L.check("CORE", "residues of |2,2 at e=5,f=0 are {-1,0,0,1}", [] {
    return residueMultiset(parseBipartition("|2,2"), P(5, 0)) == std::vector<Residue>{0, 0, 1, 4};
  });
}

void fockGroup(Ledger& L) {
  for (int e : {5, 6, 7})
    for (int f = 0; 2 * f <= e; ++f)
      for (const auto& d : nEqualsEDisplays(P(e, f)))
        L.run("FOCK", "n=e " + d.name + " " + label(e, f), [&] { return checkDisplay(d, P(e, f)); });
  for (auto [e, f] : std::vector<std::pair<int, int>>{{5, 0}, {6, 0}, {-1, 0}, {7, 1}, {8, 1}, {9, 2}, {-1, 1}, {-1, 2}})
    for (const auto& d : twoFPlusFourDisplays(P(e, f)))
      L.run("FOCK", "n=2f+4 " + d.name + " " + label(e, f), [&] { return checkDisplay(d, P(e, f)); });

  L.check("FOCK", "F0^(2) on the empty bipartition is 1|1 (e=5,f=0)", [] {
    return fProduct(parseWord("F0^2", P(5, 0)), P(5, 0)) == FockVector(parseBipartition("1|1"));
  });
  L.check("FOCK", "F0,F1,F4,F0 is a candidate led by |2,2 (e=5,f=0)", [] {
    auto c = asCanonicalCandidate(fProduct(parseWord("F0,F1,F4,F0", P(5, 0)), P(5, 0)));
    return c && c->leader == parseBipartition("|2,2");
  });
  L.check("FOCK", "column of |2,2 is {lambda_1,lambda_2,lambda_5,lambda_6} (e=5,f=0)", [] {
    auto c = asCanonicalCandidate(fProduct(parseWord("F0,F1,F4,F0", P(5, 0)), P(5, 0)));
    const auto lam = family::fZeroSix();
    return c && decompColumn(*c) == std::map<Bipartition, int>{{lam[0], 1}, {lam[1], 1}, {lam[4], 1}, {lam[5], 1}};
  });
  L.check("FOCK", "column of lambda_2 is {lambda_2,...,lambda_5} (e=7,f=1)", [] {
    const auto lam = family::chargeFive(1);
    auto c = asCanonicalCandidate(fProduct(twoFPlusFourDisplays(P(7, 1))[1].word, P(7, 1)));
    return c && decompColumn(*c) == std::map<Bipartition, int>{{lam[1], 1}, {lam[2], 1}, {lam[3], 1}, {lam[4], 1}};
  });
}

void matrixGroups(Ledger& L) {
  const std::vector<std::pair<FixtureTag, std::vector<std::pair<int, int>>>> runs = {
      {FixtureTag::kS4Case1, {{5, 2}, {6, 2}, {6, 3}, {7, 2}, {7, 3}}},
      {FixtureTag::kS4F0, {{5, 0}, {6, 0}, {7, 0}}},
      {FixtureTag::kS5Case1, {{5, 0}, {6, 0}, {-1, 0}}},
      {FixtureTag::kS5Case2, {{7, 1}, {8, 1}, {9, 2}, {-1, 1}, {-1, 2}}},
  };
  for (const auto& [tag, params] : runs)
    for (auto [e, f] : params)
      L.run(toString(tag), "decomposition table " + label(e, f), [&] {
        fixtureMatrices(tag, P(e, f));
        return DisplayResult{true, ""};
      });
}

void mayaGroup(Ledger& L) {
  L.check("MAYA", "path of 4,2,1", [] { return partitionToPath(Partition({4, 2, 1})).render() == "...00101|011011..."; });
  L.check("MAYA", "path of the empty partition", [] { return partitionToPath(Partition{}).render() == "...000|111..."; });
  L.check("MAYA", "hook count of 4,2,1 is 7", [] { return hookCount(partitionToPath(Partition({4, 2, 1}))) == 7; });
  L.check("MAYA", "two-row display of 4,2,1|2,2,1 at f=2", [] {
    return bipartitionToBiPath(parseBipartition("4,2,1|2,2,1"), P(7, 2)).render() ==
           "...000101|01|1011...\n...000001|01|0011...";
  });
  L.check("MAYA", "all identities hold for n <= 2f+3 (f <= 3, n <= 9)", [] {
    for (int f = 0; f <= 3; ++f)
      for (int n = 0; n <= std::min(2 * f + 3, 9); ++n)
        for (const auto& b : enumerateBipartitions(n))
          for (const auto& c : checkIdentities(regionCounts(bipartitionToBiPath(b, P(-1, f))), P(-1, f), n))
            if (!c.holds) return false;
    return true;
  });
  L.check("MAYA", "one-A families have f+2 members, A moving left is dominated", [] {
    for (int e : {5, 7})
      for (int f = 1; f <= 2; ++f)
        for (int n = 1; n < std::min(e, 2 * f + 4); ++n)
          for (const auto& blk : blocks(n, P(e, f))) {
            auto cls = classifyBlock(blk);
            if (cls.kind != BlockKind::kOneA || cls.caseTag != CaseTag::kCase1) continue;
            if (static_cast<int>(cls.family.size()) != f + 2) return false;
            for (std::size_t i = 1; i < cls.family.size(); ++i)
              if (!strictlyDominates(cls.family[i], cls.family[i - 1])) return false;
          }
    return true;
  });
}

void kleshchevGroup(Ledger& L) {
  L.check("KLESHCHEV", "|2,2 is Kleshchev (e=5,f=0)", [] { return isKleshchev(parseBipartition("|2,2"), P(5, 0)).kleshchev; });
  L.check("KLESHCHEV", "2,2| is not Kleshchev (e=5,f=0)", [] { return !isKleshchev(parseBipartition("2,2|"), P(5, 0)).kleshchev; });
  for (int e : {5, 6, 7})
    for (int f = 0; 2 * f <= e; ++f)
      L.check("KLESHCHEV", "n=e census " + label(e, f),
              [=] { return computedKleshchevNEqualsE(P(e, f)) == predictedKleshchevNEqualsE(P(e, f)); });
  L.check("KLESHCHEV", "only lambda_1 and lambda_2 of the six are Kleshchev (e=5,f=0)", [] {
    const auto lam = family::fZeroSix();
    for (std::size_t i = 0; i < lam.size(); ++i)
      if (isKleshchev(lam[i], P(5, 0)).kleshchev != (i < 2)) return false;
    return true;
  });
  L.check("KLESHCHEV", "lambda_1..lambda_5 are Kleshchev (e=7,f=1)", [] {
    for (const auto& b : family::chargeFive(1))
      if (!isKleshchev(b, P(7, 1)).kleshchev) return false;
    return true;
  });
  L.check("KLESHCHEV", "one-A families: all but the most dominant are Kleshchev", [] {
    for (int e : {5, 7})
      for (int f = 1; f <= 3 && 2 * f <= e; ++f)
        for (int n = 1; n < std::min(e, 2 * f + 4); ++n)
          for (const auto& blk : blocks(n, P(e, f))) {
            auto cls = classifyBlock(blk);
            if (cls.kind != BlockKind::kOneA || cls.caseTag != CaseTag::kCase1) continue;
            for (std::size_t i = 0; i < cls.family.size(); ++i)
              if (isKleshchev(cls.family[i], P(e, f)).kleshchev != (i + 1 < cls.family.size())) return false;
          }
    return true;
  });
}

void jantzenGroup(Ledger& L) {
  L.check("JANTZEN", "residue {-1,0,0,1} block has exactly six members (e=5,f=0)", [] {
    auto members = blockOf(parseBipartition("|2,2"), P(5, 0)).members;
    std::sort(members.begin(), members.end());
    auto six = family::fZeroSix();
    std::sort(six.begin(), six.end());
    return members == six;
  });
  L.check("JANTZEN", "valuation vanishes without strict dominance", [] {
    return valuation(parseBipartition("|1,1"), parseBipartition("1|1"), P(5, 1)) == 0;
  });
  L.check("JANTZEN", "alternating sums over one-A families (n <= 5, e in {7,11}, f in {1,2})", [] {
    for (int e : {7, 11})
      for (int f = 1; f <= 2; ++f)
        for (int n = 0; n <= 5 && n < std::min(e, 2 * f + 4); ++n)
          for (const auto& blk : blocks(n, P(e, f))) {
            auto cls = classifyBlock(blk);
            for (std::size_t i = 0; i < cls.family.size(); ++i) {
              SpechtCombination expected;
              for (std::size_t j = 0; j < i; ++j) expected[cls.family[i - 1 - j]] = j % 2 == 0 ? 1 : -1;
              if (jantzenSum(cls.family[i], P(e, f)) != expected) return false;
            }
          }
    return true;
  });
}

void decompGroup(Ledger& L) {
  L.check("DECOMP", "singleton blocks are simple", [] {
    for (int n = 0; n <= 4; ++n)
      for (const auto& blk : blocks(n, P(7, 2)))
        if (blk.members.size() == 1 && classifyBlock(blk).kind != BlockKind::kSimple) return false;
    return true;
  });
  L.check("DECOMP", "f=2 one-A blocks give 4x3 bidiagonal matrices (e=9)", [] {
    bool seen = false;
    for (int n = 1; n < 8; ++n)
      for (const auto& blk : blocks(n, P(9, 2))) {
        auto cls = classifyBlock(blk);
        if (cls.kind != BlockKind::kOneA || cls.caseTag != CaseTag::kCase1) continue;
        auto m = decompositionMatrix(blk);
        if (m.rows.size() != 4 || m.cols.size() != 3) return false;
        seen = true;
      }
    return seen;
  });
}

void reptypeGroup(Ledger& L) {
  const Order e4 = Order::finite(4), e5 = Order::finite(5), e2 = Order::finite(2), e6 = Order::finite(6);
  L.check("REPTYPE", "n=4 e=4 f0=2 is infinite", [&] { return repTypeB(4, e4, Charge{2}) == RepType::kInfinite; });
  L.check("REPTYPE", "n=4 e=5 f0=1 is finite", [&] { return repTypeB(4, e5, Charge{1}) == RepType::kFinite; });
  L.check("REPTYPE", "n=6 e=5 generic is finite", [&] { return repTypeB(6, e5, Generic{}) == RepType::kFinite; });
  L.check("REPTYPE", "type A n=3 e=2 is finite", [&] { return repTypeA(3, e2) == RepType::kFinite; });
  L.check("REPTYPE", "type A n=4 e=2 is infinite", [&] { return repTypeA(4, e2) == RepType::kInfinite; });
  L.check("REPTYPE", "e=6 n=4 lies in the window", [&] { return unoConjectureWitness(e6, 4).inWindow; });
  L.check("REPTYPE", "e=6 n=6 lies outside the window", [&] { return !unoConjectureWitness(e6, 6).inWindow; });
}

}  // namespace

std::vector<std::string> ledgerGroups() {
  return {"CORE", "FOCK", "S4_CASE1", "S4_F0", "S5_CASE1", "S5_CASE2", "MAYA", "KLESHCHEV", "JANTZEN", "DECOMP", "REPTYPE"};
}

std::vector<LedgerEntry> fixtureLedger(const std::optional<std::string>& group) {
  if (group) {
    const auto groups = ledgerGroups();
    if (std::find(groups.begin(), groups.end(), *group) == groups.end())
      throw ParseError("unknown fixture tag '" + *group + "'");
  }
  Ledger L{group, {}};
  coreGroup(L);
  fockGroup(L);
  matrixGroups(L);
  mayaGroup(L);
  kleshchevGroup(L);
  jantzenGroup(L);
  decompGroup(L);
  reptypeGroup(L);
  return L.entries;
}

}  // namespace hecke
