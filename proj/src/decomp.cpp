#include "hecke/decomp.hpp"

#include "hecke/kleshchev.hpp"
#include "hecke/maya.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hecke {

int DecompMatrix::at(const Bipartition& row, const Bipartition& col) const {
  auto r = std::find(rows.begin(), rows.end(), row);
  auto c = std::find(cols.begin(), cols.end(), col);
  if (r == rows.end() || c == cols.end()) throw DomainError("label not in matrix");
  return entries[r - rows.begin()][c - cols.begin()];
}

std::optional<std::string> unitriangularityViolation(const DecompMatrix& m) {
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
      const int d = m.entries[i][j];
      if (m.rows[i] == m.cols[j] && d != 1)
        return "diagonal entry at " + toString(m.rows[i]) + " is " + std::to_string(d);
      if (d != 0 && !dominates(m.rows[i], m.cols[j]))
        return "non-zero entry at (" + toString(m.rows[i]) + ", " + toString(m.cols[j]) +
               ") without dominance";
    }
  }
  return std::nullopt;
}

std::string render(const DecompMatrix& m) {
  std::size_t labelWidth = 0;
  for (const auto& r : m.rows) labelWidth = std::max(labelWidth, toString(r).size());
  std::vector<std::size_t> widths;
  for (const auto& c : m.cols) widths.push_back(std::max<std::size_t>(toString(c).size(), 1));

  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  std::ostringstream os;
  os << pad("", labelWidth) << " |";
  for (std::size_t j = 0; j < m.cols.size(); ++j) os << ' ' << pad(toString(m.cols[j]), widths[j]);
  os << '\n';
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    os << pad(toString(m.rows[i]), labelWidth) << " |";
    for (std::size_t j = 0; j < m.cols.size(); ++j) os << ' ' << pad(std::to_string(m.entries[i][j]), widths[j]);
    os << '\n';
  }
  std::string out = os.str();
  // trailing spaces from padding the last column
  std::string trimmed;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + '\n';
  }
  return trimmed;
}

nlohmann::json toJson(const DecompMatrix& m) {
  auto rows = nlohmann::json::array();
  auto cols = nlohmann::json::array();
  for (const auto& r : m.rows) rows.push_back(toString(r));
  for (const auto& c : m.cols) cols.push_back(toString(c));
  return {{"rows", rows}, {"cols", cols}, {"entries", m.entries}};
}

std::string toString(BlockKind k) {
  switch (k) {
    case BlockKind::kSimple: return "SIMPLE";
    case BlockKind::kOneA: return "ONE_A";
    case BlockKind::kOutOfRegime: return "OUT_OF_REGIME";
  }
  throw InternalError("unknown block kind");
}

std::string toString(CaseTag c) { return c == CaseTag::kCase1 ? "CASE1" : "CASE2_SWAPPED"; }

bool inFiniteRegime(int n, const Params& p) {
  const int bound = 2 * p.f + 4;
  return n < (p.e.isFinite() ? std::min(p.e.value(), bound) : bound);
}

BlockClass classifyBlock(const Block& b, std::optional<int> k) {
  const Params& p = b.params;
  BlockClass out;
  if (!inFiniteRegime(b.n, p)) return out;

  bool swap = false;
  if (p.e.isFinite()) {
    const int e = p.e.value();
    const std::set<Residue> present(b.residue.begin(), b.residue.end());
    if (k) {
      if (*k < 0 || *k >= e || present.contains(p.reduce(-*k - 1)))
        throw DomainError("-k-1 must be a missing residue for k = " + std::to_string(*k));
      out.k = k;
    }
    for (int j = 0; j < e && !out.k; ++j)
      if (!present.contains(p.reduce(-j - 1))) out.k = j;
    if (!out.k) throw InternalError("block has every residue although n < e");
    // At e - k = f the second component already wraps around, so it goes to the swapped frame.
    swap = e - *out.k <= p.f;
  }
  out.caseTag = swap ? CaseTag::kCase2Swapped : CaseTag::kCase1;
  out.frameF = swap ? p.e.value() - p.f : p.f;

  const Bipartition rep = swap ? b.members.front().swapped() : b.members.front();
  const BiPathSeq path = bipartitionToBiPath(rep, Params{p.e, out.frameF});
  const int aCount = regionCounts(path).a();

  if (aCount == 0) {
    if (b.members.size() != 1)
      throw InternalError("block of " + toString(rep) + " has no A but " +
                          std::to_string(b.members.size()) + " members");
    out.kind = BlockKind::kSimple;
    out.family = b.members;
    return out;
  }
  if (aCount > 1)
    throw InternalError("block of " + toString(b.members.front()) + " has " + std::to_string(aCount) +
                        " A columns inside the finite-type range");

  out.kind = BlockKind::kOneA;
  out.family = oneAFamily(path);
  if (swap)
    for (auto& m : out.family) m = m.swapped();
  std::sort(out.family.begin(), out.family.end());

  auto members = b.members;
  std::sort(members.begin(), members.end());
  if (members != out.family || static_cast<int>(members.size()) != out.frameF + 2)
    throw InternalError("one-A family of " + toString(b.members.front()) + " does not match its block");
  return out;
}

DecompMatrix decompositionMatrix(const Block& b) {
  const auto cls = classifyBlock(b);
  if (cls.kind == BlockKind::kOutOfRegime)
    throw DomainError("n = " + std::to_string(b.n) + " is outside the finite-type range n < min(e, 2f+4)");
  DecompMatrix m;
  m.rows = cls.family;
  if (cls.kind == BlockKind::kSimple) {
    m.cols = cls.family;
    m.entries = {{1}};
    return m;
  }
  m.cols.assign(cls.family.begin(), cls.family.end() - 1);
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    std::vector<int> row(m.cols.size(), 0);
    for (std::size_t j = 0; j < m.cols.size(); ++j) row[j] = (i == j || i == j + 1) ? 1 : 0;
    m.entries.push_back(row);
  }
  return m;
}

Block blockOf(const Bipartition& b, const Params& p) {
  const auto res = residueMultiset(b, p);
  for (auto& blk : blocks(b.size(), p))
    if (blk.residue == res) return blk;
  throw InternalError("bipartition " + toString(b) + " missing from its own block census");
}

// --- fixtures ----------------------------------------------------------------

std::string toString(FixtureTag t) {
  switch (t) {
    case FixtureTag::kS4Case1: return "S4_CASE1";
    case FixtureTag::kS4F0: return "S4_F0";
    case FixtureTag::kS5Case1: return "S5_CASE1";
    case FixtureTag::kS5Case2: return "S5_CASE2";
  }
  throw InternalError("unknown fixture tag");
}

FixtureTag parseFixtureTag(std::string_view text) {
  for (auto t : {FixtureTag::kS4Case1, FixtureTag::kS4F0, FixtureTag::kS5Case1, FixtureTag::kS5Case2})
    if (toString(t) == text) return t;
  throw ParseError("unknown fixture tag '" + std::string(text) + "'");
}

Params defaultFixtureParams(FixtureTag t) {
  switch (t) {
    case FixtureTag::kS4Case1: return Params::make(Order::finite(5), 2);
    case FixtureTag::kS4F0: return Params::make(Order::finite(5), 0);
    case FixtureTag::kS5Case1: return Params::make(Order::finite(5), 0);
    case FixtureTag::kS5Case2: return Params::make(Order::finite(7), 1);
  }
  throw InternalError("unknown fixture tag");
}

namespace {

Partition hookShape(int arm, int legs) {
  if (arm == 0) return Partition{};
  std::vector<int> parts{arm};
  parts.insert(parts.end(), legs, 1);
  return Partition(parts);
}

Partition rect(int width, int height, std::vector<int> tail = {}) {
  std::vector<int> parts(height, width);
  parts.insert(parts.end(), tail.begin(), tail.end());
  return Partition(parts);
}

struct WordBuilder {
  explicit WordBuilder(const Params& params) : p(params) {}

  const Params& p;
  FWord word;

  WordBuilder& asc(int a, int b) {
    for (int i = a; i <= b; ++i) word.push_back({p.reduce(i), 1});
    return *this;
  }
  WordBuilder& desc(int b, int a) {
    for (int i = b; i >= a; --i) word.push_back({p.reduce(i), 1});
    return *this;
  }
  WordBuilder& letter(int i, int power = 1) {
    word.push_back({p.reduce(i), power});
    return *this;
  }
};

void requireFinite(const Params& p, FixtureTag t) {
  if (p.e.isInfinite()) throw DomainError(toString(t) + " needs a finite e");
}

struct TableLayout {
  std::vector<Bipartition> rows;
  std::vector<Bipartition> cols;
  std::vector<std::vector<int>> table;
  std::vector<FWord> words;  // parallel to cols; empty word means unitriangular column
};

TableLayout layoutS4Case1(const Params& p) {
  requireFinite(p, FixtureTag::kS4Case1);
  const int e = p.e.value();
  const int f = p.f;
  if (e < 5 || f < 2) throw DomainError("S4_CASE1 needs e >= 5 and f >= 2");
  auto lam = [&](int k) { return Bipartition(Partition{}, hookShape(k, e - k)); };
  auto lamKL = [&](int k, int l) { return Bipartition(hookShape(f - l, e - f - k), hookShape(k, l)); };

  TableLayout s;
  s.rows = {lam(1), lam(2), lamKL(2, f - 1), lamKL(1, f - 1)};
  s.cols = {lam(1), lam(2), lamKL(3, f - 1), lamKL(2, f - 1), lamKL(1, f - 1)};
  s.table = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 1, 1, 1, 0}, {1, 0, 0, 1, 1}};
  auto lamWord = [&](int k) {
    return WordBuilder{p}.asc(f + k, e - 1).letter(0).desc(f + k - 1, f + 1).asc(1, f).word;
  };
  auto lamKLWord = [&](int k, int l) {
    if (k == 1) return WordBuilder{p}.asc(f - l, f - 1).letter(f).asc(f + 1, e - 1).desc(f - l - 1, 0).word;
    return WordBuilder{p}.asc(f - l, f - 1).desc(f + k - 1, f).asc(f + k, e - 1).desc(f - l - 1, 0).word;
  };
  s.words = {lamWord(1), lamWord(2), lamKLWord(3, f - 1), lamKLWord(2, f - 1), lamKLWord(1, f - 1)};
  return s;
}

TableLayout layoutS4F0(const Params& p) {
  requireFinite(p, FixtureTag::kS4F0);
  const int e = p.e.value();
  if (p.f != 0) throw DomainError("S4_F0 needs f = 0");
  auto lam = [&](int k) { return Bipartition(Partition{}, hookShape(k, e - k)); };
  auto mu = [&](int k) { return Bipartition(hookShape(k, e - k), Partition{}); };

  TableLayout s;
  for (int k = 1; k <= e; ++k) s.rows.push_back(lam(k));
  for (int k = 1; k <= e; ++k) s.rows.push_back(mu(k));
  for (int k = 1; k < e; ++k) {
    s.cols.push_back(lam(k));
    s.words.push_back(WordBuilder{p}.asc(k, e - 1).desc(k - 1, 0).word);
  }
  s.table.assign(s.rows.size(), std::vector<int>(s.cols.size(), 0));
  for (int k = 1; k < e; ++k)
    for (int r : {k - 1, k, e + k - 1, e + k}) s.table[r][k - 1] = 1;
  return s;
}

TableLayout layoutS5Case1(const Params& p) {
  if (p.f != 0 || (p.e.isFinite() && p.e.value() <= 4)) throw DomainError("S5_CASE1 needs f = 0 and e > 4");
  auto bp = [](std::vector<int> a, std::vector<int> b) { return Bipartition(Partition(a), Partition(b)); };
  TableLayout s;
  s.rows = {bp({}, {2, 2}), bp({1}, {2, 1}), bp({1, 1}, {2}), bp({2}, {1, 1}), bp({2, 1}, {1}), bp({2, 2}, {})};
  s.cols = {s.rows[0], s.rows[1]};
  // printed transposed: one line per simple module
  const std::vector<std::vector<int>> transposed = {{1, 1, 0, 0, 1, 1}, {0, 1, 1, 1, 1, 0}};
  s.table.assign(6, std::vector<int>(2, 0));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 2; ++j) s.table[i][j] = transposed[j][i];
  s.words = {WordBuilder{p}.letter(0).letter(1).letter(-1).letter(0).word,
             WordBuilder{p}.letter(1).letter(-1).letter(0, 2).word};
  return s;
}

TableLayout layoutS5Case2(const Params& p) {
  const int f = p.f;
  if (f < 1 || (p.e.isFinite() && p.e.value() <= 2 * f + 4))
    throw DomainError("S5_CASE2 needs f >= 1 and e > 2f + 4");
  TableLayout s;
  s.rows = {
      Bipartition(Partition{}, rect(2, f + 2)),
      Bipartition(Partition({1}), rect(2, f + 1, {1})),
      Bipartition(Partition({1, 1}), rect(2, f + 1)),
      Bipartition(Partition({2}), rect(2, f, {1, 1})),
      Bipartition(Partition({2, 1}), rect(2, f, {1})),
  };
  s.cols = s.rows;
  s.table = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 1, 1, 1, 1}};
  s.words = {
      WordBuilder{p}.asc(0, f + 1).letter(-1).asc(0, f).word,
      WordBuilder{p}.asc(1, f + 1).letter(-1).letter(0, 2).asc(1, f).word,
      WordBuilder{p}.asc(1, f + 1).asc(0, f).letter(-1).letter(0).word,
      WordBuilder{p}.letter(-1).asc(2, f + 1).letter(0).letter(1, 2).asc(2, f).letter(0).word,
      {},
  };
  return s;
}

TableLayout fixtureLayout(FixtureTag t, const Params& p) {
  switch (t) {
    case FixtureTag::kS4Case1: return layoutS4Case1(p);
    case FixtureTag::kS4F0: return layoutS4F0(p);
    case FixtureTag::kS5Case1: return layoutS5Case1(p);
    case FixtureTag::kS5Case2: return layoutS5Case2(p);
  }
  throw InternalError("unknown fixture tag");
}

}  // namespace

FixtureComputation computeFixture(FixtureTag t, const Params& p) {
  TableLayout s = fixtureLayout(t, p);
  FixtureComputation out;
  out.expected = {s.rows, s.cols, s.table};
  out.computed = {s.rows, s.cols, std::vector<std::vector<int>>(s.rows.size(), std::vector<int>(s.cols.size(), 0))};

  for (std::size_t j = 0; j < s.cols.size(); ++j) {
    FixtureColumn col{s.cols[j], s.words[j], std::nullopt};
    if (s.words[j].empty()) {
      for (std::size_t i = 0; i < s.rows.size(); ++i) {
        if (s.rows[i] == s.cols[j]) out.computed.entries[i][j] = 1;
        else if (dominates(s.rows[i], s.cols[j])) out.computed.entries[i][j] = -1;  // undetermined
      }
    } else {
      const auto u = fProduct(s.words[j], p);
      col.candidate = asCanonicalCandidate(u);
      for (std::size_t i = 0; i < s.rows.size(); ++i)
        out.computed.entries[i][j] = static_cast<int>(u.coeff(s.rows[i]).evaluateAtOne());
    }
    out.columns.push_back(std::move(col));
  }
  return out;
}

DecompMatrix fixtureMatrices(FixtureTag t, const Params& p) {
  auto fx = computeFixture(t, p);
  for (const auto& col : fx.columns) {
    if (col.word.empty()) {
      if (!isKleshchev(col.label, p).kleshchev)
        throw InternalError(toString(t) + ": column label " + toString(col.label) + " is not Kleshchev");
      continue;
    }
    if (!col.candidate)
      throw InternalError(toString(t) + ": word " + toString(col.word) + " is not a canonical candidate");
    if (col.candidate->leader != col.label)
      throw InternalError(toString(t) + ": word " + toString(col.word) + " leads with " +
                          toString(col.candidate->leader) + ", expected " + toString(col.label));
  }
  if (fx.computed != fx.expected)
    throw InternalError(toString(t) + ": computed matrix differs from the printed table\n" + render(fx.computed));
  return fx.computed;
}

}  // namespace hecke
