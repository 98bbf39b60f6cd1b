#include "hecke/jantzen.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hecke {

namespace {

void requireBelowE(int n, const Params& p) {
  if (p.e.isFinite() && n >= p.e.value())
    throw DomainError("valuations are only computed for n < e (n = " + std::to_string(n) +
                      ", e = " + p.e.toString() + ")");
}

using HookKey = std::tuple<Bipartition, int, Residue>;  // complement, size, foot residue

}  // namespace

std::vector<Block> blocks(int n, const Params& p, int bound) {
  std::vector<Block> out;
  std::map<std::vector<Residue>, std::size_t> index;
  for (auto& b : enumerateBipartitions(n, bound)) {
    auto res = residueMultiset(b, p);
    auto [it, inserted] = index.emplace(res, out.size());
    if (inserted) out.push_back({p, n, {}, std::move(res)});
    out[it->second].members.push_back(std::move(b));
  }
  for (auto& blk : out) std::sort(blk.members.begin(), blk.members.end(), std::greater<>());
  return out;
}

bool linkedByHooks(const Bipartition& a, const Bipartition& b, const Params& p) {
  if (a.size() != b.size()) throw DomainError("linkedByHooks needs equal sizes");
  if (a == b) return true;

  std::map<HookKey, std::vector<Bipartition>> byKey;
  std::map<Bipartition, std::vector<HookKey>> keysOf;
  for (const auto& c : enumerateBipartitions(a.size())) {
    for (const auto& h : allRimHooks(c)) {
      HookKey key{h.remainder, h.size(), residue(h.foot, p)};
      byKey[key].push_back(c);
      keysOf[c].push_back(key);
    }
  }

  std::set<Bipartition> seen{a};
  std::deque<Bipartition> queue{a};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& key : keysOf[cur]) {
      for (const auto& next : byKey[key]) {
        if (next == b) return true;
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return false;
}

int valuation(const Bipartition& a, const Bipartition& b, const Params& p) {
  if (a.size() != b.size()) throw DomainError("valuation needs equal sizes");
  requireBelowE(a.size(), p);
  if (!strictlyDominates(a, b)) return 0;

  std::map<Bipartition, std::vector<const RimHook*>> byComplement;
  const auto hooksA = allRimHooks(a);
  for (const auto& h : hooksA) byComplement[h.remainder].push_back(&h);

  int total = 0;
  for (const auto& y : allRimHooks(b)) {
    auto it = byComplement.find(y.remainder);
    if (it == byComplement.end()) continue;
    for (const RimHook* x : it->second) {
      if (residue(x->foot, p) != residue(y.foot, p)) continue;
      total += (x->legLength + y.legLength) % 2 == 0 ? 1 : -1;
    }
  }
  return total;
}

SpechtCombination jantzenSum(const Bipartition& a, const Params& p) {
  requireBelowE(a.size(), p);
  SpechtCombination out;
  for (const auto& b : enumerateBipartitions(a.size())) {
    if (int v = valuation(a, b, p); v != 0) out.emplace(b, v);
  }
  return out;
}

nlohmann::json toJson(const SpechtCombination& c) {
  auto out = nlohmann::json::array();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    out.push_back({{"bipartition", toString(it->first)}, {"coefficient", it->second}});
  return out;
}

nlohmann::json toJson(const Block& b) {
  auto members = nlohmann::json::array();
  for (const auto& m : b.members) members.push_back(toString(m));
  return {{"e", b.params.e.toString()},
          {"f", b.params.f},
          {"n", b.n},
          {"residues", b.residue},
          {"size", b.members.size()},
          {"members", members}};
}

}  // namespace hecke
