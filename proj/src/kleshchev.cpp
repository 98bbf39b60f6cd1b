#include "hecke/kleshchev.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace hecke {

std::vector<Node> normalNodes(const Bipartition& b, const Params& p, Residue r) {
  auto removable = removableNodes(b, p, r);
  auto addable = addableNodes(b, p, r);
  std::sort(removable.begin(), removable.end(), topToBottomLess);
  std::sort(addable.begin(), addable.end(), topToBottomLess);

  auto countBetween = [](const std::vector<Node>& nodes, const Node& hi, const Node& lo) {
    return std::count_if(nodes.begin(), nodes.end(),
                         [&](const Node& z) { return isBelow(z, hi) && isBelow(lo, z); });
  };
  auto countBelow = [](const std::vector<Node>& nodes, const Node& x) {
    return std::count_if(nodes.begin(), nodes.end(), [&](const Node& z) { return isBelow(z, x); });
  };

  std::vector<Node> out;
  for (const auto& x : removable) {
    bool normal = countBelow(removable, x) >= countBelow(addable, x);
    for (const auto& y : addable) {
      if (!normal) break;
      if (isBelow(y, x) && countBetween(removable, x, y) <= countBetween(addable, x, y)) normal = false;
    }
    if (normal) out.push_back(x);
  }
  return out;
}

std::optional<Node> goodNode(const Bipartition& b, const Params& p, Residue r) {
  auto normal = normalNodes(b, p, r);
  if (normal.empty()) return std::nullopt;
  return normal.front();
}

namespace {

using CacheKey = std::tuple<Bipartition, std::string, int>;

struct Cache {
  std::mutex mu;
  std::map<CacheKey, KleshchevResult> entries;
};

Cache& cache() {
  static Cache c;
  return c;
}

std::vector<Residue> residuesToTry(const Bipartition& b, const Params& p) {
  if (p.e.isFinite()) {
    std::vector<Residue> all(p.e.value());
    for (int i = 0; i < p.e.value(); ++i) all[i] = i;
    return all;
  }
  std::set<Residue> present;
  for (const auto& x : removableNodes(b, p)) present.insert(residue(x, p));
  return {present.begin(), present.end()};
}

}  // namespace

KleshchevResult isKleshchev(const Bipartition& b, const Params& p) {
  if (b.size() == 0) return {true, {}};
  const CacheKey key{b, p.e.toString(), p.f};
  {
    std::lock_guard lock(cache().mu);
    if (auto it = cache().entries.find(key); it != cache().entries.end()) return it->second;
  }

  KleshchevResult result;
  for (Residue r : residuesToTry(b, p)) {
    auto x = goodNode(b, p, r);
    if (!x) continue;
    auto rest = isKleshchev(removeNode(b, *x), p);
    if (rest.kleshchev) {
      result.kleshchev = true;
      result.witness.emplace_back(r, *x);
      result.witness.insert(result.witness.end(), rest.witness.begin(), rest.witness.end());
      break;
    }
  }

  std::lock_guard lock(cache().mu);
  cache().entries.emplace(key, result);
  return result;
}

}  // namespace hecke
