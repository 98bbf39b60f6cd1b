#include "hecke/fock.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hecke {

FockVector::FockVector(const Bipartition& b, LaurentPoly c) { add(b, c); }

LaurentPoly FockVector::coeff(const Bipartition& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

std::optional<int> FockVector::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.size();
}

void FockVector::add(const Bipartition& b, const LaurentPoly& c) {
  if (c.isZero()) return;
  if (auto d = degree(); d && *d != b.size())
    throw DomainError("Fock vector terms must share one size: " + hecke::toString(b) + " vs degree " +
                      std::to_string(*d));
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

// Leader first: increasing in the dominance-compatible linear order.
std::string FockVector::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const auto& t = c.terms();
    if (c == LaurentPoly(1)) {
      // bare basis vector
    } else if (t.size() == 1 && t.begin()->second == 1) {
      os << c.toString();
    } else {
      os << "(" << c.toString() << ")";
    }
    os << "(" << hecke::toString(b) << ")";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FockVector& u) { return os << u.toString(); }

nlohmann::json toJson(const FockVector& u) {
  auto out = nlohmann::json::array();
  for (const auto& [b, c] : u.terms()) {
    auto coeff = nlohmann::json::array();
    for (const auto& [e, k] : c.toPairs()) coeff.push_back({e, k});
    out.push_back({{"bipartition", toString(b)}, {"coeff", coeff}});
  }
  return out;
}

namespace {

int countStrictlyBelow(const std::vector<Bipartition>& xs, const Bipartition& top) {
  return static_cast<int>(
      std::count_if(xs.begin(), xs.end(), [&](const Bipartition& a) { return strictlyDominates(top, a); }));
}

int countStrictlyAbove(const std::vector<Bipartition>& xs, const Bipartition& bottom) {
  return static_cast<int>(
      std::count_if(xs.begin(), xs.end(), [&](const Bipartition& a) { return strictlyDominates(a, bottom); }));
}

std::vector<Bipartition> arrowSources(const Bipartition& b, const Params& p, Residue i) {
  std::vector<Bipartition> out;
  for (const auto& x : removableNodes(b, p, i)) out.push_back(removeNode(b, x));
  return out;
}

}  // namespace

FockVector applyF(const FockVector& u, Residue i, const Params& p) {
  const Residue r = p.reduce(i);
  FockVector out;
  for (const auto& [lambda, c] : u.terms()) {
    const auto targets = arrowTargets(lambda, p, r);
    for (const auto& mu : targets) {
      // N^l_i(λ, μ) = #{λ → α : μ ⊳ α} - #{β → μ : β ⊳ λ}
      const int n = countStrictlyBelow(targets, mu) - countStrictlyAbove(arrowSources(mu, p, r), lambda);
      out.add(mu, c.shifted(n));
    }
  }
  return out;
}

FockVector applyE(const FockVector& u, Residue i, const Params& p) {
  const Residue r = p.reduce(i);
  FockVector out;
  for (const auto& [lambda, c] : u.terms()) {
    const auto sources = arrowSources(lambda, p, r);
    for (const auto& nu : sources) {
      // N^r_i(ν, λ) = #{ν → α : α ⊳ λ} - #{β → λ : ν ⊳ β}
      const int n = countStrictlyAbove(arrowTargets(nu, p, r), lambda) - countStrictlyBelow(sources, nu);
      out.add(nu, c.shifted(-n));
    }
  }
  return out;
}

FockVector applyFDivided(const FockVector& u, Residue i, int m, const Params& p) {
  if (m < 1) throw DomainError("divided power needs m >= 1");
  FockVector w = u;
  for (int j = 0; j < m; ++j) w = applyF(w, i, p);
  if (m == 1) return w;
  const auto fact = quantumFactorial(m);
  FockVector out;
  for (const auto& [b, c] : w.terms()) {
    try {
      out.add(b, exactDivide(c, fact));
    } catch (const DomainError& err) {
      throw InternalError(std::string("divided power F^(m) not integral: ") + err.what());
    }
  }
  return out;
}

FockVector fProduct(const FWord& word, const Params& p) {
  FockVector u = FockVector::vacuum();
  for (auto it = word.rbegin(); it != word.rend() && !u.isZero(); ++it)
    u = applyFDivided(u, it->residue, it->power, p);
  return u;
}

FWord parseWord(std::string_view text, const Params& p) {
  FWord word;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (tok.size() < 2 || tok.front() != 'F')
      throw ParseError("bad word letter '" + std::string(tok) + "' (expected F<i> or F<i>^<m>)");
    tok.remove_prefix(1);
    WordLetter letter;
    std::string_view powerText;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      powerText = tok.substr(caret + 1);
      tok = tok.substr(0, caret);
    }
    auto parseInt = [](std::string_view s, int& v) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
    };
    int idx = 0;
    if (!parseInt(tok, idx)) throw ParseError("bad residue in word letter 'F" + std::string(tok) + "'");
    if (!powerText.empty() && (!parseInt(powerText, letter.power) || letter.power < 1))
      throw ParseError("bad divided power '^" + std::string(powerText) + "'");
    if (idx < 0 && p.e.isFinite() && idx != -1)
      throw ParseError("negative residues other than F-1 are not accepted for finite e");
    letter.residue = p.reduce(idx);
    word.push_back(letter);
  }
  return word;
}

std::string toString(const FWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += "F" + std::to_string(w[k].residue);
    if (w[k].power != 1) out += "^" + std::to_string(w[k].power);
  }
  return out;
}

std::optional<CanonicalCandidate> asCanonicalCandidate(const FockVector& u) {
  std::optional<Bipartition> leader;
  for (const auto& [b, c] : u.terms()) {
    if (c.coeff(0) == 0) continue;
    if (leader) return std::nullopt;
    leader = b;
  }
  if (!leader || u.coeff(*leader) != LaurentPoly(1)) return std::nullopt;

  CanonicalCandidate cand{*leader, {}};
  for (const auto& [b, c] : u.terms()) {
    if (b == *leader) continue;
    if (c.minExponent() < 1 || !strictlyDominates(b, *leader)) return std::nullopt;
    cand.tail.emplace(b, c);
  }
  return cand;
}

std::map<Bipartition, int> decompColumn(const CanonicalCandidate& c) {
  std::map<Bipartition, int> col{{c.leader, 1}};
  for (const auto& [b, d] : c.tail) col.emplace(b, static_cast<int>(d.evaluateAtOne()));
  return col;
}

}  // namespace hecke
