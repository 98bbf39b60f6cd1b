#include "hecke/cli.hpp"

#include "hecke/decomp.hpp"
#include "hecke/fixtures.hpp"
#include "hecke/fock.hpp"
#include "hecke/jantzen.hpp"
#include "hecke/kleshchev.hpp"
#include "hecke/maya.hpp"
#include "hecke/reptype.hpp"

#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace hecke::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string e = "inf";
  int f = 0;
  std::optional<int> f0;
  bool generic = false;
  bool typeA = false;
  int n = 0;
  bool json = false;
  bool all = false;
  std::string bipartition;
  std::string blockOf;
  std::string word;
  std::string tag;
};

Params params(const Options& o) { return Params::make(Order::parse(o.e), o.f); }

json nodeJson(const Node& x) { return {x.row, x.col, x.comp}; }

std::string residuesText(const std::vector<Residue>& rs) {
  std::string s = "{";
  for (std::size_t i = 0; i < rs.size(); ++i) s += (i ? "," : "") + std::to_string(rs[i]);
  return s + "}";
}

void cmdReptype(const Options& o, std::ostream& out) {
  const Order e = Order::parse(o.e);
  RepType t;
  json j{{"n", o.n}, {"e", e.toString()}};
  if (o.typeA) {
    t = repTypeA(o.n, e);
    j["type_a"] = true;
  } else if (o.generic) {
    t = repTypeB(o.n, e, Generic{});
    j["generic"] = true;
  } else if (o.f0) {
    t = repTypeB(o.n, e, Charge{*o.f0});
    j["f"] = normalizeParams(e, *o.f0).f;
  } else {
    t = repTypeB(o.n, e, Charge{params(o).f});
    j["f"] = o.f;
  }
  j["type"] = toString(t);
  if (o.json) out << j.dump() << '\n';
  else out << toString(t) << '\n';
}

void cmdKleshchev(const Options& o, std::ostream& out) {
  const Params p = params(o);
  const Bipartition b = parseBipartition(o.bipartition);
  const auto r = isKleshchev(b, p);
  if (o.json) {
    auto w = json::array();
    for (const auto& [res, x] : r.witness) w.push_back({{"residue", res}, {"node", nodeJson(x)}});
    out << json{{"bipartition", toString(b)}, {"kleshchev", r.kleshchev}, {"witness", w}}.dump() << '\n';
    return;
  }
  out << (r.kleshchev ? "yes" : "no") << '\n';
  Bipartition cur = b;
  for (const auto& [res, x] : r.witness) {
    cur = removeNode(cur, x);
    out << "  remove good " << res << "-node " << toString(x) << " -> " << toString(cur) << '\n';
  }
}

void cmdBlocks(const Options& o, std::ostream& out) {
  const Params p = params(o);
  const auto bs = blocks(o.n, p);
  if (o.json) {
    auto arr = json::array();
    for (const auto& b : bs) arr.push_back(toJson(b));
    out << arr.dump() << '\n';
    return;
  }
  out << bs.size() << " blocks of n=" << o.n << " at e=" << p.e.toString() << ", f=" << p.f << '\n';
  for (const auto& b : bs) {
    out << "size " << b.members.size() << "  residues " << residuesText(b.residue) << " :";
    for (const auto& m : b.members) out << ' ' << toString(m);
    out << '\n';
  }
}

void cmdDecomp(const Options& o, std::ostream& out, std::ostream& err) {
  const Params p = params(o);
  std::vector<Block> targets;
  if (!o.blockOf.empty()) targets.push_back(blockOf(parseBipartition(o.blockOf), p));
  else if (o.all) targets = blocks(o.n, p);
  else throw CLI::ValidationError("decomp needs --block-of <bipartition> or --all --n N");
  (void)err;

  auto arr = json::array();
  std::ostringstream text;
  for (const auto& b : targets) {
    const auto cls = classifyBlock(b);
    const auto m = decompositionMatrix(b);
    json j = toJson(m);
    j["kind"] = toString(cls.kind);
    if (cls.kind == BlockKind::kOneA) j["case"] = toString(cls.caseTag);
    j["residues"] = b.residue;
    arr.push_back(j);
    text << "block " << residuesText(b.residue) << "  " << toString(cls.kind);
    if (cls.kind == BlockKind::kOneA) text << " " << toString(cls.caseTag);
    text << '\n' << render(m) << '\n';
  }
  if (o.json) out << arr.dump() << '\n';
  else out << text.str();
}

void cmdFock(const Options& o, std::ostream& out) {
  const Params p = params(o);
  const FWord w = parseWord(o.word, p);
  const FockVector u = fProduct(w, p);
  const auto cand = asCanonicalCandidate(u);
  if (o.json) {
    json j{{"word", toString(w)}, {"vector", toJson(u)}, {"candidate", nullptr}};
    if (cand) {
      json col = json::object();
      for (const auto& [b, d] : decompColumn(*cand)) col[toString(b)] = d;
      j["candidate"] = {{"leader", toString(cand->leader)}, {"column", col}};
    }
    out << j.dump() << '\n';
    return;
  }
  out << u.toString() << '\n';
  if (cand) out << "canonical candidate led by " << toString(cand->leader) << '\n';
}

void cmdJantzen(const Options& o, std::ostream& out) {
  const Params p = params(o);
  const Bipartition b = parseBipartition(o.bipartition);
  const auto sum = jantzenSum(b, p);
  if (o.json) {
    out << json{{"bipartition", toString(b)}, {"sum", toJson(sum)}}.dump() << '\n';
    return;
  }
  if (sum.empty()) {
    out << "0\n";
    return;
  }
  bool first = true;
  for (auto it = sum.rbegin(); it != sum.rend(); ++it) {
    const int c = it->second;
    if (first) out << (c < 0 ? "-" : "");
    else out << (c < 0 ? " - " : " + ");
    first = false;
    if (std::abs(c) != 1) out << std::abs(c);
    out << "[S(" << toString(it->first) << ")]";
  }
  out << '\n';
}

void cmdMaya(const Options& o, std::ostream& out) {
  const Params p = params(o);
  const Bipartition b = parseBipartition(o.bipartition);
  const auto path = bipartitionToBiPath(b, p);
  const auto rc = regionCounts(path);
  const auto ids = checkIdentities(rc, p, b.size());
  if (o.json) {
    json counts{{"aL", rc.aL}, {"aM", rc.aM}, {"aR", rc.aR}, {"bL", rc.bL}, {"bM", rc.bM},
                {"bR", rc.bR}, {"cM", rc.cM}, {"cR", rc.cR}, {"dL", rc.dL}, {"dM", rc.dM}};
    auto idj = json::array();
    for (const auto& c : ids)
      idj.push_back({{"name", c.name}, {"evaluated", c.evaluated}, {"holds", c.evaluated ? json(c.holds) : json()}});
    std::istringstream rows(path.render());
    std::string top, bottom;
    std::getline(rows, top);
    std::getline(rows, bottom);
    out << json{{"bipartition", toString(b)}, {"top", top}, {"bottom", bottom}, {"counts", counts}, {"identities", idj}}
               .dump()
        << '\n';
    return;
  }
  out << path.render() << '\n';
  out << "A: " << rc.aL << ' ' << rc.aM << ' ' << rc.aR << "   B: " << rc.bL << ' ' << rc.bM << ' ' << rc.bR
      << "   C: - " << rc.cM << ' ' << rc.cR << "   D: " << rc.dL << ' ' << rc.dM << " -\n";
  for (const auto& c : ids)
    out << c.name << ": " << (!c.evaluated ? "not evaluated (n > 2f+3)" : c.holds ? "holds" : "fails") << '\n';
}

int cmdVerify(const Options& o, std::ostream& out) {
  const auto entries = fixtureLedger(o.tag.empty() ? std::nullopt : std::optional<std::string>(o.tag));
  int failed = 0;
  auto arr = json::array();
  for (const auto& e : entries) {
    failed += !e.pass;
    if (o.json) {
      arr.push_back({{"group", e.group}, {"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
      continue;
    }
    out << (e.pass ? "PASS " : "FAIL ") << e.group << "  " << e.name;
    if (!e.pass) out << "  :: " << e.detail;
    out << '\n';
  }
  if (o.json) out << arr.dump() << '\n';
  else out << entries.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representation type and decomposition numbers for Hecke algebras of type B"};
  app.require_subcommand(1);
  Options o;

  auto addParams = [&](CLI::App* sub) {
    sub->add_option("--e", o.e, "order of q: an integer >= 3 or inf")->required();
    sub->add_option("--f", o.f, "charge f with 0 <= 2f <= e");
    sub->add_flag("--json", o.json, "JSON output");
  };

  auto* reptype = app.add_subcommand("reptype", "finite or infinite representation type");
  reptype->add_option("--n", o.n, "rank n >= 1")->required();
  reptype->add_option("--e", o.e, "order of q: an integer or inf")->required();
  auto* fOpt = reptype->add_option("--f", o.f, "normalized charge");
  auto* f0Opt = reptype->add_option("--f0", o.f0, "raw charge, renormalized to min(f0, e - f0)");
  auto* gOpt = reptype->add_flag("--generic", o.generic, "Q generic relative to q");
  auto* aOpt = reptype->add_flag("--type-a", o.typeA, "type A instead of type B");
  fOpt->excludes(f0Opt)->excludes(gOpt)->excludes(aOpt);
  f0Opt->excludes(gOpt)->excludes(aOpt);
  gOpt->excludes(aOpt);
  reptype->add_flag("--json", o.json, "JSON output");

  auto* kl = app.add_subcommand("kleshchev", "Kleshchev test with a good-node witness");
  addParams(kl);
  kl->add_option("bipartition", o.bipartition, "literal such as 2,1|1")->required();

  auto* bl = app.add_subcommand("blocks", "blocks of bipartitions of n by residue multiset");
  addParams(bl);
  bl->add_option("--n", o.n, "size")->required();

  auto* dc = app.add_subcommand("decomp", "decomposition matrices in the finite-type range");
  addParams(dc);
  auto* bo = dc->add_option("--block-of", o.blockOf, "bipartition whose block is shown");
  auto* allOpt = dc->add_flag("--all", o.all, "every block of size n");
  dc->add_option("--n", o.n, "size for --all");
  bo->excludes(allOpt);

  auto* fk = app.add_subcommand("fock", "apply an F-word to the empty bipartition");
  addParams(fk);
  fk->add_option("--word", o.word, "letters F<i> or F<i>^<m>, comma separated, rightmost first applied")->required();

  auto* jz = app.add_subcommand("jantzen", "Jantzen sum formula right-hand side (n < e)");
  addParams(jz);
  jz->add_option("bipartition", o.bipartition, "literal such as 2,1|1")->required();

  auto* my = app.add_subcommand("maya", "two-row path sequence, region counts and identities");
  addParams(my);
  my->add_option("bipartition", o.bipartition, "literal such as 4,2,1|2,2,1")->required();

  auto* vf = app.add_subcommand("verify-fixtures", "rerun the worked examples and tables");
  vf->add_option("--tag", o.tag, "restrict to one group")->check(CLI::IsMember(ledgerGroups()));
  vf->add_flag("--json", o.json, "JSON output");

  std::vector<const char*> argv{"hecke"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*reptype) cmdReptype(o, out);
    else if (*kl) cmdKleshchev(o, out);
    else if (*bl) cmdBlocks(o, out);
    else if (*dc) cmdDecomp(o, out, err);
    else if (*fk) cmdFock(o, out);
    else if (*jz) cmdJantzen(o, out);
    else if (*my) cmdMaya(o, out);
    else if (*vf) return cmdVerify(o, out);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const hecke::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hecke::cli
