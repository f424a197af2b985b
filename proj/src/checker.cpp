#include "atomkit/checker.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace atomkit {
namespace {

using Count = long long;
using Set = std::vector<Element>;  // sorted, unique

Count card(const Set& s) { return static_cast<Count>(s.size()); }

bool has(const Set& s, Element x) { return std::binary_search(s.begin(), s.end(), x); }

bool within(const Set& inner, const Set& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

Set normalized(Set s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// (size, bitmask value) order.
bool canonical_before(const Set& a, const Set& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

class Naive {
 public:
  explicit Naive(const GroupTable& g) : g_(g) {}

  Element e() const { return g_.identity(); }
  Element mul(Element x, Element y) const { return g_.mul(x, y); }
  Element inv(Element x) const { return g_.inv(x); }

  Set prod(const Set& a, const Set& b) const {
    Set out;
    for (Element x : a)
      for (Element y : b) out.push_back(mul(x, y));
    return normalized(std::move(out));
  }
  Set inverse(const Set& a) const {
    Set out;
    for (Element x : a) out.push_back(inv(x));
    return normalized(std::move(out));
  }
  Set single(Element x) const { return {x}; }
  Set sandwich(Element left, const Set& h, Element right) const { return prod(prod(single(left), h), single(right)); }

  Set closure(const Set& gens) const {
    Set cur = gens;
    cur.push_back(e());
    cur = normalized(std::move(cur));
    for (;;) {
      Set next = prod(cur, cur);
      if (next == cur) return cur;
      cur = std::move(next);
    }
  }
  bool is_subgroup(const Set& h) const { return has(h, e()) && prod(h, h) == h; }
  bool normal_in(const Set& h, const Set& ambient) const {
    for (Element x : ambient)
      if (sandwich(x, h, inv(x)) != h) return false;
    return true;
  }
  std::vector<Set> subgroups(const Set& ambient) const {
    std::set<Set> found;
    std::vector<Set> work;
    auto add = [&](Set s) {
      if (found.insert(s).second) work.push_back(std::move(s));
    };
    for (Element x : ambient) add(closure({x}));
    while (!work.empty()) {
      Set h = std::move(work.back());
      work.pop_back();
      for (Element x : ambient) {
        if (has(h, x)) continue;
        Set gens = h;
        gens.push_back(x);
        add(closure(normalized(std::move(gens))));
      }
    }
    std::vector<Set> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), canonical_before);
    return out;
  }

 private:
  const GroupTable& g_;
};

struct Connectivity {
  Count kappa = 0;
  bool full = false;
  Set basic;  // canonically least atom containing e
  bool faithful = true;
};

// kappa and the basic atom of S inside the group `ambient` = <S>.
Connectivity connectivity_of(const Naive& n, const GroupTable& g, const Set& s, const Set& ambient) {
  Connectivity out;
  if (s == ambient) {
    out.full = true;
    out.kappa = card(ambient);
    return out;
  }
  if (ambient.size() > kCheckerBruteLimit) {
    const Restriction r(Subgroup::validate(Subset(g, ambient)));
    const AtomReport rep = connectivity(r.lower(Subset(g, s)), Engine::mincut);
    out.kappa = static_cast<Count>(rep.kappa);
    out.basic = r.lift(*rep.basic_atom).elements();
    out.faithful = card(out.basic) <= out.kappa;
    return out;
  }
  const std::size_t m = ambient.size();
  auto local = [&](Element x) {
    return static_cast<std::size_t>(std::lower_bound(ambient.begin(), ambient.end(), x) - ambient.begin());
  };
  std::vector<std::uint32_t> row(m, 0);  // x S as a mask
  for (std::size_t i = 0; i < m; ++i)
    for (Element y : s) row[i] |= std::uint32_t{1} << local(n.mul(ambient[i], y));
  const std::uint32_t all = (m == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << m) - 1);
  const std::uint32_t ebit = std::uint32_t{1} << local(n.e());

  Count best = card(ambient);
  int best_size = 0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t x = 1; x <= all && x != 0; ++x) {
    if ((x & ebit) == 0) continue;
    std::uint32_t xs = 0;
    for (std::uint32_t rest = x; rest != 0; rest &= rest - 1) xs |= row[std::countr_zero(rest)];
    if (xs == all) continue;
    const Count value = std::popcount(xs) - std::popcount(x);
    const int size = std::popcount(x);
    if (value < best || (value == best && (size < best_size || (size == best_size && x < best_mask)))) {
      best = value;
      best_size = size;
      best_mask = x;
    }
    if (x == all) break;
  }
  out.kappa = best;
  for (std::size_t i = 0; i < m; ++i)
    if (best_mask >> i & 1U) out.basic.push_back(ambient[i]);
  out.faithful = card(out.basic) <= out.kappa;
  return out;
}

struct Recomputed {
  std::vector<bool> hypotheses;
  std::vector<bool> conclusions;
  std::vector<std::string> problems;

  bool hyps() const { return std::all_of(hypotheses.begin(), hypotheses.end(), [](bool b) { return b; }); }
};

struct Input {
  const GroupTable* g = nullptr;
  Set set;
  std::optional<Set> h, k, c;
  std::optional<Element> a;
  int which = 0;
  int kparam = 0;
};

Set read_set(const GroupTable& g, const Json& doc) { return subset_from_json(g, doc).elements(); }

void kneser(const Naive& n, const Input& in, Recomputed& out) {
  const Set& s = in.set;
  const Set ambient = n.closure(s);
  const Connectivity conn = connectivity_of(n, *in.g, s, ambient);
  const Set diff = n.prod(n.inverse(s), s);
  out.hypotheses = {conn.full || conn.faithful, card(diff) <= 2 * card(s) - 2, diff.size() < ambient.size()};
  if (!out.hyps()) return;
  const Set& h = conn.basic;
  if (!in.h || *in.h != h) out.problems.push_back("witness H is not the basic atom");
  const bool subgroup = n.is_subgroup(h);
  bool containment = false;
  if (subgroup) {
    std::vector<Set> parts;
    for (Element x : s) {
      Set part;
      for (Element y : n.prod(h, {x}))
        if (has(s, y)) part.push_back(y);
      parts.push_back(normalized(std::move(part)));
    }
    const Set c = *std::min_element(parts.begin(), parts.end(), canonical_before);
    if (!in.c || *in.c != c) out.problems.push_back("witness C is not the smallest H-right-component");
    containment = true;
    for (Element x : s)
      for (Element y : s)
        if (!(has(c, x) && has(c, y)) && !within(n.sandwich(n.inv(x), h, y), diff)) containment = false;
  }
  out.conclusions = {subgroup, h.size() >= 2, containment};
}

struct BulletCheck {
  bool containment = true;
  bool inequality = false;
};

BulletCheck bullet(const Naive& n, const Set& a, const Set& h, Element pivot, int which) {
  BulletCheck out;
  const Set ha = which == 1 ? n.prod(h, {pivot}) : n.prod({pivot}, h);
  const Set target = which == 1 ? n.prod(n.inverse(a), a) : n.prod(a, n.inverse(a));
  for (Element x : a)
    for (Element y : a) {
      if (has(ha, x) && has(ha, y)) continue;
      const Set piece = which == 1 ? n.sandwich(n.inv(x), h, y) : n.sandwich(x, h, n.inv(y));
      if (!within(piece, target)) out.containment = false;
    }
  const Count hn = card(h);
  if (which == 1)
    out.inequality = card(target) > card(n.prod(n.inverse(a), h)) + card(n.prod(h, a)) - 2 * hn;
  else
    out.inequality = card(target) > 2 * card(n.prod(a, h)) - 2 * hn;
  return out;
}

void kneser_corollary(const Naive& n, const Input& in, Recomputed& out) {
  const Set& a = in.set;
  const Set diff = n.prod(n.inverse(a), a);
  const Set ambient = n.closure(diff);
  out.hypotheses = {card(diff) <= 2 * card(a) - 2, diff.size() < ambient.size()};
  if (!out.hyps()) return;
  auto admissible = [&](const Set& h) {
    return n.is_subgroup(h) && within(h, ambient) && h.size() >= 2 && h.size() < ambient.size();
  };
  if (in.h && in.a) {
    const bool ok_h = admissible(*in.h);
    const bool ok_a = has(a, *in.a) && (in.which == 1 || in.which == 2);
    const BulletCheck b = ok_a ? bullet(n, a, *in.h, *in.a, in.which) : BulletCheck{false, false};
    out.conclusions = {ok_h && ok_a && b.containment && b.inequality, ok_h, b.containment, b.inequality};
    return;
  }
  bool exists = false;
  for (const Set& h : n.subgroups(ambient)) {
    if (!admissible(h)) continue;
    for (Element p : a)
      for (int which : {1, 2}) {
        const BulletCheck b = bullet(n, a, h, p, which);
        exists = exists || (b.containment && b.inequality);
      }
  }
  out.conclusions = {exists};
}

void normal_set(const Naive& n, const Input& in, Recomputed& out) {
  const Set& s = in.set;
  const Set ambient = n.closure(s);
  const Set diff = n.prod(n.inverse(s), s);
  out.hypotheses = {n.normal_in(s, ambient), card(diff) <= 2 * card(s) - 2, diff.size() < ambient.size()};
  if (!out.hyps()) return;
  const Connectivity conn = connectivity_of(n, *in.g, s, ambient);
  const Set& h = conn.basic;
  if (!in.h || *in.h != h) out.problems.push_back("witness H is not the basic atom");
  const bool subgroup = n.is_subgroup(h);
  out.conclusions = {subgroup, subgroup && n.normal_in(h, ambient), n.prod(h, diff) == diff};
}

bool chain_holds(const Naive& n, const Set& s, const Set& h, int which, int k, Count kappa) {
  const Count hn = card(h), hs = card(n.prod(h, s)), sh = card(n.prod(s, h)), sz = card(s);
  const bool tail = sz > (k - 2) * hn && (k - 2) * hn == kappa;
  if (which == 1) return (k - 1) * hn >= hs && hs >= sz && tail;
  if (which == 2) return hs > (k - 1) * hn && (k - 1) * hn >= sh && sh >= sz && tail;
  return false;
}

void covering(const Naive& n, const Input& in, Recomputed& out) {
  const Set& s = in.set;
  const int k = in.kparam;
  const Set ambient = n.closure(s);
  const Connectivity conn = connectivity_of(n, *in.g, s, ambient);
  out.hypotheses = {card(s) >= k + 1, k * conn.kappa < (k - 1) * card(s)};
  if (!out.hyps()) return;
  auto proper = [&](const Set& h) { return n.is_subgroup(h) && within(h, ambient) && h.size() < ambient.size(); };
  if (in.h) {
    const bool ok = proper(*in.h);
    const bool chain = chain_holds(n, s, *in.h, in.which, k, conn.kappa);
    out.conclusions = {ok && chain, ok, chain};
    return;
  }
  bool exists = false;
  for (const Set& h : n.subgroups(ambient))
    if (proper(h)) exists = exists || chain_holds(n, s, h, 1, k, conn.kappa) || chain_holds(n, s, h, 2, k, conn.kappa);
  out.conclusions = {exists};
}

void olson(const Naive& n, const Input& in, Recomputed& out) {
  const Set ambient = n.closure(in.set);
  const Connectivity conn = connectivity_of(n, *in.g, in.set, ambient);
  out.conclusions = {2 * conn.kappa >= card(in.set)};
}

void periodic(const Naive& n, const Input& in, Recomputed& out) {
  const Set& a = in.set;
  const Set diff = n.prod(n.inverse(a), a);
  const Set ambient = n.closure(diff);
  out.hypotheses = {diff.size() < ambient.size(), 3 * card(diff) < 5 * card(a)};
  if (!out.hyps()) return;
  auto clauses = [&](const Set& k, const Set& h) {
    const Count kn = card(k), hn = card(h), d = card(diff);
    return std::vector<bool>{n.is_subgroup(k) && within(k, ambient) && n.normal_in(k, ambient),
                             within(k, h) && within(h, diff) && n.is_subgroup(h), 2 * kn >= hn,
                             n.prod(diff, k) == diff && n.prod(k, diff) == diff, 6 * kn >= d && d == 3 * hn};
  };
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  if (in.h && in.k) {
    const auto c = clauses(*in.k, *in.h);
    out.conclusions = {all(c)};
    out.conclusions.insert(out.conclusions.end(), c.begin(), c.end());
    return;
  }
  const auto lattice = n.subgroups(ambient);
  bool exists = false;
  for (const Set& h : lattice)
    for (const Set& k : lattice) exists = exists || all(clauses(k, h));
  out.conclusions = {exists};
}

std::vector<bool> recorded_flags(const Json& list, const char* field) {
  if (!list.is_array()) throw Error(ErrorCode::ParseError, std::string("certificate field '") + field + "' is not a list");
  std::vector<bool> out;
  for (const auto& c : list) {
    if (!c.is_object() || !c.contains("holds") || !c["holds"].is_boolean())
      throw Error(ErrorCode::ParseError, std::string("malformed clause in '") + field + "'");
    out.push_back(c["holds"].get<bool>());
  }
  return out;
}

void compare(const char* what, const std::vector<bool>& recorded, const std::vector<bool>& recomputed,
             std::vector<std::string>& sink) {
  if (recorded.size() != recomputed.size()) {
    sink.push_back(std::string(what) + ": recorded " + std::to_string(recorded.size()) + " clauses, recomputed " +
                   std::to_string(recomputed.size()));
    return;
  }
  for (std::size_t i = 0; i < recorded.size(); ++i)
    if (recorded[i] != recomputed[i])
      sink.push_back(std::string(what) + " #" + std::to_string(i) + ": recorded " + (recorded[i] ? "true" : "false") +
                     ", recomputed " + (recomputed[i] ? "true" : "false"));
}

Verdict verdict_of(const std::vector<bool>& hyps, const std::vector<bool>& concls) {
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  if (!all(hyps)) return Verdict::hypothesis_not_met;
  return all(concls) ? Verdict::pass : Verdict::violation;
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.contains(name)) throw Error(ErrorCode::ParseError, std::string("certificate lacks field '") + name + "'");
  return doc[name];
}

}  // namespace

CheckResult check_certificate(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "certificate is not an object");
  const TheoremId id = parse_theorem(field(doc, "theorem_id").get<std::string>());
  const GroupSource source = group_from_descriptor(field(doc, "group_descriptor"));
  const GroupTable& g = *source.table;
  const Naive n(g);

  Input in;
  in.g = &g;
  in.set = read_set(g, field(doc, "input_set"));
  const Json& w = field(doc, "witnesses");
  if (w.is_object()) {
    if (w.contains("H")) in.h = read_set(g, w["H"]);
    if (w.contains("K")) in.k = read_set(g, w["K"]);
    if (w.contains("C")) in.c = read_set(g, w["C"]);
    if (w.contains("a")) {
      if (w["a"].is_number_unsigned() && w["a"].get<std::uint64_t>() < g.order())
        in.a = w["a"].get<Element>();
      else
        throw Error(ErrorCode::ParseError, "witness a is not an element index");
    }
    if (w.contains("case")) in.which = w["case"].get<int>();
  } else if (!w.is_null()) {
    throw Error(ErrorCode::ParseError, "certificate witnesses must be an object or null");
  }
  if (id == TheoremId::covering) in.kparam = field(doc, "k").get<int>();

  const bool needs_identity = id != TheoremId::kneser_corollary && id != TheoremId::periodic;
  if (needs_identity && !has(in.set, g.identity()))
    throw Error(ErrorCode::IdentityMissing, "certificate input set lacks the identity");
  if (in.set.empty()) throw Error(ErrorCode::EmptySet, "certificate input set is empty");

  Recomputed re;
  switch (id) {
    case TheoremId::kneser: kneser(n, in, re); break;
    case TheoremId::kneser_corollary: kneser_corollary(n, in, re); break;
    case TheoremId::normal_set: normal_set(n, in, re); break;
    case TheoremId::covering: covering(n, in, re); break;
    case TheoremId::olson: olson(n, in, re); break;
    case TheoremId::periodic: periodic(n, in, re); break;
  }

  CheckResult result;
  const auto hyps = recorded_flags(field(doc, "hypotheses"), "hypotheses");
  const auto concls = recorded_flags(field(doc, "conclusions"), "conclusions");
  result.recorded = parse_verdict(field(doc, "verdict").get<std::string>());
  result.recomputed = verdict_of(re.hypotheses, re.conclusions);
  compare("hypothesis", hyps, re.hypotheses, result.mismatches);
  compare("conclusion", concls, re.conclusions, result.mismatches);
  if (verdict_of(hyps, concls) != result.recorded)
    result.mismatches.push_back("recorded verdict does not follow from the recorded clauses");
  if (result.recorded != result.recomputed)
    result.mismatches.push_back("verdict: recorded " + std::string(wire_name(result.recorded)) + ", recomputed " +
                                std::string(wire_name(result.recomputed)));
  for (auto& p : re.problems) result.mismatches.push_back(std::move(p));
  return result;
}

}  // namespace atomkit
