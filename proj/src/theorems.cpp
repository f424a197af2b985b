#include "atomkit/theorems.hpp"

#include <algorithm>

namespace atomkit {
namespace {

using Count = long long;

Count card(const Subset& s) { return static_cast<Count>(s.size()); }

Clause clause(std::string text, bool holds, Json measured = Json::object()) {
  return Clause{std::move(text), holds, std::move(measured)};
}

void require_identity(const Subset& s) {
  if (!s.contains(s.universe().identity())) throw Error(ErrorCode::IdentityMissing, "the statement needs 1 in S");
}

void require_non_empty(const Subset& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "the statement needs a non-empty set");
}

Certificate start(TheoremId id, const Subset& input, const VerifyContext& ctx) {
  Certificate cert;
  cert.theorem = id;
  cert.group = ctx.group_descriptor;
  cert.input = input;
  return cert;
}

Certificate finish(Certificate cert) {
  cert.verdict = derive_verdict(cert);
  return cert;
}

// Subgroups of r.local(), canonical order.
std::vector<Subgroup> local_subgroups(const Restriction& r, const VerifyContext& ctx) {
  if (ctx.subgroups != nullptr && !ctx.subgroups->empty() && &ctx.subgroups->front().universe() == &r.parent()) {
    if (r.is_identity()) return *ctx.subgroups;
    const Subset inside = r.lift(Subset::full(r.local()));
    std::vector<Subgroup> out;
    for (const auto& h : *ctx.subgroups)
      if (h.carrier().is_subset_of(inside)) out.push_back(Subgroup::validate(r.lower(h.carrier())));
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) { return canonical_less(a.carrier(), b.carrier()); });
    return out;
  }
  return enumerate_subgroups(r.local());
}

// x^-1 H y
Subset sandwich_left(const GroupTable& g, Element x, const Subset& h, Element y) {
  return left_translate(g.inv(x), right_translate(h, y));
}

// x H y^-1
Subset sandwich_right(const GroupTable& g, Element x, const Subset& h, Element y) {
  return left_translate(x, right_translate(h, g.inv(y)));
}

struct BulletOutcome {
  bool containment = true;
  bool inequality = false;
  Json measured = Json::object();
};

// For all (x,y) in A^2 \ (Ha)^2: x^-1 H y inside A^-1 A, and
// |A^-1 A| > |A^-1 H| + |HA| - 2|H|.
BulletOutcome first_bullet(const Subset& a_set, const Subset& h, Element a, const Subset& diff) {
  const GroupTable& g = a_set.universe();
  const Subset ha = right_translate(h, a);
  BulletOutcome out;
  const auto members = a_set.elements();
  for (Element x : members) {
    for (Element y : members) {
      if (ha.contains(x) && ha.contains(y)) continue;
      if (!sandwich_left(g, x, h, y).is_subset_of(diff)) {
        out.containment = false;
        break;
      }
    }
    if (!out.containment) break;
  }
  const Count lhs = card(diff);
  const Count a_inv_h = card(product(inverse_set(a_set), h));
  const Count h_a = card(product(h, a_set));
  out.inequality = lhs > a_inv_h + h_a - 2 * card(h);
  out.measured = {{"diff_size", lhs}, {"A_inv_H", a_inv_h}, {"HA", h_a}, {"H", card(h)}};
  return out;
}

// For all (x,y) in A^2 \ (aH)^2: x H y^-1 inside A A^-1, and
// |A A^-1| > |AH| + |AH| - 2|H| (as printed).
BulletOutcome second_bullet(const Subset& a_set, const Subset& h, Element a, const Subset& diff_right) {
  const GroupTable& g = a_set.universe();
  const Subset ah = left_translate(a, h);
  BulletOutcome out;
  const auto members = a_set.elements();
  for (Element x : members) {
    for (Element y : members) {
      if (ah.contains(x) && ah.contains(y)) continue;
      if (!sandwich_right(g, x, h, y).is_subset_of(diff_right)) {
        out.containment = false;
        break;
      }
    }
    if (!out.containment) break;
  }
  const Count lhs = card(diff_right);
  const Count a_h = card(product(a_set, h));
  out.inequality = lhs > a_h + a_h - 2 * card(h);
  out.measured = {{"diff_right_size", lhs}, {"AH", a_h}, {"H", card(h)}};
  return out;
}

bool contains_set(const std::vector<Subset>& sets, const Subset& s) {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

}  // namespace

std::string_view wire_name(TheoremId id) {
  switch (id) {
    case TheoremId::kneser: return "kneser_3_1";
    case TheoremId::kneser_corollary: return "kneser_cor_3_2";
    case TheoremId::normal_set: return "normal_3_3";
    case TheoremId::covering: return "covering_4_1";
    case TheoremId::olson: return "olson_4_2";
    case TheoremId::periodic: return "periodic_5_1";
  }
  return "unknown";
}

TheoremId parse_theorem(std::string_view wire) {
  for (auto id : all_theorems())
    if (wire_name(id) == wire) return id;
  throw Error(ErrorCode::InvalidArgument, "unknown theorem id '" + std::string(wire) + "'");
}

std::vector<TheoremId> all_theorems() {
  return {TheoremId::kneser, TheoremId::kneser_corollary, TheoremId::normal_set,
          TheoremId::covering, TheoremId::olson, TheoremId::periodic};
}

std::string_view wire_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::hypothesis_not_met: return "hypothesis_not_met";
    case Verdict::violation: return "VIOLATION";
  }
  return "unknown";
}

Verdict parse_verdict(std::string_view wire) {
  for (auto v : {Verdict::pass, Verdict::hypothesis_not_met, Verdict::violation})
    if (wire_name(v) == wire) return v;
  throw Error(ErrorCode::ParseError, "unknown verdict '" + std::string(wire) + "'");
}

bool Certificate::hypotheses_hold() const noexcept {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Clause& c) { return c.holds; });
}

bool Certificate::conclusions_hold() const noexcept {
  return std::all_of(conclusions.begin(), conclusions.end(), [](const Clause& c) { return c.holds; });
}

Verdict derive_verdict(const Certificate& cert) {
  if (!cert.hypotheses_hold()) return Verdict::hypothesis_not_met;
  return cert.conclusions_hold() ? Verdict::pass : Verdict::violation;
}

Json certificate_to_json(const Certificate& cert) {
  auto clauses = [](const std::vector<Clause>& list) {
    Json out = Json::array();
    for (const auto& c : list) out.push_back({{"clause", c.text}, {"holds", c.holds}, {"measured", c.measured}});
    return out;
  };
  Json doc = Json::object();
  doc["theorem_id"] = std::string(wire_name(cert.theorem));
  doc["group_descriptor"] = cert.group;
  doc["input_set"] = subset_to_json(cert.input);
  if (cert.k) doc["k"] = *cert.k;
  doc["hypotheses"] = clauses(cert.hypotheses);
  if (cert.witnesses) {
    Json w = Json::object();
    if (cert.witnesses->h) w["H"] = subset_to_json(*cert.witnesses->h);
    if (cert.witnesses->k) w["K"] = subset_to_json(*cert.witnesses->k);
    if (cert.witnesses->component) w["C"] = subset_to_json(*cert.witnesses->component);
    if (cert.witnesses->a) w["a"] = *cert.witnesses->a;
    w["case"] = cert.witnesses->which;
    doc["witnesses"] = std::move(w);
  } else {
    doc["witnesses"] = nullptr;
  }
  doc["conclusions"] = clauses(cert.conclusions);
  doc["notes"] = cert.notes;
  doc["verdict"] = std::string(wire_name(cert.verdict));
  return doc;
}

Certificate verify_kneser(const Subset& s_parent, const VerifyContext& ctx) {
  require_identity(s_parent);
  Certificate cert = start(TheoremId::kneser, s_parent, ctx);
  const Restriction r(subgroup_generated(s_parent));
  const GroupTable& g = r.local();
  const Subset s = r.lower(s_parent);
  const AtomReport report = connectivity(s, ctx.engine);
  const Subset diff = difference_left(s);

  cert.hypotheses.push_back(clause("S is faithful", report.faithful,
                                   {{"kappa", report.kappa}, {"atom_size", report.atom_size()}, {"full", report.full}}));
  cert.hypotheses.push_back(clause("|S^-1 S| <= 2|S| - 2", card(diff) <= 2 * card(s) - 2,
                                   {{"diff_size", card(diff)}, {"set_size", card(s)}}));
  cert.hypotheses.push_back(
      clause("S^-1 S != <S>", diff.size() < g.order(), {{"diff_size", card(diff)}, {"group_order", g.order()}}));
  if (!cert.hypotheses_hold()) return finish(std::move(cert));

  const Subset h = *report.basic_atom;
  const bool is_subgroup = Subgroup::is_subgroup(h);
  Witnesses w;
  w.h = r.lift(h);
  bool containment = false;
  if (is_subgroup) {
    const auto parts = components(s, Subgroup::validate(h), CosetSide::right);
    const Subset& c = parts.components.front();
    w.component = r.lift(c);
    containment = true;
    const auto members = s.elements();
    for (Element x : members) {
      for (Element y : members) {
        if (c.contains(x) && c.contains(y)) continue;
        if (!sandwich_left(g, x, h, y).is_subset_of(diff)) containment = false;
      }
    }
  }
  cert.witnesses = w;
  cert.conclusions.push_back(clause("basic atom H is a subgroup", is_subgroup, {{"H", card(h)}}));
  cert.conclusions.push_back(clause("H is non-trivial", h.size() >= 2, {{"H", card(h)}}));
  cert.conclusions.push_back(clause("x^-1 H y is contained in S^-1 S for all x, y in S with (x, y) not in C x C",
                                    containment));
  return finish(std::move(cert));
}

Certificate verify_kneser_corollary(const Subset& a_set, const VerifyContext& ctx) {
  require_non_empty(a_set);
  Certificate cert = start(TheoremId::kneser_corollary, a_set, ctx);
  const GroupTable& g0 = a_set.universe();
  const Subset diff = difference_left(a_set);
  const Subgroup generated = subgroup_generated(diff);
  cert.hypotheses.push_back(clause("|A^-1 A| <= 2|A| - 2", card(diff) <= 2 * card(a_set) - 2,
                                   {{"diff_size", card(diff)}, {"set_size", card(a_set)}}));
  cert.hypotheses.push_back(clause("A^-1 A != <A^-1 A>", diff.size() < generated.size(),
                                   {{"diff_size", card(diff)}, {"generated_order", generated.size()}}));
  if (!cert.hypotheses_hold()) return finish(std::move(cert));

  const Restriction r(generated);
  const Subset diff_right = difference_right(a_set);
  std::vector<Subset> lattice;  // non-trivial proper subgroups of <A^-1 A>, in the parent group
  for (const auto& h : local_subgroups(r, ctx))
    if (!h.is_trivial() && !h.is_whole()) lattice.push_back(r.lift(h.carrier()));

  struct Found {
    Subset h;
    Element a;
    int bullet;
    BulletOutcome outcome;
  };
  std::optional<Found> found;
  auto attempt = [&](const Subset& h, int bullet) {
    if (found || !contains_set(lattice, h)) return;
    a_set.for_each([&](Element a) {
      if (found) return;
      BulletOutcome o = bullet == 1 ? first_bullet(a_set, h, a, diff) : second_bullet(a_set, h, a, diff_right);
      if (o.containment && o.inequality) found = Found{h, a, bullet, std::move(o)};
    });
  };

  // Candidates from the atom construction first: with S = r^-1 A, the basic
  // atom of whichever of S, S^-1 is faithful.
  a_set.for_each([&](Element pivot) {
    if (found) return;
    const Subset s = r.lower(left_translate(g0.inv(pivot), a_set));
    const AtomReport fwd = connectivity(s, ctx.engine);
    if (fwd.full) return;
    const Subset h = r.lift(*fwd.basic_atom);
    if (fwd.faithful) {
      attempt(h, 1);
      // The conjugate lies in <A A^-1>, which may differ from <A^-1 A>;
      // attempt() drops it unless it is in the lattice.
      attempt(right_translate(left_translate(pivot, h), g0.inv(pivot)), 1);
    } else {
      const AtomReport bwd = connectivity(inverse_set(s), ctx.engine);
      if (bwd.basic_atom) {
        attempt(r.lift(*bwd.basic_atom), 2);
        attempt(r.lift(*bwd.basic_atom), 1);
      }
    }
  });
  for (const auto& h : lattice) {
    attempt(h, 1);
    attempt(h, 2);
  }

  cert.conclusions.push_back(clause("a witness (a, H, bullet) exists", found.has_value()));
  if (found) {
    Witnesses w;
    w.h = found->h;
    w.a = found->a;
    w.which = found->bullet;
    cert.witnesses = w;
    cert.conclusions.push_back(clause("H is a non-trivial proper subgroup of <A^-1 A>",
                                      contains_set(lattice, found->h), {{"H", card(found->h)}}));
    if (found->bullet == 1) {
      cert.conclusions.push_back(
          clause("x^-1 H y is contained in A^-1 A for all (x, y) in A^2 \\ (Ha)^2", found->outcome.containment));
      cert.conclusions.push_back(
          clause("|A^-1 A| > |A^-1 H| + |HA| - 2|H|", found->outcome.inequality, found->outcome.measured));
    } else {
      cert.conclusions.push_back(
          clause("x H y^-1 is contained in A A^-1 for all (x, y) in A^2 \\ (aH)^2", found->outcome.containment));
      cert.conclusions.push_back(
          clause("|A A^-1| > |AH| + |AH| - 2|H|", found->outcome.inequality, found->outcome.measured));
    }
    // The second bullet's inequality repeats |AH|; record how the |HA|
    // reading would have decided for this H.
    const Count lhs = card(diff_right);
    const Count a_h = card(product(a_set, found->h));
    const Count h_a = card(product(found->h, a_set));
    const Count hh = card(found->h);
    const bool literal = lhs > 2 * a_h - 2 * hh;
    const bool swapped = lhs > a_h + h_a - 2 * hh;
    cert.notes["second_bullet_inequality"] = {{"diff_right_size", lhs}, {"AH", a_h}, {"HA", h_a},
                                              {"literal_holds", literal}, {"HA_reading_holds", swapped},
                                              {"readings_differ", literal != swapped}};
  }
  return finish(std::move(cert));
}

Certificate verify_normal_set(const Subset& s_parent, const VerifyContext& ctx) {
  require_identity(s_parent);
  Certificate cert = start(TheoremId::normal_set, s_parent, ctx);
  const Restriction r(subgroup_generated(s_parent));
  const GroupTable& g = r.local();
  const Subset s = r.lower(s_parent);
  const Subset diff = difference_left(s);
  cert.hypotheses.push_back(clause("S is closed under conjugation in <S>", is_conjugation_closed(s)));
  cert.hypotheses.push_back(clause("|S^-1 S| <= 2|S| - 2", card(diff) <= 2 * card(s) - 2,
                                   {{"diff_size", card(diff)}, {"set_size", card(s)}}));
  cert.hypotheses.push_back(
      clause("S^-1 S != <S>", diff.size() < g.order(), {{"diff_size", card(diff)}, {"group_order", g.order()}}));
  if (!cert.hypotheses_hold()) return finish(std::move(cert));

  const AtomReport report = connectivity(s, ctx.engine);
  const Subset h = *report.basic_atom;
  const bool is_subgroup = Subgroup::is_subgroup(h);
  const bool normal = is_subgroup && is_normal(Subgroup::validate(h));
  Witnesses w;
  w.h = r.lift(h);
  cert.witnesses = w;
  cert.conclusions.push_back(clause("basic atom H is a subgroup", is_subgroup, {{"H", card(h)}}));
  cert.conclusions.push_back(clause("H is normal in <S>", normal));
  cert.conclusions.push_back(clause("H S^-1 S = S^-1 S", product(h, diff) == diff));

  const Subgroup period = left_period(diff);
  cert.notes["period"] = {{"left_period_size", period.size()},
                          {"contains_basic_atom", h.is_subset_of(period.carrier())},
                          {"equals_basic_atom", period.carrier() == h},
                          {"abelian", g.is_abelian()}};
  return finish(std::move(cert));
}

Certificate verify_covering(const Subset& s_parent, int k, const VerifyContext& ctx) {
  require_identity(s_parent);
  Certificate cert = start(TheoremId::covering, s_parent, ctx);
  cert.k = k;
  const Restriction r(subgroup_generated(s_parent));
  const Subset s = r.lower(s_parent);
  const AtomReport report = connectivity(s, ctx.engine);
  const Count kappa = static_cast<Count>(report.kappa);
  const Count size = card(s);
  cert.hypotheses.push_back(clause("|S| >= k + 1", size >= k + 1, {{"set_size", size}, {"k", k}}));
  cert.hypotheses.push_back(clause("k kappa(S) < (k - 1)|S|", k * kappa < (k - 1) * size,
                                   {{"kappa", kappa}, {"set_size", size}, {"k", k}}));
  if (!cert.hypotheses_hold()) return finish(std::move(cert));

  struct Found {
    Subset h;
    int chain;
    Json measured;
  };
  std::optional<Found> found;
  for (const auto& sub : local_subgroups(r, ctx)) {
    if (sub.is_whole()) continue;
    const Subset& h = sub.carrier();
    const Count hs = card(product(h, s));
    const Count sh = card(product(s, h));
    const Count hn = card(h);
    const bool tail = size > (k - 2) * hn && (k - 2) * hn == kappa;
    const bool first = (k - 1) * hn >= hs && hs >= size && tail;
    const bool second = hs > (k - 1) * hn && (k - 1) * hn >= sh && sh >= size && tail;
    if (first || second) {
      found = Found{h, first ? 1 : 2, {{"H", hn}, {"HS", hs}, {"SH", sh}, {"set_size", size}, {"kappa", kappa}}};
      break;
    }
  }
  cert.conclusions.push_back(clause("a proper subgroup H satisfies chain (i) or chain (ii)", found.has_value()));
  if (found) {
    Witnesses w;
    w.h = r.lift(found->h);
    w.which = found->chain;
    cert.witnesses = w;
    cert.conclusions.push_back(clause("H is a proper subgroup of <S>", true, {{"H", card(found->h)}}));
    cert.conclusions.push_back(
        found->chain == 1
            ? clause("(k-1)|H| >= |HS| >= |S| > (k-2)|H| = kappa(S)", true, found->measured)
            : clause("|HS| > (k-1)|H| >= |SH| >= |S| > (k-2)|H| = kappa(S)", true, found->measured));
  }

  // Exploratory: the atom subgroup of S or S^-1 always satisfies the chain
  // with kappa(S) = |HS| - |H| <= (k-2)|H| in place of the equality.
  Json relaxed = Json::array();
  const AtomReport inv_report = connectivity(inverse_set(s), ctx.engine);
  for (const auto* rep : {&report, &inv_report}) {
    if (!rep->basic_atom || !Subgroup::is_subgroup(*rep->basic_atom)) continue;
    const Subset& h = *rep->basic_atom;
    const Count hn = card(h), hs = card(product(h, s)), sh = card(product(s, h));
    const bool of_s = rep == &report;
    const Count cover = of_s ? hs : sh;
    relaxed.push_back({{"atom_of", of_s ? "S" : "S^-1"},
                       {"H", hn},
                       {"HS", hs},
                       {"SH", sh},
                       {"relaxed_chain", (k - 1) * hn >= cover && cover >= size && cover - hn == kappa &&
                                             kappa <= (k - 2) * hn}});
  }
  cert.notes["atom_chains"] = std::move(relaxed);
  return finish(std::move(cert));
}

Certificate verify_olson(const Subset& s_parent, const VerifyContext& ctx) {
  require_identity(s_parent);
  Certificate cert = start(TheoremId::olson, s_parent, ctx);
  const Restriction r(subgroup_generated(s_parent));
  const Subset s = r.lower(s_parent);
  const AtomReport report = connectivity(s, ctx.engine);
  const Count kappa = static_cast<Count>(report.kappa);
  cert.conclusions.push_back(clause("2 kappa(S) >= |S|", 2 * kappa >= card(s),
                                    {{"kappa", kappa}, {"set_size", card(s)}, {"full", report.full}}));
  return finish(std::move(cert));
}

Certificate verify_periodic(const Subset& a_set, const VerifyContext& ctx) {
  require_non_empty(a_set);
  Certificate cert = start(TheoremId::periodic, a_set, ctx);
  const GroupTable& g0 = a_set.universe();
  const Subset diff_parent = difference_left(a_set);
  const Subgroup generated = subgroup_generated(diff_parent);
  const Count d = card(diff_parent);
  cert.hypotheses.push_back(clause("|A^-1 A| < |<A^-1 A>|", d < static_cast<Count>(generated.size()),
                                   {{"diff_size", d}, {"generated_order", generated.size()}}));
  cert.hypotheses.push_back(
      clause("3|A^-1 A| < 5|A|", 3 * d < 5 * card(a_set), {{"diff_size", d}, {"set_size", card(a_set)}}));
  if (!cert.hypotheses_hold()) return finish(std::move(cert));

  const Restriction r(generated);
  const Subset diff = r.lower(diff_parent);
  const auto lattice = local_subgroups(r, ctx);

  std::vector<Subset> preferred;
  a_set.for_each([&](Element pivot) {
    const Subset s = r.lower(left_translate(g0.inv(pivot), a_set));
    for (const auto& t : {s, inverse_set(s)}) {
      const AtomReport rep = connectivity(t, ctx.engine);
      if (rep.basic_atom) preferred.push_back(*rep.basic_atom);
    }
  });
  std::vector<Subset> h_candidates;
  for (const auto& h : preferred)
    if (3 * card(h) == d && h.is_subset_of(diff) && Subgroup::is_subgroup(h) && !contains_set(h_candidates, h))
      h_candidates.push_back(h);
  for (const auto& h : lattice)
    if (3 * card(h.carrier()) == d && h.carrier().is_subset_of(diff) && !contains_set(h_candidates, h.carrier()))
      h_candidates.push_back(h.carrier());

  std::vector<const Subgroup*> k_candidates;  // normal, stabilising A^-1 A on both sides; largest first
  for (auto it = lattice.rbegin(); it != lattice.rend(); ++it)
    if (is_normal(*it) && product(it->carrier(), diff) == diff && product(diff, it->carrier()) == diff)
      k_candidates.push_back(&*it);

  std::optional<std::pair<Subset, Subset>> found;  // (K, H)
  for (const auto& h : h_candidates) {
    for (const auto* k : k_candidates) {
      if (k->carrier().is_subset_of(h) && 2 * card(k->carrier()) >= card(h)) {
        found.emplace(k->carrier(), h);
        break;
      }
    }
    if (found) break;
  }

  cert.conclusions.push_back(clause("a witness pair (K, H) exists", found.has_value()));
  if (found) {
    const auto& [k, h] = *found;
    Witnesses w;
    w.k = r.lift(k);
    w.h = r.lift(h);
    cert.witnesses = w;
    const Count kn = card(k), hn = card(h);
    cert.conclusions.push_back(clause("K is a normal subgroup of <A^-1 A>", true, {{"K", kn}}));
    cert.conclusions.push_back(clause("K <= H <= A^-1 A with H a subgroup", true, {{"K", kn}, {"H", hn}}));
    cert.conclusions.push_back(clause("2|K| >= |H|", 2 * kn >= hn, {{"K", kn}, {"H", hn}}));
    cert.conclusions.push_back(clause("A^-1 A K = K A^-1 A = A^-1 A", true));
    cert.conclusions.push_back(
        clause("6|K| >= |A^-1 A| = 3|H|", 6 * kn >= d && d == 3 * hn, {{"K", kn}, {"H", hn}, {"diff_size", d}}));
  }
  const Subgroup lp = left_period(diff);
  const Subgroup rp = right_period(diff);
  cert.notes["periods"] = {{"left_period_size", lp.size()}, {"right_period_size", rp.size()}};
  return finish(std::move(cert));
}

Certificate verify(TheoremId id, const Subset& set, const VerifyContext& ctx, int k) {
  switch (id) {
    case TheoremId::kneser: return verify_kneser(set, ctx);
    case TheoremId::kneser_corollary: return verify_kneser_corollary(set, ctx);
    case TheoremId::normal_set: return verify_normal_set(set, ctx);
    case TheoremId::covering: return verify_covering(set, k, ctx);
    case TheoremId::olson: return verify_olson(set, ctx);
    case TheoremId::periodic: return verify_periodic(set, ctx);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown theorem");
}

bool accepts_input(TheoremId id, const Subset& set) {
  switch (id) {
    case TheoremId::kneser_corollary:
    case TheoremId::periodic: return !set.empty();
    default: return set.contains(set.universe().identity());
  }
}

}  // namespace atomkit
