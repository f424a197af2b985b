#include "atomkit/isoperimetry.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "atomkit/maxflow.hpp"
#include "atomkit/simd/kernels.hpp"

namespace atomkit {
namespace {

std::string set_text(const Subset& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  s.for_each([&](Element x) {
    out << (first ? "" : ",") << x;
    first = false;
  });
  out << "}";
  return out.str();
}

void check_preconditions(const Subset& s) {
  const GroupTable& g = s.universe();
  if (!s.contains(g.identity())) throw Error(ErrorCode::IdentityMissing, "connectivity needs the identity in S");
  if (subgroup_generated(s).size() != g.order())
    throw Error(ErrorCode::NotGenerating, "S does not generate the group; restrict to <S> first");
}

// Every left translate of every set, canonical order.
std::vector<Subset> translate_closure(const std::vector<Subset>& seeds) {
  std::vector<Subset> out;
  if (seeds.empty()) return out;
  const GroupTable& g = seeds.front().universe();
  out.reserve(seeds.size() * g.order());
  for (const auto& a : seeds)
    for (Element x = 0; x < g.order(); ++x) out.push_back(left_translate(x, a));
  canonicalize(out);
  return out;
}

void finish_report(AtomReport& report, std::vector<Subset> identity_atoms) {
  canonicalize(identity_atoms);
  report.atoms = translate_closure(identity_atoms);
  if (!identity_atoms.empty()) {
    report.basic_atom = identity_atoms.front();
    const std::size_t a = identity_atoms.front().size();
    report.faithful = a <= report.kappa;
    // An atom is a fragment, so |G \ AS| = |G| - |A| - kappa.
    report.exterior_faithful = 2 * a + report.kappa <= identity_atoms.front().universe().order();
  }
}

AtomReport full_report(const GroupTable& g, Engine engine) {
  AtomReport report;
  report.kappa = g.order();
  report.full = true;
  report.engine = engine;
  return report;
}

// Enumerates every X containing the identity. |XS| for a whole batch of
// candidates comes from the expansion kernel with in-neighbourhoods z S^-1.
AtomReport brute_connectivity(const Subset& s, const ConnectivityOptions& options) {
  const GroupTable& g = s.universe();
  const std::size_t n = g.order();
  if (n > options.brute_cap || n > 63)
    throw Error(ErrorCode::OrderCapExceeded, "brute engine limited to order " + std::to_string(options.brute_cap));
  if (s.size() == n) return full_report(g, Engine::brute);

  std::vector<simd::Word> neighborhoods(n, 0);
  const auto members = s.elements();
  for (Element z = 0; z < n; ++z)
    for (Element x : members) neighborhoods[z] |= simd::Word{1} << g.mul(z, g.inv(x));

  const Element e = g.identity();
  const simd::Word low_mask = (simd::Word{1} << e) - 1;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  constexpr std::size_t kBatch = 4096;
  std::vector<simd::Word> batch(kBatch);
  std::vector<std::uint32_t> counts(kBatch);
  const auto& kernels = simd::active();

  std::size_t best = n;
  std::vector<simd::Word> minimizers;
  for (std::uint64_t start = 0; start < total; start += kBatch) {
    const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, total - start));
    for (std::size_t i = 0; i < len; ++i) {
      const std::uint64_t k = start + i;
      batch[i] = (k & low_mask) | (simd::Word{1} << e) | ((k & ~low_mask) << 1);
    }
    kernels.expansion_counts(std::span<const simd::Word>(batch.data(), len), neighborhoods,
                             std::span<std::uint32_t>(counts.data(), len));
    for (std::size_t i = 0; i < len; ++i) {
      if (counts[i] >= n) continue;
      const std::size_t value = counts[i] - static_cast<std::size_t>(std::popcount(batch[i]));
      if (value < best) {
        best = value;
        minimizers.clear();
      }
      if (value == best) minimizers.push_back(batch[i]);
    }
  }

  AtomReport report;
  report.kappa = best;
  report.engine = Engine::brute;
  std::size_t smallest = n + 1;
  for (auto m : minimizers) smallest = std::min<std::size_t>(smallest, std::popcount(m));
  std::vector<Subset> identity_atoms;
  for (auto m : minimizers) {
    report.fragments.push_back(Subset::from_mask(g, m));
    if (static_cast<std::size_t>(std::popcount(m)) == smallest) identity_atoms.push_back(report.fragments.back());
  }
  canonicalize(report.fragments);
  finish_report(report, std::move(identity_atoms));
  return report;
}

// kappa(S) is the least local vertex connectivity from e to a vertex t outside
// S in the Cayley digraph u -> us. Each vertex v splits into v_in -> v_out with
// unit capacity; the minimal source side of a minimum e-t cut is the set of
// vertices whose out-node stays residual-reachable.
AtomReport mincut_connectivity(const Subset& s, const ConnectivityOptions& options) {
  const GroupTable& g = s.universe();
  const std::size_t n = g.order();
  if (n > options.mincut_cap)
    throw Error(ErrorCode::OrderCapExceeded, "min-cut engine limited to order " + std::to_string(options.mincut_cap));
  if (s.size() == n) return full_report(g, Engine::mincut);

  const Element e = g.identity();
  auto in = [](Element v) { return std::size_t{v} * 2; };
  auto out = [](Element v) { return std::size_t{v} * 2 + 1; };
  const auto infinite = static_cast<std::int32_t>(n + 1);

  FlowNetwork net(2 * n);
  std::vector<Element> steps;
  s.for_each([&](Element x) {
    if (x != e) steps.push_back(x);
  });
  for (Element v = 0; v < n; ++v) {
    net.add_edge(in(v), out(v), v == e ? infinite : 1);
    for (Element x : steps) net.add_edge(out(v), in(g.mul(v, x)), infinite);
  }

  std::size_t best = n;
  std::vector<Subset> candidates;
  for (Element t = 0; t < n; ++t) {
    if (s.contains(t)) continue;
    net.reset();
    const auto flow = static_cast<std::size_t>(net.max_flow(out(e), in(t), static_cast<std::int32_t>(best + 1)));
    if (flow > best) continue;
    if (flow < best) {
      best = flow;
      candidates.clear();
    }
    const auto reach = net.residual_reachable(out(e));
    Subset side(g);
    for (Element v = 0; v < n; ++v)
      if (reach[out(v)]) side.insert(v);
    candidates.push_back(std::move(side));
  }

  AtomReport report;
  report.kappa = best;
  report.engine = Engine::mincut;
  std::size_t smallest = n + 1;
  for (const auto& c : candidates) smallest = std::min(smallest, c.size());
  std::vector<Subset> identity_atoms;
  for (auto& c : candidates)
    if (c.size() == smallest) identity_atoms.push_back(std::move(c));
  finish_report(report, std::move(identity_atoms));
  return report;
}

AtomReport lift_report(const Restriction& r, const AtomReport& local) {
  AtomReport out;
  out.kappa = local.kappa;
  out.full = local.full;
  out.faithful = local.faithful;
  out.exterior_faithful = local.exterior_faithful;
  out.engine = local.engine;
  for (const auto& a : local.atoms) out.atoms.push_back(r.lift(a));
  for (const auto& f : local.fragments) out.fragments.push_back(r.lift(f));
  if (local.basic_atom) out.basic_atom = r.lift(*local.basic_atom);
  canonicalize(out.atoms);
  canonicalize(out.fragments);
  return out;
}

}  // namespace

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::brute: return "brute";
    case Engine::mincut: return "mincut";
    case Engine::both: return "both";
  }
  return "unknown";
}

Engine parse_engine(std::string_view text) {
  if (text == "brute") return Engine::brute;
  if (text == "mincut") return Engine::mincut;
  if (text == "both") return Engine::both;
  throw Error(ErrorCode::InvalidArgument, "unknown engine '" + std::string(text) + "' (brute|mincut|both)");
}

std::vector<Subset> AtomReport::identity_atoms() const {
  std::vector<Subset> out;
  for (const auto& a : atoms)
    if (a.contains(a.universe().identity())) out.push_back(a);
  return out;
}

Subset boundary(const Subset& x, const Subset& s) { return product(x, s) - x; }

AtomReport connectivity(const Subset& s, Engine engine, const ConnectivityOptions& options) {
  check_preconditions(s);
  switch (engine) {
    case Engine::brute: return brute_connectivity(s, options);
    case Engine::mincut: return mincut_connectivity(s, options);
    case Engine::both: {
      AtomReport brute = brute_connectivity(s, options);
      const AtomReport cut = mincut_connectivity(s, options);
      if (brute.kappa != cut.kappa || brute.full != cut.full || brute.atoms != cut.atoms)
        throw Error(ErrorCode::EngineMismatch, "brute kappa " + std::to_string(brute.kappa) + " vs min-cut kappa " +
                                                   std::to_string(cut.kappa) + " for S = " + set_text(s));
      brute.engine = Engine::both;
      return brute;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown engine");
}

AtomReport connectivity_in_generated(const Subset& s, Engine engine, const ConnectivityOptions& options) {
  if (!s.contains(s.universe().identity()))
    throw Error(ErrorCode::IdentityMissing, "connectivity needs the identity in S");
  const Restriction r(subgroup_generated(s));
  if (r.is_identity()) return connectivity(s, engine, options);
  return lift_report(r, connectivity(r.lower(s), engine, options));
}

bool is_faithful(const Subset& s, Engine engine) { return connectivity(s, engine).faithful; }

Subset basic_atom(const Subset& s, Engine engine) {
  const AtomReport report = connectivity(s, engine);
  if (report.full) throw Error(ErrorCode::PreconditionViolated, "S = G has no fragments");
  if (report.faithful) {
    const auto ids = report.identity_atoms();
    if (ids.size() != 1)
      throw Error(ErrorCode::InvariantViolated,
                  "faithful S has " + std::to_string(ids.size()) + " atoms containing the identity");
    if (!Subgroup::is_subgroup(ids.front()))
      throw Error(ErrorCode::InvariantViolated, "basic atom " + set_text(ids.front()) + " of faithful S is not a subgroup");
  }
  return *report.basic_atom;
}

bool is_fragment(const Subset& x, const Subset& s, std::size_t kappa) {
  if (x.empty()) return false;
  const Subset xs = product(x, s);
  if (xs.size() == x.universe().order()) return false;
  return xs.size() - x.size() == kappa;
}

DualityReport check_duality(const Subset& s, const ConnectivityOptions& options) {
  const GroupTable& g = s.universe();
  const Subset s_inv = inverse_set(s);
  const AtomReport fwd = connectivity(s, Engine::brute, options);
  const AtomReport bwd = connectivity(s_inv, Engine::brute, options);
  DualityReport report;
  report.kappa = fwd.kappa;
  report.kappa_inverse = bwd.kappa;
  report.kappa_equal = fwd.kappa == bwd.kappa;
  report.faithful = fwd.faithful;
  report.inverse_faithful = bwd.faithful;
  report.abelian = g.is_abelian();
  for (const auto& x : fwd.fragments) {
    ++report.fragments_checked;
    if (!is_fragment(boundary(x, s), s_inv, bwd.kappa)) {
      report.boundary_duality = false;
      ++report.boundary_failures;
      if (report.witness.empty()) report.witness = "boundary of fragment " + set_text(x) + " is not a fragment of S^-1";
    }
    if (!is_fragment(product(x, s).complement(), s_inv, bwd.kappa)) {
      report.exterior_duality = false;
      ++report.exterior_failures;
      report.witness = "exterior of fragment " + set_text(x) + " is not a fragment of S^-1";
    }
  }
  if (!fwd.faithful) {
    report.non_faithful_clause = !report.abelian && bwd.faithful;
    if (!report.non_faithful_clause && report.witness.empty())
      report.witness = report.abelian ? "non-faithful S in an abelian group" : "S and S^-1 both non-faithful";
  }
  return report;
}

std::vector<Subset> all_fragments(const AtomReport& report) { return translate_closure(report.fragments); }

AtomLatticeReport check_atom_lattice(const Subset& s, const ConnectivityOptions& options) {
  const GroupTable& g = s.universe();
  const AtomReport report = connectivity(s, Engine::brute, options);
  AtomLatticeReport out;
  out.faithful = report.faithful;
  out.atoms = report.atoms.size();
  if (report.full) return out;
  const auto fragments = all_fragments(report);
  out.fragments = fragments.size();
  // Every fragment has boundary size kappa, so |A| <= |∇F| reads |A| <= kappa.
  const bool small_atoms = report.atom_size() <= report.kappa;
  for (const auto& f : fragments) {
    const bool small_vs_exterior = report.atom_size() <= g.order() - product(f, s).size();
    if (!small_atoms && !small_vs_exterior) continue;
    for (const auto& a : report.atoms) {
      if (!a.intersects(f) || a.is_subset_of(f)) continue;
      if (small_atoms) {
        out.containment = false;
        ++out.containment_failures;
        if (out.witness.empty()) out.witness = "atom " + set_text(a) + " meets but is not inside fragment " + set_text(f);
      }
      if (small_vs_exterior) {
        out.exterior_containment = false;
        ++out.exterior_failures;
      }
    }
  }
  if (report.faithful) {
    for (std::size_t i = 0; i < report.atoms.size(); ++i)
      for (std::size_t j = i + 1; j < report.atoms.size(); ++j)
        if (report.atoms[i].intersects(report.atoms[j])) {
          out.disjoint = false;
          if (out.witness.empty())
            out.witness = "atoms " + set_text(report.atoms[i]) + " and " + set_text(report.atoms[j]) + " intersect";
        }
  }
  return out;
}

TranslateReport check_translate_independence(const Subset& a, Engine engine, const ConnectivityOptions& options) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "translate check of the empty set");
  const GroupTable& g = a.universe();
  TranslateReport report;
  a.for_each([&](Element x) {
    const AtomReport l = connectivity_in_generated(left_translate(g.inv(x), a), engine, options);
    report.left.push_back({x, l.kappa, l.full, l.atoms});
    const AtomReport r = connectivity_in_generated(right_translate(a, g.inv(x)), engine, options);
    report.right.push_back({x, r.kappa, r.full, r.atoms});
  });
  const auto& ref_left = report.left.front();
  for (const auto& entry : report.left) {
    // b^-1 A = (b^-1 a) a^-1 A, whose atoms are those of a^-1 A right-shifted by a^-1 b.
    const Element shift = g.mul(g.inv(ref_left.a), entry.a);
    std::vector<Subset> moved;
    for (const auto& atom : ref_left.atoms) moved.push_back(right_translate(atom, shift));
    canonicalize(moved);
    if (entry.kappa != ref_left.kappa || entry.full != ref_left.full || moved != entry.atoms)
      report.left_consistent = false;
  }
  for (const auto& entry : report.right)
    if (entry.kappa != report.right.front().kappa || entry.atoms != report.right.front().atoms)
      report.right_consistent = false;
  return report;
}

}  // namespace atomkit
