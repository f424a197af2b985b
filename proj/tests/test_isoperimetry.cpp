#include <random>

#include "doctest.h"

#include "atomkit/error.hpp"
#include "atomkit/families.hpp"
#include "atomkit/isoperimetry.hpp"
#include "atomkit/minkowski.hpp"
#include "atomkit/subgroup.hpp"
#include "oracle.hpp"

using namespace atomkit;

namespace {

bool generates(const Subset& s) { return subgroup_generated(s).is_whole(); }

// Random generating S containing the identity.
Subset random_generating(const GroupTable& g, std::mt19937_64& rng, unsigned density) {
  for (;;) {
    Subset s = Subset::singleton(g, g.identity());
    for (Element x = 0; x < g.order(); ++x)
      if (rng() % density == 0) s.insert(x);
    if (generates(s)) return s;
  }
}

oracle::Set as_set(const Subset& s) {
  const auto e = s.elements();
  return oracle::Set(e.begin(), e.end());
}

void check_against_oracle(const Subset& s) {
  const GroupTable& g = s.universe();
  const auto ref = oracle::connectivity(oracle::table_of(g), as_set(s));
  for (Engine engine : {Engine::brute, Engine::mincut}) {
    const AtomReport r = connectivity(s, engine);
    CHECK(r.kappa == ref.kappa);
    CHECK(r.full == ref.full);
    REQUIRE(r.atoms.size() == ref.atoms.size());
    for (std::size_t i = 0; i < ref.atoms.size(); ++i) CHECK(as_set(r.atoms[i]) == ref.atoms[i]);
  }
}

void check_report_invariants(const Subset& s, const AtomReport& r) {
  const GroupTable& g = s.universe();
  if (r.full) {
    CHECK(r.kappa == g.order());
    CHECK(r.atoms.empty());
    return;
  }
  REQUIRE(r.basic_atom.has_value());
  CHECK(r.basic_atom->contains(g.identity()));
  for (const auto& a : r.atoms) {
    CHECK_FALSE(a.empty());
    CHECK(boundary(a, s).size() == r.kappa);
    CHECK_FALSE(product(a, s) == Subset::full(g));
    CHECK(a.size() == r.atom_size());
  }
  if (r.faithful) CHECK(Subgroup::is_subgroup(*r.basic_atom));
}

}  // namespace

TEST_SUITE("isoperimetry") {
  TEST_CASE("boundary") {
    const auto z6 = make_group("cyclic:6");
    CHECK(boundary(Subset::full(z6), Subset(z6, {0, 1})).empty());
    CHECK(boundary(Subset(z6, {0}), Subset(z6, {0, 1})) == Subset(z6, {1}));
    const auto z8 = make_group("cyclic:8");
    CHECK(boundary(Subset(z8, {0, 4}), Subset(z8, {0, 4, 1, 5})) == Subset(z8, {1, 5}));
  }

  TEST_CASE("connectivity examples") {
    const auto z4 = make_group("cyclic:4");
    const auto full = connectivity(Subset::full(z4), Engine::both);
    CHECK(full.full);
    CHECK(full.kappa == 4);
    CHECK(full.atoms.empty());

    const auto z5 = make_group("cyclic:5");
    const auto r5 = connectivity(Subset(z5, {0, 1}), Engine::both);
    CHECK(r5.kappa == 1);
    CHECK(*r5.basic_atom == Subset(z5, {0}));
    CHECK(r5.atoms.size() == 5);
    CHECK(r5.faithful);

    const auto z8 = make_group("cyclic:8");
    const auto r8 = connectivity(Subset(z8, {0, 4, 1, 5}), Engine::both);
    CHECK(r8.kappa == 2);
    CHECK(*r8.basic_atom == Subset(z8, {0, 4}));
    REQUIRE(r8.atoms.size() == 4);
    CHECK(r8.atoms[1] == Subset(z8, {1, 5}));
    CHECK(r8.atoms[3] == Subset(z8, {3, 7}));
    CHECK(basic_atom(Subset(z8, {0, 4, 1, 5})) == Subset(z8, {0, 4}));
  }

  TEST_CASE("preconditions") {
    const auto z8 = make_group("cyclic:8");
    CHECK_THROWS_AS(connectivity(Subset(z8, {1, 2})), Error);
    CHECK_THROWS_AS(connectivity(Subset(z8, {0, 2})), Error);
    try {
      connectivity(Subset(z8, {0, 2}));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotGenerating);
    }
    CHECK_THROWS_AS(basic_atom(Subset::full(z8)), Error);
    const auto in_sub = connectivity_in_generated(Subset(z8, {0, 2}));
    CHECK(in_sub.kappa == 1);
    CHECK(*in_sub.basic_atom == Subset(z8, {0}));
    CHECK(in_sub.atoms.size() == 4);
  }

  TEST_CASE("both engines match the exhaustive oracle on every generating S of small groups") {
    for (const char* spec : {"cyclic:6", "symmetric:3", "dihedral:4", "quaternion", "product:cyclic:2,cyclic:4"}) {
      const auto g = make_group(spec);
      CAPTURE(spec);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        const Subset s = Subset::from_mask(g, m);
        if (!s.contains(g.identity()) || !generates(s)) continue;
        check_against_oracle(s);
      }
    }
  }

  TEST_CASE("oracle agreement on random generating sets up to order 16") {
    std::mt19937_64 rng(2024);
    for (const char* spec : {"dihedral:6", "alternating:4", "dicyclic:3", "cyclic:16", "dihedral:8",
                             "product:cyclic:3,cyclic:4"}) {
      const auto g = make_group(spec);
      CAPTURE(spec);
      for (int i = 0; i < 25; ++i) check_against_oracle(random_generating(g, rng, 2 + i % 4));
    }
  }

  TEST_CASE("report invariants on larger groups (min-cut engine)") {
    std::mt19937_64 rng(99);
    for (const char* spec : {"symmetric:4", "symmetric:5", "product:dihedral:5,cyclic:7", "cyclic:200"}) {
      const auto g = make_group(spec);
      CAPTURE(spec);
      for (int i = 0; i < 6; ++i) {
        const Subset s = random_generating(g, rng, 6 + i * 3);
        const AtomReport r = connectivity(s);
        check_report_invariants(s, r);
        CHECK(2 * r.kappa >= s.size());
        const auto inv = connectivity(inverse_set(s));
        CHECK(inv.kappa == r.kappa);
        if (g.is_abelian()) CHECK(r.faithful);
      }
    }
  }

  TEST_CASE("brute engine beyond its default cap when asked") {
    const auto g = make_group("symmetric:4");
    const Element t = *g.find_label("(0 1)");
    const Element c = *g.find_label("(0 1 2 3)");
    const Subset s(g, {g.identity(), t, c});
    ConnectivityOptions wide;
    wide.brute_cap = 24;
    const auto brute = connectivity(s, Engine::brute, wide);
    const auto cut = connectivity(s, Engine::mincut);
    CHECK(brute.kappa == cut.kappa);
    CHECK(brute.atoms == cut.atoms);
    CHECK_THROWS_AS(connectivity(s, Engine::brute), Error);
  }

  TEST_CASE("abelian groups: every S is faithful") {
    for (const char* spec : {"cyclic:9", "product:cyclic:2,cyclic:6", "product:cyclic:2,cyclic:2,cyclic:2"}) {
      const auto g = make_group(spec);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        const Subset s = Subset::from_mask(g, m);
        if (!s.contains(g.identity()) || !generates(s)) continue;
        CHECK(is_faithful(s));
      }
    }
  }

  TEST_CASE("duality") {
    const auto s3 = make_group("symmetric:3");
    const Element t = *s3.find_label("(0 1)");
    const Element c = *s3.find_label("(0 1 2)");
    const auto d = check_duality(Subset(s3, {s3.identity(), t, c}));
    CHECK(d.kappa == 2);
    CHECK(d.kappa_inverse == 2);
    CHECK(d.kappa_equal);
    CHECK(d.exterior_duality);
    CHECK(d.non_faithful_clause);
    const auto z8 = make_group("cyclic:8");
    const auto dz = check_duality(Subset(z8, {0, 4, 1, 5}));
    CHECK(dz.kappa == 2);
    CHECK(dz.kappa_inverse == 2);
    CHECK(dz.exterior_duality);
    CHECK(dz.fragments_checked > 0);
  }

  TEST_CASE("boundary clause fails on a small cyclic example") {
    // Z4, S = {0,1,2}: kappa 2, the only identity fragment is {0}. Its
    // boundary {1,2} times S^-1 is all of Z4; its exterior {3} grows by 2.
    const auto z4 = make_group("cyclic:4");
    const auto full = connectivity(Subset::full(z4), Engine::both);
    CHECK(full.full);
    CHECK(full.kappa == 4);
    CHECK(full.atoms.empty());

    const auto z5 = make_group("cyclic:5");
    const auto r5 = connectivity(Subset(z5, {0, 1}), Engine::both);
    CHECK(r5.kappa == 1);
    CHECK(*r5.basic_atom == Subset(z5, {0}));
    CHECK(r5.atoms.size() == 5);
    CHECK(r5.faithful);

    const auto z8 = make_group("cyclic:8");
    const auto r8 = connectivity(Subset(z8, {0, 4, 1, 5}), Engine::both);
    CHECK(r8.kappa == 2);
    CHECK(*r8.basic_atom == Subset(z8, {0, 4}));
    REQUIRE(r8.atoms.size() == 4);
    CHECK(r8.atoms[1] == Subset(z8, {1, 5}));
    CHECK(r8.atoms[3] == Subset(z8, {3, 7}));
    CHECK(basic_atom(Subset(z8, {0, 4, 1, 5})) == Subset(z8, {0, 4}));
  }

  TEST_CASE("preconditions") {
    const auto z8 = make_group("cyclic:8");
    CHECK_THROWS_AS(connectivity(Subset(z8, {1, 2})), Error);
    CHECK_THROWS_AS(connectivity(Subset(z8, {0, 2})), Error);
    try {
      connectivity(Subset(z8, {0, 2}));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotGenerating);
    }
    CHECK_THROWS_AS(basic_atom(Subset::full(z8)), Error);
    const auto in_sub = connectivity_in_generated(Subset(z8, {0, 2}));
    CHECK(in_sub.kappa == 1);
    CHECK(*in_sub.basic_atom == Subset(z8, {0}));
    CHECK(in_sub.atoms.size() == 4);
  }

  TEST_CASE("both engines match the exhaustive oracle on every generating S of small groups") {
    for (const char* spec : {"cyclic:6", "symmetric:3", "dihedral:4", "quaternion", "product:cyclic:2,cyclic:4"}) {
      const auto g = make_group(spec);
      CAPTURE(spec);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        const Subset s = Subset::from_mask(g, m);
        if (!s.contains(g.identity()) || !generates(s)) continue;
        check_against_oracle(s);
      }
    }
  }

  TEST_CASE("oracle agreement on random generating sets up to order 16") {
    std::mt19937_64 rng(2024);
    for (const char* spec : {"dihedral:6", "alternating:4", "dicyclic:3", "cyclic:16", "dihedral:8",
                             "product:cyclic:3,cyclic:4"}) {
      const auto g = make_group(spec);
      CAPTURE(spec);
      for (int i = 0; i < 25; ++i) check_against_oracle(random_generating(g, rng, 2 + i % 4));
    }
  }

  TEST_CASE("report invariants on larger groups (min-cut engine)") {
    std::mt19937_64 rng(99);
    for (const char* spec : {"symmetric:4", "symmetric:5", "product:dihedral:5,cyclic:7", "cyclic:200"}) {
      const auto g = make_group(spec);
      CAPTURE(spec);
      for (int i = 0; i < 6; ++i) {
        const Subset s = random_generating(g, rng, 6 + i * 3);
        const AtomReport r = connectivity(s);
        check_report_invariants(s, r);
        CHECK(2 * r.kappa >= s.size());
        const auto inv = connectivity(inverse_set(s));
        CHECK(inv.kappa == r.kappa);
        if (g.is_abelian()) CHECK(r.faithful);
      }
    }
  }

  TEST_CASE("brute engine beyond its default cap when asked") {
    const auto g = make_group("symmetric:4");
    const Element t = *g.find_label("(0 1)");
    const Element c = *g.find_label("(0 1 2 3)");
    const Subset s(g, {g.identity(), t, c});
    ConnectivityOptions wide;
    wide.brute_cap = 24;
    const auto brute = connectivity(s, Engine::brute, wide);
    const auto cut = connectivity(s, Engine::mincut);
    CHECK(brute.kappa == cut.kappa);
    CHECK(brute.atoms == cut.atoms);
    CHECK_THROWS_AS(connectivity(s, Engine::brute), Error);
  }

  TEST_CASE("abelian groups: every S is faithful") {
    for (const char* spec : {"cyclic:9", "product:cyclic:2,cyclic:6", "product:cyclic:2,cyclic:2,cyclic:2"}) {
      const auto g = make_group(spec);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        const Subset s = Subset::from_mask(g, m);
        if (!s.contains(g.identity()) || !generates(s)) continue;
        CHECK(is_faithful(s));
      }
    }
  }

  TEST_CASE("duality") {
    const auto s3 = make_group("symmetric:3");
    const Element t = *s3.find_label("(0 1)");
    const Element c = *s3.find_label("(0 1 2)");
    const auto d = check_duality(Subset(s3, {s3.identity(), t, c}));
    CHECK(d.kappa == 2);
    CHECK(d.kappa_inverse == 2);
    CHECK(d.kappa_equal);
    CHECK(d.exterior_duality);
    CHECK(d.non_faithful_clause);
    const auto z8 = make_group("cyclic:8");
    const auto dz = check_duality(Subset(z8, {0, 4, 1, 5}));
    CHECK(dz.kappa == 2);
    CHECK(dz.kappa_inverse == 2);
    CHECK(dz.exterior_duality);
    CHECK(dz.fragments_checked > 0);
  }

  TEST_CASE("boundary clause fails on a small cyclic example") {
    // Z4, S = {0,1}: X = {0} is a fragment with boundary {1}, and
    // {1} + {0,3} = {0,1} grows by 1 = kappa, so it holds there. X = {0,1}
    // has boundary {2}, also fine. X = {0,1,2} has boundary {3}: fine. The
    // failing sets need |S| >= 3: S = {0,1,2} has kappa 2, fragment {0}
    // with boundary {1,2}, and {1,2} - {0,1,2} = {3,0,1,2} is everything.
    const auto z4 = make_group("cyclic:4");
    const Subset s(z4, {0, 1, 2});
    const Subset x(z4, {0});
    const Subset s_inv = inverse_set(s);
    CHECK(boundary(x, s) == Subset(z4, {1, 2}));
    CHECK(product(boundary(x, s), s_inv).size() == 4);
    CHECK_FALSE(is_fragment(boundary(x, s), s_inv, 2));
    CHECK(is_fragment(product(x, s).complement(), s_inv, 2));
    const auto d = check_duality(s);
    CHECK_FALSE(d.boundary_duality);
    CHECK(d.boundary_failures > 0);
    CHECK(d.exterior_duality);
    CHECK_FALSE(d.holds());
  }

  TEST_CASE("duality and non-faithful sets across a non-abelian group") {
    const auto g = make_group("dihedral:6");
    std::size_t non_faithful = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
      const Subset s = Subset::from_mask(g, m);
      if (!s.contains(g.identity()) || !generates(s)) continue;
      const auto d = check_duality(s);
      CHECK(d.kappa_equal);
      CHECK(d.exterior_duality);
      CHECK(d.non_faithful_clause);
      if (!d.faithful) {
        ++non_faithful;
        CHECK(d.inverse_faithful);
      }
    }
    MESSAGE("non-faithful generating sets in D6: " << non_faithful);
  }

  TEST_CASE("atom lattice") {
    const auto z8 = make_group("cyclic:8");
    const auto r = check_atom_lattice(Subset(z8, {0, 4, 1, 5}));
    CHECK(r.atoms == 4);
    CHECK(r.holds());
    const auto z5 = make_group("cyclic:5");
    const auto r5 = check_atom_lattice(Subset(z5, {0, 1}));
    CHECK(r5.atoms == 5);
    CHECK(r5.disjoint);
  }

  TEST_CASE("atom-size test against kappa admits overlapping atoms in A4") {
    const auto g = make_group("alternating:4");
    const Subset s(g, {0, 1, 2, 3, 4, 6, 7, 9});
    const auto r = connectivity(s, Engine::both);
    CHECK(r.kappa == 6);
    CHECK(r.atom_size() == 4);
    CHECK(r.faithful);
    CHECK_FALSE(r.exterior_faithful);
    CHECK(r.identity_atoms().size() == 2);
    CHECK_FALSE(Subgroup::is_subgroup(*r.basic_atom));
    bool invariant_violated = false;
    try {
      basic_atom(s);
    } catch (const Error& e) {
      invariant_violated = e.code() == ErrorCode::InvariantViolated;
    }
    CHECK(invariant_violated);
    const auto lattice = check_atom_lattice(s);
    CHECK_FALSE(lattice.containment);
    CHECK(lattice.exterior_containment);
  }

  TEST_CASE("exterior-faithful sets have a unique subgroup atom through e") {
    for (const char* spec : {"alternating:4", "dihedral:6", "dicyclic:3"}) {
      const auto g = make_group(spec);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        const Subset s = Subset::from_mask(g, m);
        if (!s.contains(g.identity()) || !generates(s)) continue;
        const auto r = connectivity(s, Engine::mincut);
        if (r.full || !r.exterior_faithful) continue;
        const auto ids = r.identity_atoms();
        REQUIRE(ids.size() == 1);
        CHECK(Subgroup::is_subgroup(ids.front()));
        CHECK(check_atom_lattice(s).exterior_containment);
      }
    }
  }

  TEST_CASE("every fragment is a translate-closed fragment") {
    const auto g = make_group("alternating:4");
    std::mt19937_64 rng(8);
    for (int i = 0; i < 10; ++i) {
      const Subset s = random_generating(g, rng, 3);
      const auto report = connectivity(s, Engine::brute);
      if (report.full) continue;
      for (const auto& f : all_fragments(report)) CHECK(is_fragment(f, s, report.kappa));
    }
  }

  TEST_CASE("conjugation-closed sets have a normal basic atom shared with the inverse") {
    const auto g = make_group("symmetric:4");
    std::size_t seen = 0;
    // Unions of conjugacy classes containing the identity.
    std::vector<Subset> classes;
    Subset covered(g);
    for (Element x = 0; x < g.order(); ++x) {
      if (covered.contains(x)) continue;
      Subset cls(g);
      for (Element y = 0; y < g.order(); ++y) cls.insert(g.mul(g.mul(y, x), g.inv(y)));
      covered |= cls;
      if (!cls.contains(g.identity())) classes.push_back(cls);
    }
    for (std::uint32_t m = 0; m < (1U << classes.size()); ++m) {
      Subset s = Subset::singleton(g, g.identity());
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (m >> i & 1U) s |= classes[i];
      if (!generates(s)) continue;
      const auto r = connectivity(s);
      if (r.full || !r.faithful) continue;
      ++seen;
      CHECK(is_normal(Subgroup::validate(*r.basic_atom)));
      CHECK(*connectivity(inverse_set(s)).basic_atom == *r.basic_atom);
    }
    CHECK(seen > 0);
  }

  TEST_CASE("translate independence") {
    const auto z8 = make_group("cyclic:8");
    const auto r = check_translate_independence(Subset(z8, {1, 5, 2, 6}));
    CHECK(r.holds());
    REQUIRE(r.left.size() == 4);
    for (const auto& entry : r.left) {
      CHECK(entry.kappa == 2);
      CHECK(std::find(entry.atoms.begin(), entry.atoms.end(), Subset(z8, {0, 4})) != entry.atoms.end());
    }
    const auto single = check_translate_independence(Subset(z8, {3}));
    CHECK(single.holds());
    CHECK(single.left.size() == 1);
    const auto s4 = make_group("symmetric:4");
    std::mt19937_64 rng(4);
    for (int i = 0; i < 5; ++i) {
      Subset a(s4);
      for (Element x = 0; x < s4.order(); ++x)
        if (rng() % 4 == 0) a.insert(x);
      if (a.empty()) continue;
      CHECK(check_translate_independence(a).holds());
    }
  }

  TEST_CASE("engine names") {
    CHECK(parse_engine("brute") == Engine::brute);
    CHECK(parse_engine("both") == Engine::both);
    CHECK(to_string(Engine::mincut) == "mincut");
    CHECK_THROWS_AS(parse_engine("fast"), Error);
  }
}
