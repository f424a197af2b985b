#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atomkit/minkowski.hpp"

namespace atomkit {

enum class Engine { brute, mincut, both };

std::string_view to_string(Engine engine);
Engine parse_engine(std::string_view text);

inline constexpr std::size_t kDefaultBruteCap = 22;
inline constexpr std::size_t kDefaultMincutCap = 4096;

struct ConnectivityOptions {
  std::size_t brute_cap = kDefaultBruteCap;
  std::size_t mincut_cap = kDefaultMincutCap;
};

// kappa(S) = min |XS| - |X| over non-empty X with XS != G, together with the
// minimizers. When no such X exists (S = G) kappa is |G| and `full` is set.
struct AtomReport {
  std::size_t kappa = 0;
  bool full = false;
  std::vector<Subset> atoms;  // every atom, canonical order
  std::optional<Subset> basic_atom;
  bool faithful = true;  // |atom| <= kappa
  // |atom| <= |G \ atom S|. Under this test the identity atom is the unique
  // atom through e and a subgroup; under `faithful` alone it need not be.
  bool exterior_faithful = true;
  Engine engine = Engine::mincut;
  // Brute engine only: every fragment that contains the identity.
  std::vector<Subset> fragments;

  std::size_t atom_size() const noexcept { return atoms.empty() ? 0 : atoms.front().size(); }
  // Atoms containing the identity, canonical order.
  std::vector<Subset> identity_atoms() const;
};

// XS \ X
Subset boundary(const Subset& x, const Subset& s);

// Requires the identity in S (IdentityMissing) and <S> = G (NotGenerating).
// Engine::both runs both engines and throws EngineMismatch if they disagree.
AtomReport connectivity(const Subset& s, Engine engine = Engine::mincut, const ConnectivityOptions& options = {});

// Runs connectivity inside <S> and lifts every set back to the parent group.
AtomReport connectivity_in_generated(const Subset& s, Engine engine = Engine::mincut,
                                     const ConnectivityOptions& options = {});

bool is_faithful(const Subset& s, Engine engine = Engine::mincut);

// The atom containing the identity. For faithful S it is checked to be the
// unique such atom and a subgroup (InvariantViolated otherwise); for
// non-faithful S the canonically least identity atom is returned.
Subset basic_atom(const Subset& s, Engine engine = Engine::mincut);

// Whether X is a fragment of S given kappa(S).
bool is_fragment(const Subset& x, const Subset& s, std::size_t kappa);

struct DualityReport {
  std::size_t kappa = 0;
  std::size_t kappa_inverse = 0;
  bool kappa_equal = false;
  std::size_t fragments_checked = 0;
  // Every fragment's boundary XS \ X is a fragment of S^-1.
  bool boundary_duality = true;
  std::size_t boundary_failures = 0;
  // Every fragment's exterior G \ XS is a fragment of S^-1. Always true: the
  // exterior times S^-1 misses X, which pins its growth at kappa.
  bool exterior_duality = true;
  std::size_t exterior_failures = 0;
  bool faithful = true;
  bool inverse_faithful = true;
  bool abelian = true;
  // Non-faithful S only in non-abelian groups, and then S^-1 is faithful.
  bool non_faithful_clause = true;
  std::string witness;

  bool holds() const noexcept { return kappa_equal && boundary_duality && non_faithful_clause; }
};

DualityReport check_duality(const Subset& s, const ConnectivityOptions& options = {});

struct AtomLatticeReport {
  std::size_t atoms = 0;
  std::size_t fragments = 0;
  // |A| <= |∇F| and A ∩ F != ∅ imply A ⊆ F, with ∇F = FS \ F.
  bool containment = true;
  std::size_t containment_failures = 0;
  // The same implication with |G \ FS| in place of |∇F|.
  bool exterior_containment = true;
  std::size_t exterior_failures = 0;
  bool disjoint = true;  // faithful S: distinct atoms are disjoint
  bool faithful = true;
  std::string witness;

  bool holds() const noexcept { return containment && disjoint; }
};

// Every fragment of S, i.e. all left translates of the identity fragments.
std::vector<Subset> all_fragments(const AtomReport& report);

AtomLatticeReport check_atom_lattice(const Subset& s, const ConnectivityOptions& options = {});

struct TranslateReport {
  struct Entry {
    Element a;
    std::size_t kappa;
    bool full;
    std::vector<Subset> atoms;  // atoms of a^-1 A in the parent group
  };
  std::vector<Entry> left;           // a^-1 A inside <A^-1 A>
  std::vector<Entry> right;          // A a^-1 inside <A A^-1>
  bool left_consistent = true;       // atoms(b^-1 A) = atoms(a^-1 A) a^-1 b
  bool right_consistent = true;      // atoms(A b^-1) = atoms(A a^-1)

  bool holds() const noexcept { return left_consistent && right_consistent; }
};

TranslateReport check_translate_independence(const Subset& a, Engine engine = Engine::mincut,
                                             const ConnectivityOptions& options = {});

}  // namespace atomkit
