#pragma once

#include <optional>
#include <vector>

#include "atomkit/subgroup.hpp"

namespace atomkit {

// AB = {xy : x in A, y in B}
Subset product(const Subset& a, const Subset& b);
Subset inverse_set(const Subset& a);
// aA
Subset left_translate(Element a, const Subset& set);
// Aa
Subset right_translate(const Subset& set, Element a);
// A^-1 A
Subset difference_left(const Subset& a);
// A A^-1
Subset difference_right(const Subset& a);

enum class CosetSide { left, right };  // xH or Hx

struct ComponentPartition {
  Subgroup base;
  CosetSide side;
  // Non-empty traces of A on cosets of `base`, ordered by (cardinality, bitmask).
  std::vector<Subset> components;
};

ComponentPartition components(const Subset& a, const Subgroup& h, CosetSide side);

// xH or Hx
Subset coset(const Subgroup& h, Element x, CosetSide side);

// {g : gX = X}
Subgroup left_period(const Subset& x);
// {g : Xg = X}
Subgroup right_period(const Subset& x);

struct CosetProductReport {
  bool holds;
  Subset product;  // AB
  Subset coset;    // aHb
};

// Executable form of the coset product lemma: if A lies in aH, B in Hb and
// |A| + |B| > |H|, then AB = aHb. Violated preconditions throw
// PreconditionViolated; `holds == false` means an implementation defect.
CosetProductReport check_coset_product(Element a, Element b, const Subgroup& h, const Subset& set_a,
                                       const Subset& set_b);

struct CosetIntersectionReport {
  Subset intersection;             // xH ∩ Hy
  std::optional<Element> pivot;    // the chosen c, absent when the intersection is empty
  bool left_form_holds = true;     // I = ((x H x^-1) ∩ H) c
  bool right_form_holds = true;    // I = c ((y^-1 H y) ∩ H)
};

CosetIntersectionReport coset_intersection_identity(Element x, Element y, const Subgroup& h);

}  // namespace atomkit
