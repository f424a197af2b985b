#pragma once

#include <optional>

#include "atomkit/theorems.hpp"

namespace atomkit {

struct CosetCover {
  std::size_t cosets = 0;          // |E^-1 E| / |L|
  std::size_t subgroup_order = 0;  // |L|
  CosetSide side = CosetSide::left;
};

struct TightExample {
  Subset set;                  // E = H u Ha
  bool normalizes = false;     // a in N(H)
  std::size_t diff_size = 0;   // |E^-1 E|
  std::optional<std::size_t> left_cosets;   // E^-1 E as a union of xH, if it is one
  std::optional<std::size_t> right_cosets;  // E^-1 E as a union of Hx, if it is one
  bool three_cosets = false;   // both counts equal 3
  // Fewest cosets of a single subgroup whose union is E^-1 E; only computed
  // when the ambient group is small enough to enumerate its subgroups.
  std::optional<CosetCover> minimal_cover;
  Certificate periodic;        // verify_periodic on E
};

// Requires a outside H and |<H u {a}>| > 2|H|; throws PreconditionViolated.
TightExample construct_tight_example(const Subgroup& h, Element a, const VerifyContext& ctx = {});

Json tight_example_to_json(const TightExample& ex);

}  // namespace atomkit
