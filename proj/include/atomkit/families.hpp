#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "atomkit/group.hpp"

namespace atomkit {

inline constexpr std::size_t kFamilyOrderCap = 5040;

// Builds a group from a family spec:
//   cyclic:N       Z_N, element i is the residue i
//   dihedral:N     order 2N, element i + N*j is r^i s^j, (r^i s^j)(r^k s^l) = r^(i+(-1)^j k) s^(j+l)
//   dicyclic:N     order 4N, element i + 2N*j is a^i x^j with x^2 = a^N, x^-1 a x = a^-1
//   quaternion     dicyclic:2 with labels 1, i, -1, -i, j, k, -j, -k
//   symmetric:M    M <= 5, permutation closure of (0 1) and (0 1 ... M-1)
//   alternating:M  M <= 5, permutation closure of (i i+1 i+2)
//   product:F1,F2,...  direct product, mixed radix with F1 most significant;
//                      nested products are written in parentheses
// Throws UnknownFamily or OrderCapExceeded.
GroupTable make_group(std::string_view spec, std::size_t order_cap = kFamilyOrderCap);

// Family specs of the default sweep catalog, smallest order first.
std::vector<std::string> default_catalog();

}  // namespace atomkit
