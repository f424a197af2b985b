#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atomkit/error.hpp"

namespace atomkit {

using Element = std::uint32_t;
using Permutation = std::vector<Element>;

// Largest order a table can hold (entries are stored as 16-bit indices).
inline constexpr std::size_t kMaxTableOrder = 65535;
// Default closure cap for permutation-generated groups.
inline constexpr std::size_t kDefaultPermutationCap = 5040;
// Tables up to this order get the direct cubic associativity check; larger
// tables use Light's test over a generating set.
inline constexpr std::size_t kDirectAssociativityLimit = 256;

// A finite group given by its Cayley table. Immutable once built; every
// constructor path validates the group axioms.
class GroupTable {
 public:
  // Validates identity, inverses, cancellation and associativity, in that
  // order; the first failing law is reported with a witness.
  static GroupTable from_table(const std::vector<std::vector<Element>>& mul,
                               std::vector<std::string> labels = {});

  // Breadth-first closure of the generators under composition, where
  // (p*q)[i] = p[q[i]]. Element 0 is the identity, then the distinct non-identity
  // generators in the given order, then the remaining elements in BFS order.
  static GroupTable from_permutations(const std::vector<Permutation>& generators,
                                      std::size_t order_cap = kDefaultPermutationCap);

  // Table of the subgroup formed by `members` (sorted parent indices, already
  // known to be closed). Associativity is inherited and not rechecked.
  static GroupTable induced(const GroupTable& parent, std::span<const Element> members);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  std::span<const std::uint16_t> row(Element a) const noexcept {
    return {table_.data() + std::size_t{a} * order_, order_};
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element a) const { return labels_[a]; }
  // Element whose label matches (whitespace-insensitive), if any.
  std::optional<Element> find_label(std::string_view text) const;

  bool is_abelian() const noexcept;
  std::vector<std::vector<Element>> to_rows() const;

  friend bool operator==(const GroupTable&, const GroupTable&) = default;

 private:
  GroupTable() = default;
  static GroupTable assemble(std::size_t order, std::vector<std::uint16_t> table, Element identity,
                             std::vector<std::string> labels);

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

std::string cycle_notation(std::span<const Element> perm);

}  // namespace atomkit
