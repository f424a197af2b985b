#pragma once

#include <memory>
#include <vector>

#include "atomkit/subset.hpp"

namespace atomkit {

inline constexpr std::size_t kDefaultSubgroupEnumerationCap = 48;

// A subset validated to be closed under products and inverses.
class Subgroup {
 public:
  // Throws NotASubgroup naming the failing closure law.
  static Subgroup validate(Subset carrier);
  static bool is_subgroup(const Subset& s);
  static Subgroup trivial(const GroupTable& g);
  static Subgroup whole(const GroupTable& g);

  const Subset& carrier() const noexcept { return carrier_; }
  const GroupTable& universe() const noexcept { return carrier_.universe(); }
  std::size_t size() const noexcept { return carrier_.size(); }
  bool contains(Element x) const noexcept { return carrier_.contains(x); }
  bool is_trivial() const noexcept { return size() == 1; }
  bool is_whole() const noexcept { return size() == universe().order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept { return a.carrier_ == b.carrier_; }

 private:
  explicit Subgroup(Subset carrier) : carrier_(std::move(carrier)) {}
  friend Subgroup subgroup_generated(const Subset& generators);

  Subset carrier_;
};

// Smallest subgroup containing the (non-empty) generator set.
Subgroup subgroup_generated(const Subset& generators);
Subgroup join(const Subgroup& h, const Subgroup& k);

bool is_normal(const Subgroup& h);
// {g : g H g^-1 = H}
Subgroup normalizer(const Subgroup& h);
// a^-1 H a
Subgroup conjugate_subgroup(Element a, const Subgroup& h);
// True iff g S g^-1 = S for every g in the universe.
bool is_conjugation_closed(const Subset& s);

// All subgroups of g ordered by (cardinality, bitmask). Seeds with the cyclic
// subgroups and closes the family under joins.
std::vector<Subgroup> enumerate_subgroups(const GroupTable& g,
                                          std::size_t order_cap = kDefaultSubgroupEnumerationCap);

// A subgroup H of a parent table, re-indexed as a GroupTable of its own so the
// isoperimetric machinery can run inside <S>. Local element i is the i-th
// smallest parent index of H. When H is the whole parent no copy is made.
class Restriction {
 public:
  explicit Restriction(const Subgroup& h);

  const GroupTable& parent() const noexcept { return *parent_; }
  const GroupTable& local() const noexcept { return local_ ? *local_ : *parent_; }
  bool is_identity() const noexcept { return local_ == nullptr; }

  Element to_parent(Element local_element) const noexcept {
    return local_ ? to_parent_[local_element] : local_element;
  }
  Element to_local(Element parent_element) const;
  Subset lower(const Subset& in_parent) const;
  Subset lift(const Subset& in_local) const;

 private:
  const GroupTable* parent_;
  std::unique_ptr<GroupTable> local_;
  std::vector<Element> to_parent_;
  std::vector<std::int64_t> to_local_;
};

}  // namespace atomkit
