#pragma once

#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "atomkit/bitset.hpp"
#include "atomkit/group.hpp"

namespace atomkit {

// A set of elements of one GroupTable. The table must outlive the subset.
class Subset {
 public:
  Subset() = default;
  explicit Subset(const GroupTable& g) : universe_(&g), bits_(g.order()) {}
  Subset(const GroupTable& g, std::span<const Element> elements);
  Subset(const GroupTable& g, std::initializer_list<Element> elements)
      : Subset(g, std::span<const Element>(elements.begin(), elements.size())) {}
  Subset(const GroupTable& g, Bitset bits);

  static Subset full(const GroupTable& g);
  static Subset singleton(const GroupTable& g, Element x);
  // Single-word constructor for groups of order <= 64.
  static Subset from_mask(const GroupTable& g, std::uint64_t mask);

  bool has_universe() const noexcept { return universe_ != nullptr; }
  const GroupTable& universe() const noexcept { return *universe_; }
  const Bitset& bits() const noexcept { return bits_; }

  bool contains(Element x) const noexcept { return bits_.test(x); }
  void insert(Element x) noexcept { bits_.set(x); }
  void erase(Element x) noexcept { bits_.reset(x); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  // Smallest element index; undefined for the empty set.
  Element min_element() const noexcept { return static_cast<Element>(bits_.find_first()); }
  std::vector<Element> elements() const;
  // Low word of the bitmask; the whole set when the order is <= 64.
  std::uint64_t mask() const noexcept { return bits_.word_count() ? bits_.words()[0] : 0; }

  template <typename F>
  void for_each(F&& f) const {
    bits_.for_each_set([&](std::size_t i) { f(static_cast<Element>(i)); });
  }

  bool is_subset_of(const Subset& o) const;
  bool intersects(const Subset& o) const;

  Subset& operator|=(const Subset& o);
  Subset& operator&=(const Subset& o);
  Subset& operator-=(const Subset& o);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  Subset complement() const;

  friend bool operator==(const Subset& a, const Subset& b) noexcept {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

 private:
  void check_same(const Subset& o) const;

  const GroupTable* universe_ = nullptr;
  Bitset bits_;
};

// Order by bitmask value (bit i weighs 2^i).
bool bitmask_less(const Subset& a, const Subset& b) noexcept;
// Order by (cardinality, bitmask value).
bool canonical_less(const Subset& a, const Subset& b) noexcept;
// Sort canonically and drop duplicates.
void canonicalize(std::vector<Subset>& sets);

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.bits().hash(); }
};

}  // namespace atomkit
