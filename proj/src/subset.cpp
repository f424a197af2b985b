#include "atomkit/subset.hpp"

#include <algorithm>

namespace atomkit {

Subset::Subset(const GroupTable& g, std::span<const Element> elements) : Subset(g) {
  for (Element x : elements) {
    if (x >= g.order())
      throw Error(ErrorCode::InvalidArgument,
                  "element " + std::to_string(x) + " outside group of order " + std::to_string(g.order()));
    bits_.set(x);
  }
}

Subset::Subset(const GroupTable& g, Bitset bits) : universe_(&g), bits_(std::move(bits)) {
  if (bits_.bit_count() != g.order())
    throw Error(ErrorCode::UniverseMismatch, "bitset width does not match group order");
}

Subset Subset::full(const GroupTable& g) {
  Subset s(g);
  s.bits_.set_all();
  return s;
}

Subset Subset::singleton(const GroupTable& g, Element x) {
  Subset s(g);
  s.bits_.set(x);
  return s;
}

Subset Subset::from_mask(const GroupTable& g, std::uint64_t mask) {
  if (g.order() > 64) throw Error(ErrorCode::InvalidArgument, "from_mask needs order <= 64");
  if (g.order() < 64 && (mask >> g.order()) != 0)
    throw Error(ErrorCode::InvalidArgument, "mask has bits beyond the group order");
  Subset s(g);
  s.bits_.words()[0] = mask;
  return s;
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

void Subset::check_same(const Subset& o) const {
  if (universe_ != o.universe_) throw Error(ErrorCode::UniverseMismatch, "subsets belong to different groups");
}

bool Subset::is_subset_of(const Subset& o) const {
  check_same(o);
  return bits_.is_subset_of(o.bits_);
}

bool Subset::intersects(const Subset& o) const {
  check_same(o);
  return bits_.intersects(o.bits_);
}

Subset& Subset::operator|=(const Subset& o) {
  check_same(o);
  bits_ |= o.bits_;
  return *this;
}

Subset& Subset::operator&=(const Subset& o) {
  check_same(o);
  bits_ &= o.bits_;
  return *this;
}

Subset& Subset::operator-=(const Subset& o) {
  check_same(o);
  bits_ -= o.bits_;
  return *this;
}

Subset Subset::complement() const { return full(*universe_) - *this; }

bool bitmask_less(const Subset& a, const Subset& b) noexcept {
  return Bitset::compare_value(a.bits(), b.bits()) < 0;
}

bool canonical_less(const Subset& a, const Subset& b) noexcept {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  return bitmask_less(a, b);
}

void canonicalize(std::vector<Subset>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace atomkit
