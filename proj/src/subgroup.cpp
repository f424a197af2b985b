#include "atomkit/subgroup.hpp"

#include <algorithm>
#include <unordered_set>

namespace atomkit {

Subgroup Subgroup::validate(Subset carrier) {
  const GroupTable& g = carrier.universe();
  if (!carrier.contains(g.identity())) throw Error(ErrorCode::NotASubgroup, "identity missing");
  const auto members = carrier.elements();
  for (Element x : members) {
    if (!carrier.contains(g.inv(x)))
      throw Error(ErrorCode::NotASubgroup, "not closed under inverse at " + std::to_string(x));
    for (Element y : members)
      if (!carrier.contains(g.mul(x, y)))
        throw Error(ErrorCode::NotASubgroup,
                    "not closed under product at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  }
  if (g.order() % members.size() != 0)
    throw Error(ErrorCode::NotASubgroup, "cardinality does not divide the group order");
  return Subgroup(std::move(carrier));
}

bool Subgroup::is_subgroup(const Subset& s) {
  const GroupTable& g = s.universe();
  if (!s.contains(g.identity())) return false;
  const auto members = s.elements();
  for (Element x : members)
    for (Element y : members)
      if (!s.contains(g.mul(x, y))) return false;
  return true;
}

Subgroup Subgroup::trivial(const GroupTable& g) { return Subgroup(Subset::singleton(g, g.identity())); }

Subgroup Subgroup::whole(const GroupTable& g) { return Subgroup(Subset::full(g)); }

Subgroup subgroup_generated(const Subset& generators) {
  if (generators.empty()) throw Error(ErrorCode::EmptyGeneratorSet, "cannot generate from the empty set");
  const GroupTable& g = generators.universe();
  const auto gens = generators.elements();
  Subset closure = Subset::singleton(g, g.identity());
  std::vector<Element> queue{g.identity()};
  // In a finite group the right-multiplication orbit of e under the generators
  // is already closed under inverses.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(queue[i], s);
      if (!closure.contains(y)) {
        closure.insert(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup(std::move(closure));
}

Subgroup join(const Subgroup& h, const Subgroup& k) { return subgroup_generated(h.carrier() | k.carrier()); }

bool is_normal(const Subgroup& h) {
  const GroupTable& g = h.universe();
  const auto members = h.carrier().elements();
  for (Element x = 0; x < g.order(); ++x)
    for (Element m : members)
      if (!h.contains(g.mul(g.mul(x, m), g.inv(x)))) return false;
  return true;
}

Subgroup normalizer(const Subgroup& h) {
  const GroupTable& g = h.universe();
  const auto members = h.carrier().elements();
  Subset out(g);
  for (Element x = 0; x < g.order(); ++x) {
    bool stable = true;
    for (Element m : members) {
      if (!h.contains(g.mul(g.mul(x, m), g.inv(x)))) {
        stable = false;
        break;
      }
    }
    if (stable) out.insert(x);
  }
  return Subgroup::validate(std::move(out));
}

Subgroup conjugate_subgroup(Element a, const Subgroup& h) {
  const GroupTable& g = h.universe();
  Subset out(g);
  h.carrier().for_each([&](Element m) { out.insert(g.mul(g.mul(g.inv(a), m), a)); });
  return Subgroup::validate(std::move(out));
}

bool is_conjugation_closed(const Subset& s) {
  const GroupTable& g = s.universe();
  const auto members = s.elements();
  for (Element x = 0; x < g.order(); ++x)
    for (Element m : members)
      if (!s.contains(g.mul(g.mul(x, m), g.inv(x)))) return false;
  return true;
}

std::vector<Subgroup> enumerate_subgroups(const GroupTable& g, std::size_t order_cap) {
  if (g.order() > order_cap)
    throw Error(ErrorCode::OrderCapExceeded, "subgroup enumeration limited to order " + std::to_string(order_cap));
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup h) {
    if (seen.insert(h.carrier()).second) found.push_back(std::move(h));
  };
  for (Element x = 0; x < g.order(); ++x) add(subgroup_generated(Subset::singleton(g, x)));
  // Joins with cyclic subgroups reach every finitely generated subgroup, so
  // this worklist reaches the join-closed fixpoint.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element x = 0; x < g.order(); ++x) {
      if (found[i].contains(x)) continue;
      Subset gens = found[i].carrier();
      gens.insert(x);
      add(subgroup_generated(gens));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Subgroup& a, const Subgroup& b) { return canonical_less(a.carrier(), b.carrier()); });
  return found;
}

Restriction::Restriction(const Subgroup& h) : parent_(&h.universe()) {
  if (h.is_whole()) return;
  to_parent_ = h.carrier().elements();
  to_local_.assign(parent_->order(), -1);
  for (std::size_t i = 0; i < to_parent_.size(); ++i) to_local_[to_parent_[i]] = static_cast<std::int64_t>(i);
  local_ = std::make_unique<GroupTable>(GroupTable::induced(*parent_, to_parent_));
}

Element Restriction::to_local(Element parent_element) const {
  if (!local_) return parent_element;
  const auto v = to_local_[parent_element];
  if (v < 0) throw Error(ErrorCode::InvalidArgument, "element " + std::to_string(parent_element) + " outside the subgroup");
  return static_cast<Element>(v);
}

Subset Restriction::lower(const Subset& in_parent) const {
  if (!local_) return in_parent;
  Subset out(*local_);
  in_parent.for_each([&](Element x) { out.insert(to_local(x)); });
  return out;
}

Subset Restriction::lift(const Subset& in_local) const {
  if (!local_) return in_local;
  Subset out(*parent_);
  in_local.for_each([&](Element x) { out.insert(to_parent_[x]); });
  return out;
}

}  // namespace atomkit
