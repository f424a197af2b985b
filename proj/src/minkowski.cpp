#include "atomkit/minkowski.hpp"

#include <algorithm>

namespace atomkit {
namespace {

void same_universe(const Subset& a, const Subset& b) {
  if (&a.universe() != &b.universe()) throw Error(ErrorCode::UniverseMismatch, "subsets belong to different groups");
}

void require_non_empty(const Subset& a, const char* what) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, what);
}

}  // namespace

Subset product(const Subset& a, const Subset& b) {
  same_universe(a, b);
  const GroupTable& g = a.universe();
  Subset out(g);
  if (b.empty()) return out;
  const auto rhs = b.elements();
  a.for_each([&](Element x) {
    const auto row = g.row(x);
    for (Element y : rhs) out.insert(row[y]);
  });
  return out;
}

Subset inverse_set(const Subset& a) {
  const GroupTable& g = a.universe();
  Subset out(g);
  a.for_each([&](Element x) { out.insert(g.inv(x)); });
  return out;
}

Subset left_translate(Element a, const Subset& set) {
  const GroupTable& g = set.universe();
  Subset out(g);
  const auto row = g.row(a);
  set.for_each([&](Element x) { out.insert(row[x]); });
  return out;
}

Subset right_translate(const Subset& set, Element a) {
  const GroupTable& g = set.universe();
  Subset out(g);
  set.for_each([&](Element x) { out.insert(g.mul(x, a)); });
  return out;
}

Subset difference_left(const Subset& a) {
  require_non_empty(a, "difference set of the empty set");
  return product(inverse_set(a), a);
}

Subset difference_right(const Subset& a) {
  require_non_empty(a, "difference set of the empty set");
  return product(a, inverse_set(a));
}

Subset coset(const Subgroup& h, Element x, CosetSide side) {
  return side == CosetSide::left ? left_translate(x, h.carrier()) : right_translate(h.carrier(), x);
}

ComponentPartition components(const Subset& a, const Subgroup& h, CosetSide side) {
  same_universe(a, h.carrier());
  ComponentPartition out{h, side, {}};
  Subset rest = a;
  while (!rest.empty()) {
    const Element x = rest.min_element();
    Subset part = a & coset(h, x, side);
    rest -= part;
    out.components.push_back(std::move(part));
  }
  std::sort(out.components.begin(), out.components.end(), canonical_less);
  return out;
}

Subgroup left_period(const Subset& x) {
  require_non_empty(x, "period of the empty set");
  const GroupTable& g = x.universe();
  const Element x0 = x.min_element();
  Subset period(g);
  // gX = X forces g x0 in X, i.e. g in X x0^-1.
  x.for_each([&](Element y) {
    const Element candidate = g.mul(y, g.inv(x0));
    if (left_translate(candidate, x) == x) period.insert(candidate);
  });
  return Subgroup::validate(std::move(period));
}

Subgroup right_period(const Subset& x) {
  require_non_empty(x, "period of the empty set");
  const GroupTable& g = x.universe();
  const Element x0 = x.min_element();
  Subset period(g);
  x.for_each([&](Element y) {
    const Element candidate = g.mul(g.inv(x0), y);
    if (right_translate(x, candidate) == x) period.insert(candidate);
  });
  return Subgroup::validate(std::move(period));
}

CosetProductReport check_coset_product(Element a, Element b, const Subgroup& h, const Subset& set_a,
                                       const Subset& set_b) {
  same_universe(set_a, set_b);
  same_universe(set_a, h.carrier());
  const Subset left_coset = coset(h, a, CosetSide::left);
  const Subset right_coset = coset(h, b, CosetSide::right);
  if (!set_a.is_subset_of(left_coset))
    throw Error(ErrorCode::PreconditionViolated, "A is not contained in aH");
  if (!set_b.is_subset_of(right_coset))
    throw Error(ErrorCode::PreconditionViolated, "B is not contained in Hb");
  if (set_a.size() + set_b.size() <= h.size())
    throw Error(ErrorCode::PreconditionViolated, "|A| + |B| > |H| does not hold");
  CosetProductReport report{false, product(set_a, set_b), right_translate(left_coset, b)};
  report.holds = report.product == report.coset;
  return report;
}

CosetIntersectionReport coset_intersection_identity(Element x, Element y, const Subgroup& h) {
  const GroupTable& g = h.universe();
  CosetIntersectionReport report{coset(h, x, CosetSide::left) & coset(h, y, CosetSide::right), std::nullopt};
  if (report.intersection.empty()) return report;
  const Element c = report.intersection.min_element();
  report.pivot = c;
  const Subset conj_x = right_translate(left_translate(x, h.carrier()), g.inv(x));
  const Subset conj_y = right_translate(left_translate(g.inv(y), h.carrier()), y);
  report.left_form_holds = right_translate(conj_x & h.carrier(), c) == report.intersection;
  report.right_form_holds = left_translate(c, conj_y & h.carrier()) == report.intersection;
  return report;
}

}  // namespace atomkit
