#include "atomkit/tight_example.hpp"

namespace atomkit {
namespace {

// Number of side-cosets of h whose union is x, or nullopt if x is not such a union.
std::optional<std::size_t> coset_union_count(const Subset& x, const Subgroup& h, CosetSide side) {
  const Subset stable = side == CosetSide::left ? product(x, h.carrier()) : product(h.carrier(), x);
  if (!(stable == x)) return std::nullopt;
  return x.size() / h.size();
}

}  // namespace

TightExample construct_tight_example(const Subgroup& h, Element a, const VerifyContext& ctx) {
  const GroupTable& g = h.universe();
  if (a >= g.order()) throw Error(ErrorCode::InvalidArgument, "element out of range");
  if (h.contains(a)) throw Error(ErrorCode::PreconditionViolated, "a lies in H");
  Subset gens = h.carrier();
  gens.insert(a);
  const std::size_t overgroup = subgroup_generated(gens).size();
  if (overgroup <= 2 * h.size())
    throw Error(ErrorCode::PreconditionViolated, "|<H, a>| = " + std::to_string(overgroup) + " is not larger than 2|H| = " +
                                                     std::to_string(2 * h.size()));

  TightExample ex;
  ex.set = h.carrier() | right_translate(h.carrier(), a);
  ex.normalizes = normalizer(h).contains(a);
  const Subset diff = difference_left(ex.set);
  ex.diff_size = diff.size();
  ex.left_cosets = coset_union_count(diff, h, CosetSide::left);
  ex.right_cosets = coset_union_count(diff, h, CosetSide::right);
  ex.three_cosets = ex.left_cosets == std::size_t{3} && ex.right_cosets == std::size_t{3};

  if (g.order() <= 48) {
    const auto lattice = ctx.subgroups != nullptr ? *ctx.subgroups : enumerate_subgroups(g);
    for (const auto& l : lattice) {
      for (CosetSide side : {CosetSide::left, CosetSide::right}) {
        const auto count = coset_union_count(diff, l, side);
        if (count && (!ex.minimal_cover || *count < ex.minimal_cover->cosets))
          ex.minimal_cover = CosetCover{*count, l.size(), side};
      }
    }
  }
  ex.periodic = verify_periodic(ex.set, ctx);
  return ex;
}

Json tight_example_to_json(const TightExample& ex) {
  Json doc = Json::object();
  doc["set"] = subset_to_json(ex.set);
  doc["normalizes"] = ex.normalizes;
  doc["diff_size"] = ex.diff_size;
  doc["left_cosets"] = ex.left_cosets ? Json(*ex.left_cosets) : Json(nullptr);
  doc["right_cosets"] = ex.right_cosets ? Json(*ex.right_cosets) : Json(nullptr);
  doc["three_cosets"] = ex.three_cosets;
  if (ex.minimal_cover)
    doc["minimal_cover"] = {{"cosets", ex.minimal_cover->cosets},
                            {"subgroup_order", ex.minimal_cover->subgroup_order},
                            {"side", ex.minimal_cover->side == CosetSide::left ? "left" : "right"}};
  else
    doc["minimal_cover"] = nullptr;
  doc["periodic_certificate"] = certificate_to_json(ex.periodic);
  return doc;
}

}  // namespace atomkit
