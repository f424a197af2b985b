#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atomkit/io.hpp"

namespace atomkit {

// Wire names are part of the certificate format.
enum class TheoremId {
  kneser,            // "kneser_3_1"      atom-coset structure of S^-1 S
  kneser_corollary,  // "kneser_cor_3_2"  the same for arbitrary A, either side
  normal_set,        // "normal_3_3"      conjugation-closed S: H S^-1 S = S^-1 S
  covering,          // "covering_4_1"    few cosets cover S when kappa is small
  olson,             // "olson_4_2"       2 kappa(S) >= |S|
  periodic,          // "periodic_5_1"    |A^-1 A| < 5|A|/3 forces periodicity
};

std::string_view wire_name(TheoremId id);
TheoremId parse_theorem(std::string_view wire);
std::vector<TheoremId> all_theorems();

enum class Verdict { pass, hypothesis_not_met, violation };
std::string_view wire_name(Verdict v);
Verdict parse_verdict(std::string_view wire);

struct Clause {
  std::string text;
  bool holds = false;
  Json measured = Json::object();
};

struct Witnesses {
  std::optional<Subset> h;
  std::optional<Subset> k;
  std::optional<Subset> component;
  std::optional<Element> a;
  int which = 0;  // bullet or chain number; 0 when not applicable
};

// A verification record. Sets are stored as element indices of the group
// described by `group`; `notes` carries exploratory measurements that do not
// enter the verdict.
struct Certificate {
  TheoremId theorem = TheoremId::olson;
  Json group;
  Subset input;
  std::optional<int> k;  // covering only
  std::vector<Clause> hypotheses;
  std::optional<Witnesses> witnesses;
  std::vector<Clause> conclusions;
  Json notes = Json::object();
  Verdict verdict = Verdict::hypothesis_not_met;

  bool hypotheses_hold() const noexcept;
  bool conclusions_hold() const noexcept;
};

// pass iff every hypothesis and conclusion holds; VIOLATION iff the hypotheses
// hold and some conclusion fails.
Verdict derive_verdict(const Certificate& cert);

Json certificate_to_json(const Certificate& cert);

struct VerifyContext {
  Json group_descriptor = nullptr;
  Engine engine = Engine::mincut;
  // Optional precomputed subgroup list of the parent group, reused instead of
  // enumerating per call.
  const std::vector<Subgroup>* subgroups = nullptr;
};

// Each verifier restricts to the subgroup the statement lives in (<S> or
// <A^-1 A>), checks the hypotheses in exact integer arithmetic and, when they
// hold, records witnesses and conclusions.
Certificate verify_kneser(const Subset& s, const VerifyContext& ctx = {});
Certificate verify_kneser_corollary(const Subset& a, const VerifyContext& ctx = {});
Certificate verify_normal_set(const Subset& s, const VerifyContext& ctx = {});
Certificate verify_covering(const Subset& s, int k, const VerifyContext& ctx = {});
Certificate verify_olson(const Subset& s, const VerifyContext& ctx = {});
Certificate verify_periodic(const Subset& a, const VerifyContext& ctx = {});

// Dispatch by id; `k` is used by the covering verifier only.
Certificate verify(TheoremId id, const Subset& set, const VerifyContext& ctx = {}, int k = 3);

// Whether the verifier accepts this input without throwing (e.g. the
// identity-based statements need e in S).
bool accepts_input(TheoremId id, const Subset& set);

}  // namespace atomkit
