#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "atomkit/error.hpp"
#include "atomkit/families.hpp"
#include "atomkit/sweep.hpp"
#include "atomkit/tight_example.hpp"

using namespace atomkit;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("atomkit_catalog_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SweepConfig config_for(std::vector<std::string> specs, std::vector<TheoremId> theorems) {
  SweepConfig c;
  for (auto& s : specs) c.groups.emplace_back(s);
  c.theorems = std::move(theorems);
  c.workers = 1;
  return c;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("tight example on Z3 x Z4") {
    const auto g = make_group("product:cyclic:3,cyclic:4");
    const auto h = Subgroup::validate(Subset(g, {0, 4, 8}));
    VerifyContext ctx;
    ctx.group_descriptor = "product:cyclic:3,cyclic:4";
    const auto ex = construct_tight_example(h, 1, ctx);
    CHECK(ex.set == Subset(g, {0, 1, 4, 5, 8, 9}));
    CHECK(ex.normalizes);
    CHECK(ex.diff_size == 9);
    CHECK(ex.three_cosets);
    CHECK(ex.periodic.verdict == Verdict::pass);
    CHECK(*ex.periodic.witnesses->k == h.carrier());
    REQUIRE(ex.minimal_cover);
    CHECK(ex.minimal_cover->cosets == 3);
    const Json doc = tight_example_to_json(ex);
    CHECK(doc["diff_size"] == 9);
    CHECK(doc["periodic_certificate"]["verdict"] == "pass");
  }

  TEST_CASE("tight example preconditions") {
    const auto g = make_group("product:cyclic:3,cyclic:4");
    const auto h = Subgroup::validate(Subset(g, {0, 4, 8}));
    CHECK_THROWS_AS(construct_tight_example(h, 4), Error);
    // a = (0,2): <H, a> has order 6 = 2|H|.
    CHECK_THROWS_AS(construct_tight_example(h, 2), Error);
    try {
      construct_tight_example(h, 2);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PreconditionViolated);
    }
  }

  TEST_CASE("a in N(H) always gives three cosets, over the catalog up to order 24") {
    std::size_t pairs = 0;
    for (const auto& spec : default_catalog()) {
      const auto g = make_group(spec);
      if (g.order() > 24) continue;
      const auto lattice = enumerate_subgroups(g);
      VerifyContext ctx;
      ctx.group_descriptor = spec;
      ctx.subgroups = &lattice;
      for (const auto& h : lattice) {
        const Subgroup n = normalizer(h);
        for (Element a = 0; a < g.order(); ++a) {
          if (h.contains(a) || !n.contains(a)) continue;
          Subset gens = h.carrier();
          gens.insert(a);
          if (subgroup_generated(gens).size() <= 2 * h.size()) continue;
          const auto ex = construct_tight_example(h, a, ctx);
          CAPTURE(spec);
          CHECK(ex.diff_size == 3 * h.size());
          CHECK(ex.three_cosets);
          CHECK(ex.periodic.verdict != Verdict::violation);
          ++pairs;
        }
      }
    }
    CHECK(pairs > 100);
  }

  TEST_CASE("sweep with no theorems emits nothing") {
    const auto report = sweep(config_for({"cyclic:6"}, {}));
    CHECK(report.certificates == 0);
    CHECK(report.subsets_kept == 63);
  }

  TEST_CASE("olson over all subsets of Z8 containing 0") {
    auto config = config_for({"cyclic:8"}, {TheoremId::olson});
    config.filter.must_contain_identity = true;
    const auto report = sweep(config);
    CHECK(report.subsets_enumerated == 128);
    CHECK(report.certificates == 128);
    const auto& c = report.per_theorem.at("olson_4_2");
    CHECK(c.violation == 0);
    CHECK(c.pass + c.hypothesis_not_met == 128);
  }

  TEST_CASE("exhaustive mode visits 2^(n-1) identity sets before generation filtering") {
    auto config = config_for({"dihedral:5"}, {});
    config.filter.must_contain_identity = true;
    config.filter.must_generate = true;
    const auto report = sweep(config);
    CHECK(report.subsets_enumerated == 512);
    CHECK(report.subsets_kept < 512);
  }

  TEST_CASE("periodic sweep over the catalog up to order 12") {
    auto config = config_for({}, {TheoremId::periodic});
    for (const auto& spec : default_catalog())
      if (make_group(spec).order() <= 12) config.groups.emplace_back(spec);
    const auto report = sweep(config);
    const auto& c = report.per_theorem.at("periodic_5_1");
    CHECK(c.violation == 0);
    CHECK(c.pass >= 1);
  }

  TEST_CASE("identity-free inputs are skipped for identity-based statements") {
    const auto report = sweep(config_for({"cyclic:4"}, {TheoremId::olson, TheoremId::periodic}));
    CHECK(report.per_theorem.at("olson_4_2").skipped == 7);
    CHECK(report.per_theorem.at("periodic_5_1").skipped == 0);
  }

  TEST_CASE("output is identical for any worker count") {
    auto config = config_for({"dihedral:4", "cyclic:9"}, all_theorems());
    config.covering_k = {2, 3, 4};
    const auto a = temp_path("w1.ndjson"), b = temp_path("w4.ndjson");
    config.output_path = a;
    sweep(config);
    config.workers = 4;
    config.output_path = b;
    sweep(config);
    const auto sa = slurp(a);
    CHECK_FALSE(sa.empty());
    CHECK(sa == slurp(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }

  TEST_CASE("random mode is reproducible and seed-dependent") {
    auto config = config_for({"symmetric:4", "cyclic:30"}, {TheoremId::olson, TheoremId::periodic});
    config.mode = SweepMode::random;
    config.samples = 25;
    config.seed = 17;
    config.filter.must_contain_identity = true;
    const auto a = temp_path("r1.ndjson"), b = temp_path("r2.ndjson"), c = temp_path("r3.ndjson");
    config.output_path = a;
    sweep(config);
    config.workers = 3;
    config.output_path = b;
    sweep(config);
    config.seed = 18;
    config.output_path = c;
    sweep(config);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) != slurp(c));
    for (const auto& p : {a, b, c}) std::filesystem::remove(p);
  }

  TEST_CASE("config parsing and caps") {
    const auto config = parse_sweep_config(Json::parse(R"({
      "groups": "default", "max_order": 8,
      "subset_filter": {"min_size": 2, "max_size": 4, "must_contain_identity": true},
      "theorems": ["olson_4_2", "covering_4_1"], "covering_k": [3, 4], "workers": 2})"));
    CHECK(config.groups.size() == 13);
    CHECK(config.filter.min_size == 2);
    CHECK(config.covering_k == std::vector<int>{3, 4});
    CHECK(config.mode == SweepMode::exhaustive);

    CHECK_THROWS_AS(parse_sweep_config(Json::parse(R"({"groups": ["cyclic:4"], "mode": "random"})")), Error);
    CHECK_THROWS_AS(parse_sweep_config(Json::parse(R"({"groups": ["cyclic:4"], "theorems": ["nope"]})")), Error);
    CHECK_THROWS_AS(parse_sweep_config(Json::parse(R"({"theorems": []})")), Error);
    CHECK_THROWS_AS(parse_sweep_config(Json::parse(R"({"groups": ["cyclic:4"], "covering_k": [1]})")), Error);

    try {
      sweep(config_for({"cyclic:17"}, {TheoremId::olson}));
      FAIL("expected the cap to trip");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderCapExceeded);
    }
  }

  TEST_CASE("report rendering") {
    auto config = config_for({"cyclic:5"}, {TheoremId::olson});
    const auto report = sweep(config);
    const auto table = sweep_summary_table(report);
    CHECK(table.find("olson_4_2") != std::string::npos);
    const auto doc = sweep_report_to_json(report);
    CHECK(doc["violations"] == 0);
    CHECK(doc["per_theorem"]["olson_4_2"]["skipped"] == 15);
  }
}
