#include "atomkit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "atomkit/families.hpp"

namespace atomkit {
namespace {

constexpr std::size_t kChunk = 4096;
constexpr std::size_t kGenerateAttempts = 1000;

struct Job {
  TheoremId theorem;
  int k;
  std::string key;
};

struct GroupContext {
  GroupSource source;
  std::vector<Subgroup> subgroups;
  VerifyContext ctx;
};

struct ItemResult {
  std::string lines;
  std::vector<Verdict> verdicts;  // per job; skipped jobs are absent from `ran`
  std::vector<bool> ran;
  std::vector<Json> violations;
};

std::vector<Job> make_jobs(const SweepConfig& config) {
  std::vector<Job> jobs;
  for (TheoremId id : config.theorems) {
    if (id == TheoremId::covering) {
      for (int k : config.covering_k) jobs.push_back({id, k, std::string(wire_name(id)) + "[k=" + std::to_string(k) + "]"});
    } else {
      jobs.push_back({id, 3, std::string(wire_name(id))});
    }
  }
  return jobs;
}

bool keep(const Subset& s, const SweepConfig& config) {
  const std::size_t n = s.size();
  if (n < config.filter.min_size || n == 0) return false;
  if (config.filter.max_size != 0 && n > config.filter.max_size) return false;
  if (config.filter.must_contain_identity && !s.contains(s.universe().identity())) return false;
  return true;
}

bool generates(const Subset& s) { return subgroup_generated(s).size() == s.universe().order(); }

ItemResult run_item(const GroupContext& gc, const Subset& s, const std::vector<Job>& jobs) {
  ItemResult out;
  out.verdicts.resize(jobs.size(), Verdict::hypothesis_not_met);
  out.ran.resize(jobs.size(), false);
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (!accepts_input(jobs[j].theorem, s)) continue;
    const Certificate cert = verify(jobs[j].theorem, s, gc.ctx, jobs[j].k);
    Json doc = certificate_to_json(cert);
    out.lines += doc.dump();
    out.lines += '\n';
    out.verdicts[j] = cert.verdict;
    out.ran[j] = true;
    if (cert.verdict == Verdict::violation) out.violations.push_back(std::move(doc));
  }
  return out;
}

std::vector<ItemResult> run_chunk(const GroupContext& gc, const std::vector<Subset>& items, const std::vector<Job>& jobs,
                                  unsigned workers) {
  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size() && !failed; i = next++) {
      try {
        results[i] = run_item(gc, items[i], jobs);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

// Subsets for one group, in emission order.
std::vector<Subset> select_subsets(const GroupTable& g, const SweepConfig& config, std::mt19937_64& rng,
                                   std::size_t& enumerated) {
  std::vector<Subset> out;
  const std::size_t n = g.order();
  if (config.mode == SweepMode::exhaustive) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      Subset s = Subset::from_mask(g, mask);
      if (!keep(s, config)) continue;
      ++enumerated;
      if (config.filter.must_generate && !generates(s)) continue;
      out.push_back(std::move(s));
    }
    return out;
  }
  const std::size_t lo = std::max<std::size_t>(config.filter.min_size, 1);
  const std::size_t hi = config.filter.max_size == 0 ? n : std::min(n, config.filter.max_size);
  if (lo > hi) return out;
  std::vector<Element> pool(n);
  for (std::size_t sample = 0; sample < config.samples; ++sample) {
    for (std::size_t attempt = 0; attempt < kGenerateAttempts; ++attempt) {
      const std::size_t size = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
      std::iota(pool.begin(), pool.end(), Element{0});
      std::size_t taken = 0;
      if (config.filter.must_contain_identity) {
        std::swap(pool[0], pool[g.identity()]);
        taken = 1;
      }
      for (; taken < size; ++taken) {
        const std::size_t pick = std::uniform_int_distribution<std::size_t>(taken, n - 1)(rng);
        std::swap(pool[taken], pool[pick]);
      }
      Subset s(g, std::span<const Element>(pool.data(), size));
      ++enumerated;
      if (config.filter.must_generate && !generates(s)) continue;
      out.push_back(std::move(s));
      break;
    }
  }
  return out;
}

template <typename T>
T read_or(const Json& doc, const char* key, T fallback) {
  if (!doc.contains(key) || doc[key].is_null()) return fallback;
  try {
    return doc[key].get<T>();
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidConfig, std::string("config field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::size_t SweepReport::violation_count() const noexcept {
  std::size_t total = 0;
  for (const auto& [key, counts] : per_theorem) total += counts.violation;
  return total;
}

SweepConfig parse_sweep_config(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::InvalidConfig, "sweep config must be an object");
  SweepConfig config;
  if (!doc.contains("groups")) throw Error(ErrorCode::InvalidConfig, "sweep config needs 'groups'");
  const Json& groups = doc["groups"];
  const auto max_order = read_or<std::size_t>(doc, "max_order", 0);
  auto add_group = [&](const Json& descriptor) {
    if (max_order != 0 && group_from_descriptor(descriptor).table->order() > max_order) return;
    config.groups.push_back(descriptor);
  };
  if (groups.is_string() && groups.get<std::string>() == "default") {
    for (const auto& spec : default_catalog()) add_group(Json(spec));
  } else if (groups.is_array()) {
    for (const auto& descriptor : groups) add_group(descriptor);
  } else {
    throw Error(ErrorCode::InvalidConfig, "'groups' must be a list of descriptors or \"default\"");
  }

  if (doc.contains("subset_filter")) {
    const Json& f = doc["subset_filter"];
    if (!f.is_object()) throw Error(ErrorCode::InvalidConfig, "'subset_filter' must be an object");
    config.filter.min_size = read_or<std::size_t>(f, "min_size", 1);
    config.filter.max_size = read_or<std::size_t>(f, "max_size", 0);
    config.filter.must_contain_identity = read_or<bool>(f, "must_contain_identity", false);
    config.filter.must_generate = read_or<bool>(f, "must_generate", false);
  }
  for (const auto& id : read_or<std::vector<std::string>>(doc, "theorems", {})) {
    try {
      config.theorems.push_back(parse_theorem(id));
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidConfig, e.what());
    }
  }
  config.covering_k = read_or<std::vector<int>>(doc, "covering_k", {3});
  for (int k : config.covering_k)
    if (k < 2) throw Error(ErrorCode::InvalidConfig, "covering_k entries must be at least 2");

  const auto mode = read_or<std::string>(doc, "mode", "exhaustive");
  if (mode == "exhaustive") {
    config.mode = SweepMode::exhaustive;
  } else if (mode == "random") {
    config.mode = SweepMode::random;
    if (!doc.contains("seed")) throw Error(ErrorCode::InvalidConfig, "random mode needs an explicit 'seed'");
    config.seed = read_or<std::uint64_t>(doc, "seed", 0);
    config.samples = read_or<std::size_t>(doc, "samples", 0);
    if (config.samples == 0) throw Error(ErrorCode::InvalidConfig, "random mode needs 'samples' > 0");
  } else {
    throw Error(ErrorCode::InvalidConfig, "unknown mode '" + mode + "'");
  }
  config.exhaustive_cap = read_or<std::size_t>(doc, "exhaustive_order_cap", kExhaustiveOrderCap);
  if (config.exhaustive_cap > 24) throw Error(ErrorCode::InvalidConfig, "exhaustive_order_cap may not exceed 24");
  try {
    config.engine = parse_engine(read_or<std::string>(doc, "engine", "mincut"));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }
  config.output_path = read_or<std::string>(doc, "output_path", "");
  config.workers = read_or<unsigned>(doc, "workers", 0);
  return config;
}

SweepReport sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<GroupSource> sources;
  for (const auto& descriptor : config.groups) {
    GroupSource src = group_from_descriptor(descriptor);
    if (config.mode == SweepMode::exhaustive && src.table->order() > config.exhaustive_cap)
      throw Error(ErrorCode::OrderCapExceeded, "exhaustive sweep of " + src.descriptor.dump() + " (order " +
                                                   std::to_string(src.table->order()) + ") exceeds the cap of " +
                                                   std::to_string(config.exhaustive_cap));
    sources.push_back(std::move(src));
  }

  std::ofstream out;
  if (!config.output_path.empty()) {
    if (config.output_path.has_parent_path()) std::filesystem::create_directories(config.output_path.parent_path());
    out.open(config.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidConfig, "cannot write " + config.output_path.string());
  }

  const auto jobs = make_jobs(config);
  const unsigned workers = config.workers != 0 ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  SweepReport report;
  report.groups = sources.size();
  for (const auto& job : jobs) report.per_theorem[job.key];

  std::mt19937_64 rng(config.seed);
  for (const auto& src : sources) {
    GroupContext gc{src, {}, {}};
    if (src.table->order() <= 48 && !jobs.empty()) gc.subgroups = enumerate_subgroups(*src.table);
    gc.ctx.group_descriptor = src.descriptor;
    gc.ctx.engine = config.engine;
    gc.ctx.subgroups = gc.subgroups.empty() ? nullptr : &gc.subgroups;

    const auto subsets = select_subsets(*src.table, config, rng, report.subsets_enumerated);
    report.subsets_kept += subsets.size();
    if (jobs.empty()) continue;
    for (std::size_t base = 0; base < subsets.size(); base += kChunk) {
      const std::vector<Subset> chunk(subsets.begin() + static_cast<std::ptrdiff_t>(base),
                                      subsets.begin() + static_cast<std::ptrdiff_t>(std::min(subsets.size(), base + kChunk)));
      auto results = run_chunk(gc, chunk, jobs, workers);
      for (auto& r : results) {
        if (out) out << r.lines;
        for (std::size_t j = 0; j < jobs.size(); ++j) {
          VerdictCounts& c = report.per_theorem[jobs[j].key];
          if (!r.ran[j]) {
            ++c.skipped;
            continue;
          }
          ++report.certificates;
          switch (r.verdicts[j]) {
            case Verdict::pass: ++c.pass; break;
            case Verdict::hypothesis_not_met: ++c.hypothesis_not_met; break;
            case Verdict::violation: ++c.violation; break;
          }
        }
        for (auto& v : r.violations)
          if (report.violations.size() < kReportedViolations) report.violations.push_back(std::move(v));
      }
    }
  }
  if (out) {
    out.flush();
    if (!out) throw Error(ErrorCode::InvalidConfig, "failed writing " + config.output_path.string());
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json sweep_report_to_json(const SweepReport& report) {
  Json doc = Json::object();
  doc["groups"] = report.groups;
  doc["subsets_enumerated"] = report.subsets_enumerated;
  doc["subsets_kept"] = report.subsets_kept;
  doc["certificates"] = report.certificates;
  Json per = Json::object();
  for (const auto& [key, c] : report.per_theorem)
    per[key] = {{"pass", c.pass}, {"hypothesis_not_met", c.hypothesis_not_met}, {"VIOLATION", c.violation},
                {"skipped", c.skipped}};
  doc["per_theorem"] = std::move(per);
  doc["violations"] = report.violation_count();
  doc["wall_seconds"] = report.wall_seconds;
  return doc;
}

std::string sweep_summary_table(const SweepReport& report) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-24s %10s %20s %10s %10s\n", "theorem", "pass", "hypothesis_not_met", "VIOLATION",
                "skipped");
  os << line;
  for (const auto& [key, c] : report.per_theorem) {
    std::snprintf(line, sizeof line, "%-24s %10zu %20zu %10zu %10zu\n", key.c_str(), c.pass, c.hypothesis_not_met,
                  c.violation, c.skipped);
    os << line;
  }
  std::snprintf(line, sizeof line, "groups %zu, subsets %zu (of %zu enumerated), certificates %zu, %.2f s\n",
                report.groups, report.subsets_kept, report.subsets_enumerated, report.certificates, report.wall_seconds);
  os << line;
  return os.str();
}

}  // namespace atomkit
