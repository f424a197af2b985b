// atomkit command-line interface. Exit codes: 0 success, 2 usage or
// validation error, 3 theorem VIOLATION or certificate mismatch.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "atomkit/checker.hpp"
#include "atomkit/families.hpp"
#include "atomkit/simd/kernels.hpp"
#include "atomkit/sweep.hpp"
#include "atomkit/tight_example.hpp"

namespace {

using namespace atomkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct GroupArgs {
  std::string family;
  std::string table;
  std::string perms;
};

struct SetArgs {
  std::string literal;
  std::string file;
  bool strict = false;
  bool labels = false;
};

void add_group_options(CLI::App* cmd, GroupArgs& g) {
  auto* f = cmd->add_option("--family", g.family, "family spec, e.g. cyclic:8, dihedral:4, product:cyclic:3,cyclic:4");
  auto* t = cmd->add_option("--table", g.table, "JSON file with {order, mul, labels}");
  auto* p = cmd->add_option("--perms", g.perms, "text file of permutation generators, one per line");
  f->excludes(t, p);
  t->excludes(p);
}

void add_set_options(CLI::App* cmd, SetArgs& s, const char* what) {
  auto* lit = cmd->add_option("--set", s.literal, what);
  auto* file = cmd->add_option("--set-file", s.file, "file holding the set literal");
  lit->excludes(file);
  cmd->add_flag("--labels", s.labels, "print elements by label");
}

GroupSource load_group(const GroupArgs& g) {
  const int given = !g.family.empty() + !g.table.empty() + !g.perms.empty();
  if (given != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of --family, --table, --perms");
  if (!g.family.empty()) return group_from_family(g.family);
  if (!g.table.empty()) return load_table_file(g.table);
  return load_permutation_file(g.perms);
}

Subset load_set(const GroupTable& g, const SetArgs& s) {
  if (s.literal.empty() && s.file.empty()) throw Error(ErrorCode::InvalidArgument, "give --set or --set-file");
  return parse_subset(g, s.file.empty() ? s.literal : read_text_file(s.file));
}

// Left-translates by the least element so that the identity is present.
Subset normalize_identity(const Subset& s, bool strict, bool labels) {
  const GroupTable& g = s.universe();
  if (s.empty()) throw Error(ErrorCode::EmptySet, "the set is empty");
  if (s.contains(g.identity())) return s;
  if (strict) throw Error(ErrorCode::IdentityMissing, "the set lacks the identity (--strict forbids translation)");
  const Element r = s.min_element();
  Subset out = left_translate(g.inv(r), s);
  std::cerr << "notice: set lacks the identity; using r^-1 S with r = " << (labels ? g.label(r) : std::to_string(r))
            << ": " << format_subset(out, labels) << "\n";
  return out;
}

bool structured(const std::string& format) {
  if (format == "structured") return true;
  if (format == "text") return false;
  throw Error(ErrorCode::InvalidArgument, "--format must be text or structured");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_analyze(const GroupArgs& ga, const SetArgs& sa, const std::string& engine_name, const std::string& format) {
  const GroupSource src = load_group(ga);
  const GroupTable& g = *src.table;
  const Subset s = normalize_identity(load_set(g, sa), sa.strict, sa.labels);
  const Engine engine = parse_engine(engine_name);
  const std::size_t generated = subgroup_generated(s).size();
  const AtomReport report = connectivity_in_generated(s, engine);
  if (structured(format)) {
    Json doc = atom_report_to_json(report);
    doc["group_descriptor"] = src.descriptor;
    doc["input_set"] = subset_to_json(s);
    doc["generated_order"] = generated;
    std::cout << doc.dump() << "\n";
    return kExitOk;
  }
  std::cout << "group: " << src.descriptor.dump() << " (order " << g.order() << ")\n";
  std::cout << "S = " << format_subset(s, sa.labels) << "  |S| = " << s.size() << ", |<S>| = " << generated << "\n";
  if (generated != g.order()) std::cout << "note: S does not generate the group; analysed inside <S>\n";
  if (report.full) {
    std::cout << "kappa = " << report.kappa << " (full: S = <S>, no fragments)\n";
  } else {
    std::cout << "kappa = " << report.kappa << "\n";
    std::cout << "atoms (" << report.atoms.size() << ", size " << report.atom_size() << "):";
    for (const auto& a : report.atoms) std::cout << " " << format_subset(a, sa.labels);
    std::cout << "\nbasic atom: " << format_subset(*report.basic_atom, sa.labels) << "\n";
  }
  std::cout << "faithful: " << yes_no(report.faithful) << "  (|atom| <= kappa)\n";
  std::cout << "exterior-faithful: " << yes_no(report.exterior_faithful) << "  (|atom| <= |G \\ atom S|)\n";
  std::cout << "engine: " << to_string(report.engine) << "\n";
  return kExitOk;
}

void print_clauses(const char* title, const std::vector<Clause>& clauses) {
  std::cout << title << ":\n";
  if (clauses.empty()) std::cout << "  (none)\n";
  for (const auto& c : clauses) {
    std::cout << "  [" << (c.holds ? "x" : " ") << "] " << c.text;
    if (!c.measured.empty()) std::cout << "  " << c.measured.dump();
    std::cout << "\n";
  }
}

void print_certificate(const Certificate& cert, bool labels) {
  std::cout << "theorem: " << wire_name(cert.theorem);
  if (cert.k) std::cout << " (k = " << *cert.k << ")";
  std::cout << "\ngroup: " << cert.group.dump() << "\n";
  std::cout << "input: " << format_subset(cert.input, labels) << "\n";
  print_clauses("hypotheses", cert.hypotheses);
  if (cert.witnesses) {
    const auto& w = *cert.witnesses;
    std::cout << "witnesses:";
    if (w.h) std::cout << " H = " << format_subset(*w.h, labels);
    if (w.k) std::cout << " K = " << format_subset(*w.k, labels);
    if (w.component) std::cout << " C = " << format_subset(*w.component, labels);
    if (w.a) std::cout << " a = " << (labels ? cert.input.universe().label(*w.a) : std::to_string(*w.a));
    if (w.which != 0) std::cout << " case = " << w.which;
    std::cout << "\n";
  }
  print_clauses("conclusions", cert.conclusions);
  if (!cert.notes.empty()) std::cout << "notes: " << cert.notes.dump() << "\n";
  std::cout << "verdict: " << wire_name(cert.verdict) << "\n";
}

int run_verify(const GroupArgs& ga, const SetArgs& sa, const std::string& theorem, int k,
               const std::string& engine_name, const std::string& format) {
  const GroupSource src = load_group(ga);
  const TheoremId id = parse_theorem(theorem);
  Subset s = load_set(*src.table, sa);
  if (!accepts_input(id, s)) s = normalize_identity(s, sa.strict, sa.labels);
  if (id == TheoremId::covering && k < 2) throw Error(ErrorCode::InvalidArgument, "--k must be at least 2");
  VerifyContext ctx;
  ctx.group_descriptor = src.descriptor;
  ctx.engine = parse_engine(engine_name);
  const Certificate cert = verify(id, s, ctx, k);
  if (structured(format))
    std::cout << certificate_to_json(cert).dump() << "\n";
  else
    print_certificate(cert, sa.labels);
  return cert.verdict == Verdict::violation ? kExitViolation : kExitOk;
}

int run_sweep(const std::string& path, int workers, const std::string& output, const std::string& report_path) {
  Json doc;
  try {
    doc = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
  }
  SweepConfig config = parse_sweep_config(doc);
  if (workers > 0) config.workers = static_cast<unsigned>(workers);
  if (!output.empty()) config.output_path = output;
  const SweepReport report = sweep(config);
  std::cout << sweep_summary_table(report);
  if (!config.output_path.empty()) std::cout << "certificates written to " << config.output_path.string() << "\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << sweep_report_to_json(report).dump(2) << "\n";
  }
  for (const auto& v : report.violations) std::cerr << "VIOLATION: " << v.dump() << "\n";
  return report.violation_count() == 0 ? kExitOk : kExitViolation;
}

int run_construct(const GroupArgs& ga, const std::string& h_text, const std::string& a_text, const std::string& format,
                  bool labels) {
  const GroupSource src = load_group(ga);
  const GroupTable& g = *src.table;
  const Subgroup h = Subgroup::validate(parse_subset(g, h_text));
  const Element a = parse_element(g, a_text);
  VerifyContext ctx;
  ctx.group_descriptor = src.descriptor;
  const TightExample ex = construct_tight_example(h, a, ctx);
  if (structured(format)) {
    std::cout << tight_example_to_json(ex).dump() << "\n";
  } else {
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("not a union"); };
    std::cout << "E = H u Ha = " << format_subset(ex.set, labels) << "  |E| = " << ex.set.size() << "\n";
    std::cout << "a normalizes H: " << yes_no(ex.normalizes) << "\n";
    std::cout << "|E^-1 E| = " << ex.diff_size << "  (3|H| = " << 3 * h.size() << ")\n";
    std::cout << "E^-1 E as left H-cosets: " << opt(ex.left_cosets) << ", as right H-cosets: " << opt(ex.right_cosets)
              << "\n";
    std::cout << "union of three H-cosets: " << yes_no(ex.three_cosets) << "\n";
    if (ex.minimal_cover)
      std::cout << "fewest cosets of one subgroup covering E^-1 E exactly: " << ex.minimal_cover->cosets << " ("
                << (ex.minimal_cover->side == CosetSide::left ? "left" : "right") << " cosets of a subgroup of order "
                << ex.minimal_cover->subgroup_order << ")\n";
    std::cout << "periodic_5_1 on E:\n";
    print_certificate(ex.periodic, labels);
  }
  return ex.periodic.verdict == Verdict::violation ? kExitViolation : kExitOk;
}

std::vector<Json> read_certificates(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    text = read_text_file(path);
  }
  std::vector<Json> docs;
  try {
    docs.push_back(Json::parse(text));
    return docs;
  } catch (const Json::parse_error&) {
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      docs.push_back(Json::parse(line));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + " is not a certificate: " + e.what());
    }
  }
  if (docs.empty()) throw Error(ErrorCode::ParseError, "no certificates found");
  return docs;
}

int run_check_cert(const std::string& path) {
  const auto docs = read_certificates(path);
  std::size_t bad = 0, violations = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const CheckResult r = check_certificate(docs[i]);
    if (r.recomputed == Verdict::violation) ++violations;
    if (r.consistent()) {
      if (docs.size() == 1) std::cout << "certificate ok: verdict " << wire_name(r.recomputed) << "\n";
      continue;
    }
    ++bad;
    std::cout << "certificate " << i + 1 << ": mismatch\n";
    for (const auto& m : r.mismatches) std::cout << "  " << m << "\n";
  }
  if (docs.size() > 1)
    std::cout << docs.size() << " certificates checked, " << bad << " mismatched, " << violations << " VIOLATION\n";
  return bad == 0 && violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isoperimetric atoms, difference sets and certificate checking for finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "atomkit 1.0.0");

  GroupArgs ga;
  SetArgs sa;
  std::string engine = "mincut", format = "text", theorem, h_text, a_text, path, output, report_path;
  int k = 3, workers = 0;

  auto* analyze = app.add_subcommand("analyze", "connectivity, atoms and faithfulness of S");
  add_group_options(analyze, ga);
  add_set_options(analyze, sa, "the set S, e.g. 0,1,4 or \"(0,1),(1,0)\"");
  analyze->add_option("--engine", engine, "brute | mincut | both")->check(CLI::IsMember({"brute", "mincut", "both"}));
  analyze->add_flag("--strict", sa.strict, "reject sets without the identity instead of translating");
  analyze->add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));

  auto* verify_cmd = app.add_subcommand("verify", "check one theorem instance and print its certificate");
  add_group_options(verify_cmd, ga);
  add_set_options(verify_cmd, sa, "the input set");
  verify_cmd->add_option("--theorem", theorem, "kneser_3_1 | kneser_cor_3_2 | normal_3_3 | covering_4_1 | olson_4_2 | periodic_5_1")
      ->required();
  verify_cmd->add_option("--k", k, "covering parameter k >= 2");
  verify_cmd->add_option("--engine", engine, "brute | mincut | both")->check(CLI::IsMember({"brute", "mincut", "both"}));
  verify_cmd->add_flag("--strict", sa.strict, "reject sets without the identity instead of translating");
  verify_cmd->add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "run verifiers over a catalog of groups and subsets");
  sweep_cmd->add_option("config", path, "sweep config (JSON)")->required();
  sweep_cmd->add_option("--workers", workers, "override the worker count");
  sweep_cmd->add_option("--output", output, "override the certificate stream path");
  sweep_cmd->add_option("--report", report_path, "also write the report as JSON");

  auto* construct = app.add_subcommand("construct", "build E = H u Ha and analyse E^-1 E");
  add_group_options(construct, ga);
  construct->add_option("--H", h_text, "subgroup H as a set literal")->required();
  construct->add_option("--a", a_text, "element a outside H")->required();
  construct->add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
  construct->add_flag("--labels", sa.labels, "print elements by label");

  auto* check = app.add_subcommand("check-cert", "independently re-validate certificates (one JSON or NDJSON; - for stdin)");
  check->add_option("file", path, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(ga, sa, engine, format);
    if (*verify_cmd) return run_verify(ga, sa, theorem, k, engine, format);
    if (*sweep_cmd) return run_sweep(path, workers, output, report_path);
    if (*construct) return run_construct(ga, h_text, a_text, format, sa.labels);
    if (*check) return run_check_cert(path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
