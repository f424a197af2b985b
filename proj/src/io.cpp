#include "atomkit/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "atomkit/families.hpp"

namespace atomkit {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

Permutation parse_cycles(std::string_view line) {
  Permutation images;
  std::vector<bool> seen;  // cycles must be disjoint
  auto ensure = [&](std::size_t point) {
    while (images.size() <= point) images.push_back(static_cast<Element>(images.size()));
  };
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] != '(') throw Error(ErrorCode::ParseError, "expected '(' in cycle notation: " + std::string(line));
    const auto close = line.find(')', i);
    if (close == std::string_view::npos) throw Error(ErrorCode::ParseError, "unterminated cycle: " + std::string(line));
    std::vector<std::size_t> cycle;
    std::istringstream in{std::string(line.substr(i + 1, close - i - 1))};
    std::string tok;
    while (in >> tok) {
      const auto v = parse_index(tok);
      if (!v) throw Error(ErrorCode::ParseError, "bad point '" + tok + "' in cycle");
      cycle.push_back(*v);
    }
    for (auto p : cycle) {
      ensure(p);
      if (seen.size() <= p) seen.resize(p + 1, false);
      if (seen[p]) throw Error(ErrorCode::ParseError, "point " + std::to_string(p) + " repeated in: " + std::string(line));
      seen[p] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = static_cast<Element>(cycle[(k + 1) % cycle.size()]);
    i = close + 1;
  }
  return images;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GroupSource group_from_family(std::string_view spec) {
  return {std::make_shared<const GroupTable>(make_group(spec)), Json(std::string(trim(spec)))};
}

GroupSource group_from_table_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("mul")) throw Error(ErrorCode::ParseError, "group table needs a \"mul\" field");
  std::vector<std::vector<Element>> rows;
  std::vector<std::string> labels;
  try {
    rows = doc.at("mul").get<std::vector<std::vector<Element>>>();
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("group table: ") + e.what());
  }
  if (doc.contains("order") && doc.at("order").get<std::size_t>() != rows.size())
    throw Error(ErrorCode::ParseError, "\"order\" does not match the number of rows");
  auto table = std::make_shared<const GroupTable>(GroupTable::from_table(rows, labels));
  Json descriptor = Json::object();
  descriptor["order"] = table->order();
  descriptor["mul"] = table->to_rows();
  if (!labels.empty()) descriptor["labels"] = labels;
  return {std::move(table), std::move(descriptor)};
}

GroupSource group_from_permutations(std::vector<Permutation> generators) {
  auto table = std::make_shared<const GroupTable>(GroupTable::from_permutations(generators));
  Json descriptor = Json::object();
  descriptor["permutations"] = generators;
  return {std::move(table), std::move(descriptor)};
}

GroupSource group_from_descriptor(const Json& descriptor) {
  if (descriptor.is_string()) return group_from_family(descriptor.get<std::string>());
  if (descriptor.is_object() && descriptor.contains("permutations"))
    return group_from_permutations(descriptor.at("permutations").get<std::vector<Permutation>>());
  if (descriptor.is_object() && descriptor.contains("mul")) return group_from_table_json(descriptor);
  throw Error(ErrorCode::ParseError, "unrecognised group descriptor");
}

GroupSource load_table_file(const std::filesystem::path& path) {
  Json doc;
  try {
    doc = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return group_from_table_json(doc);
}

GroupSource load_permutation_file(const std::filesystem::path& path) {
  return group_from_permutations(parse_permutation_lines(read_text_file(path)));
}

std::vector<Permutation> parse_permutation_lines(std::string_view text) {
  std::vector<Permutation> perms;
  bool any_cycles = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    auto line = trim(text.substr(line_start, line_end - line_start));
    line_start = line_end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      try {
        perms.push_back(Json::parse(line).get<Permutation>());
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, "bad permutation line '" + std::string(line) + "': " + e.what());
      }
    } else {
      perms.push_back(parse_cycles(line));
      any_cycles = true;
    }
  }
  if (any_cycles) {
    std::size_t degree = 0;
    for (const auto& p : perms) degree = std::max(degree, p.size());
    for (auto& p : perms)
      while (p.size() < degree) p.push_back(static_cast<Element>(p.size()));
  }
  for (const auto& p : perms) {
    std::vector<bool> hit(p.size(), false);
    for (const auto v : p) {
      if (v >= p.size() || hit[v]) throw Error(ErrorCode::ParseError, "permutation line is not a bijection");
      hit[v] = true;
    }
  }
  return perms;
}

Element parse_element(const GroupTable& g, std::string_view token) {
  token = trim(token);
  if (const auto idx = parse_index(token)) {
    if (*idx >= g.order())
      throw Error(ErrorCode::ParseError,
                  "element " + std::string(token) + " outside group of order " + std::to_string(g.order()));
    return static_cast<Element>(*idx);
  }
  if (const auto found = g.find_label(token)) return *found;
  throw Error(ErrorCode::ParseError, "unknown element '" + std::string(token) + "'");
}

Subset parse_subset(const GroupTable& g, std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && ((text.front() == '[' && text.back() == ']') || (text.front() == '{' && text.back() == '}')))
    text = trim(text.substr(1, text.size() - 2));
  Subset out(g);
  if (text.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      const auto token = trim(text.substr(start, i - start));
      if (token.empty()) throw Error(ErrorCode::ParseError, "empty element in set literal");
      out.insert(parse_element(g, token));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(ErrorCode::ParseError, "unbalanced parentheses in set literal");
  return out;
}

Json subset_to_json(const Subset& s) { return Json(s.elements()); }

Subset subset_from_json(const GroupTable& g, const Json& doc) {
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, "set must be a JSON array of element indices");
  Subset out(g);
  for (const auto& v : doc) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::uint64_t>() >= g.order())
      throw Error(ErrorCode::ParseError, "invalid element index in set");
    out.insert(v.get<Element>());
  }
  return out;
}

std::string format_subset(const Subset& s, bool use_labels) {
  std::string out = use_labels ? "{" : "[";
  bool first = true;
  s.for_each([&](Element x) {
    if (!first) out += use_labels ? ", " : ",";
    out += use_labels ? s.universe().label(x) : std::to_string(x);
    first = false;
  });
  return out + (use_labels ? "}" : "]");
}

Json atom_report_to_json(const AtomReport& report) {
  Json doc = Json::object();
  doc["kappa"] = report.kappa;
  doc["full"] = report.full;
  Json atoms = Json::array();
  for (const auto& a : report.atoms) atoms.push_back(subset_to_json(a));
  doc["atoms"] = std::move(atoms);
  doc["basic_atom"] = report.basic_atom ? subset_to_json(*report.basic_atom) : Json(nullptr);
  doc["faithful"] = report.faithful;
  doc["exterior_faithful"] = report.exterior_faithful;
  doc["engine"] = std::string(to_string(report.engine));
  if (!report.fragments.empty()) {
    Json frags = Json::array();
    for (const auto& f : report.fragments) frags.push_back(subset_to_json(f));
    doc["fragments_sampled"] = std::move(frags);
  }
  return doc;
}

}  // namespace atomkit
