#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"

#include "atomkit/isoperimetry.hpp"

namespace atomkit {

using Json = nlohmann::ordered_json;

// A group together with the descriptor that rebuilds it bit-exactly:
//   "cyclic:8"                                a family spec (see families.hpp)
//   {"order": n, "mul": [[...]], "labels": [...]}   an explicit table
//   {"permutations": [[1,0,2], ...]}          permutation generators
struct GroupSource {
  std::shared_ptr<const GroupTable> table;
  Json descriptor;
};

GroupSource group_from_family(std::string_view spec);
GroupSource group_from_table_json(const Json& doc);
GroupSource group_from_permutations(std::vector<Permutation> generators);
GroupSource group_from_descriptor(const Json& descriptor);
GroupSource load_table_file(const std::filesystem::path& path);
GroupSource load_permutation_file(const std::filesystem::path& path);

// One generator per non-empty line, either one-line images "[1,0,2]" or cycle
// notation "(0 1)(2 3)". Cycle lines are padded to the largest point seen.
std::vector<Permutation> parse_permutation_lines(std::string_view text);

// Element token: a decimal index, or a label of the group (tuple labels such
// as "(1,0)" for products, cycle notation for permutation groups).
Element parse_element(const GroupTable& g, std::string_view token);
// Comma-separated elements, optionally wrapped in [] or {}. Commas inside
// parentheses belong to tuple labels.
Subset parse_subset(const GroupTable& g, std::string_view text);

Json subset_to_json(const Subset& s);
Subset subset_from_json(const GroupTable& g, const Json& doc);
// "[0,1,5]" or, with labels, "{e, r, s}".
std::string format_subset(const Subset& s, bool use_labels = false);

Json atom_report_to_json(const AtomReport& report);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace atomkit
