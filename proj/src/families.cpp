#include "atomkit/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace atomkit {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view text, std::string_view family) {
  text = trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
    throw Error(ErrorCode::UnknownFamily, "bad parameter '" + std::string(text) + "' for " + std::string(family));
  return value;
}

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap || order > kMaxTableOrder)
    throw Error(ErrorCode::OrderCapExceeded, "order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
}

GroupTable build(std::size_t n, auto&& mul, std::vector<std::string> labels) {
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = static_cast<Element>(mul(a, b));
  return GroupTable::from_table(rows, std::move(labels));
}

std::string power_label(const char* base, std::size_t i) {
  if (i == 0) return "";
  if (i == 1) return base;
  return std::string(base) + "^" + std::to_string(i);
}

GroupTable cyclic(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return build(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }, std::move(labels));
}

GroupTable dihedral(std::size_t m) {
  const std::size_t n = 2 * m;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      std::string l = power_label("r", i) + (j ? "s" : "");
      labels.push_back(l.empty() ? "e" : l);
    }
  return build(
      n,
      [m](std::size_t a, std::size_t b) {
        const std::size_t i = a % m, j = a / m, k = b % m, l = b / m;
        const std::size_t rot = j == 0 ? (i + k) % m : (i + m - k) % m;
        return rot + m * ((j + l) % 2);
      },
      std::move(labels));
}

GroupTable dicyclic(std::size_t m, bool quaternion_labels) {
  const std::size_t cyc = 2 * m;
  const std::size_t n = 2 * cyc;
  std::vector<std::string> labels;
  if (quaternion_labels) {
    labels = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  } else {
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t i = 0; i < cyc; ++i) {
        std::string l = power_label("a", i) + (j ? (i ? " x" : "x") : "");
        labels.push_back(l.empty() ? "e" : l);
      }
  }
  return build(
      n,
      [m, cyc](std::size_t p, std::size_t q) {
        const std::size_t i = p % cyc, j = p / cyc, k = q % cyc, l = q / cyc;
        if (j == 0) return (i + k) % cyc + cyc * l;
        // x a^k = a^-k x, and x^2 = a^m.
        const std::size_t rot = (i + cyc - k) % cyc;
        return l == 0 ? rot + cyc : (rot + m) % cyc;
      },
      std::move(labels));
}

GroupTable symmetric(std::size_t m) {
  if (m > 5) throw Error(ErrorCode::OrderCapExceeded, "symmetric groups limited to degree 5");
  std::vector<Permutation> gens;
  if (m >= 2) {
    Permutation swap(m), cycle(m);
    for (std::size_t i = 0; i < m; ++i) {
      swap[i] = static_cast<Element>(i);
      cycle[i] = static_cast<Element>((i + 1) % m);
    }
    std::swap(swap[0], swap[1]);
    gens = {swap, cycle};
  }
  return GroupTable::from_permutations(gens);
}

GroupTable alternating(std::size_t m) {
  if (m > 5) throw Error(ErrorCode::OrderCapExceeded, "alternating groups limited to degree 5");
  std::vector<Permutation> gens;
  for (std::size_t s = 0; s + 2 < m; ++s) {
    Permutation p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<Element>(i);
    p[s] = static_cast<Element>(s + 1);
    p[s + 1] = static_cast<Element>(s + 2);
    p[s + 2] = static_cast<Element>(s);
    gens.push_back(p);
  }
  return GroupTable::from_permutations(gens);
}

std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

GroupTable product(std::string_view args, std::size_t cap) {
  std::vector<GroupTable> factors;
  std::size_t order = 1;
  for (auto part : split_top_level(args)) {
    if (part.size() >= 2 && part.front() == '(' && part.back() == ')') part = part.substr(1, part.size() - 2);
    factors.push_back(make_group(part, cap));
    order *= factors.back().order();
    check_cap(order, cap);
  }
  if (factors.size() < 2) throw Error(ErrorCode::UnknownFamily, "product needs at least two factors");
  std::vector<std::vector<std::size_t>> digits(order);
  std::vector<std::string> labels(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t rest = idx;
    digits[idx].resize(factors.size());
    for (std::size_t f = factors.size(); f-- > 0;) {
      digits[idx][f] = rest % factors[f].order();
      rest /= factors[f].order();
    }
    std::string l = "(";
    for (std::size_t f = 0; f < factors.size(); ++f)
      l += (f ? "," : "") + factors[f].label(static_cast<Element>(digits[idx][f]));
    labels[idx] = l + ")";
  }
  return build(
      order,
      [&](std::size_t a, std::size_t b) {
        std::size_t idx = 0;
        for (std::size_t f = 0; f < factors.size(); ++f)
          idx = idx * factors[f].order() +
                factors[f].mul(static_cast<Element>(digits[a][f]), static_cast<Element>(digits[b][f]));
        return idx;
      },
      std::move(labels));
}

}  // namespace

GroupTable make_group(std::string_view spec, std::size_t order_cap) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  const std::string_view family = trim(spec.substr(0, colon));
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (family == "quaternion") {
    check_cap(8, order_cap);
    return dicyclic(2, true);
  }
  if (family == "product") return product(args, order_cap);
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::UnknownFamily, "unknown group family '" + std::string(spec) + "'");
  const std::size_t n = parse_count(args, family);
  if (family == "cyclic") {
    check_cap(n, order_cap);
    return cyclic(n);
  }
  if (family == "dihedral") {
    check_cap(2 * n, order_cap);
    return dihedral(n);
  }
  if (family == "dicyclic") {
    check_cap(4 * n, order_cap);
    return dicyclic(n, false);
  }
  if (family == "symmetric" || family == "alternating") {
    if (n > 5) throw Error(ErrorCode::OrderCapExceeded, std::string(family) + " groups limited to degree 5");
    GroupTable g = family == "symmetric" ? symmetric(n) : alternating(n);
    check_cap(g.order(), order_cap);
    return g;
  }
  throw Error(ErrorCode::UnknownFamily, "unknown group family '" + std::string(family) + "'");
}

std::vector<std::string> default_catalog() {
  std::vector<std::string> specs;
  for (int n = 2; n <= 16; ++n) specs.push_back("cyclic:" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) specs.push_back("dihedral:" + std::to_string(n));
  for (const char* s : {"quaternion", "dicyclic:3", "symmetric:3", "symmetric:4", "alternating:4",
                        "product:cyclic:2,cyclic:2,cyclic:2", "product:cyclic:2,cyclic:4",
                        "product:cyclic:3,cyclic:3", "product:cyclic:3,cyclic:4", "product:cyclic:2,cyclic:6"})
    specs.emplace_back(s);
  std::stable_sort(specs.begin(), specs.end(), [](const std::string& a, const std::string& b) {
    return make_group(a).order() < make_group(b).order();
  });
  return specs;
}

}  // namespace atomkit
