#include "atomkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace atomkit {
namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream out;
  out << "(" << a << ", " << b << ", " << c << ")";
  return out.str();
}

std::string normalize_label(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      pending_space = !out.empty();
      continue;
    }
    const bool tight = ch == '(' || ch == ')' || ch == ',';
    if (pending_space && !tight && out.back() != '(' && out.back() != ',') out.push_back(' ');
    pending_space = false;
    out.push_back(ch);
  }
  return out;
}

// Light's associativity test: it suffices to check (x g) y = x (g y) for g
// ranging over a generating set.
void check_associativity_light(std::size_t n, const std::vector<std::uint16_t>& t) {
  auto m = [&](std::size_t a, std::size_t b) -> std::size_t { return t[a * n + b]; };
  std::vector<char> closed(n, 0);
  std::vector<std::size_t> members;
  std::vector<std::size_t> gens;
  for (std::size_t x = 0; x < n; ++x) {
    if (closed[x]) continue;
    gens.push_back(x);
    closed[x] = 1;
    members.push_back(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (auto p : {m(members[i], members[j]), m(members[j], members[i])}) {
          if (!closed[p]) {
            closed[p] = 1;
            members.push_back(p);
          }
        }
      }
    }
  }
  for (std::size_t g : gens)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (m(m(x, g), y) != m(x, m(g, y)))
          throw Error(ErrorCode::NotAssociative, "(a*b)*c != a*(b*c) at (a, b, c) = " + triple(x, g, y));
}

}  // namespace

GroupTable GroupTable::assemble(std::size_t order, std::vector<std::uint16_t> table, Element identity,
                                std::vector<std::string> labels) {
  GroupTable g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.identity_ = identity;
  g.inverse_.assign(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < order; ++j) {
      if (g.mul(static_cast<Element>(i), static_cast<Element>(j)) == identity &&
          g.mul(static_cast<Element>(j), static_cast<Element>(i)) == identity) {
        g.inverse_[i] = static_cast<Element>(j);
        found = true;
        break;
      }
    }
    if (!found)
      throw Error(ErrorCode::MissingInverse,
                  "element " + std::to_string(i) + " has no two-sided inverse (a*b = b*a = e fails for all b)");
  }
  if (labels.empty()) {
    labels.reserve(order);
    for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);
  return g;
}

GroupTable GroupTable::from_table(const std::vector<std::vector<Element>>& mul, std::vector<std::string> labels) {
  const std::size_t n = mul.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "group table must have at least one row");
  if (n > kMaxTableOrder)
    throw Error(ErrorCode::OrderCapExceeded, "order " + std::to_string(n) + " exceeds table limit");
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " labels, got " +
                                                std::to_string(labels.size()));
  std::vector<std::uint16_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mul[i].size() != n)
      throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(i) + " has length " +
                                                  std::to_string(mul[i].size()) + ", expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (mul[i][j] >= n)
        throw Error(ErrorCode::InvalidArgument,
                    "entry mul[" + std::to_string(i) + "][" + std::to_string(j) + "] out of range");
      t[i * n + j] = static_cast<std::uint16_t>(mul[i][j]);
    }
  }
  auto m = [&](std::size_t a, std::size_t b) -> std::size_t { return t[a * n + b]; };

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = m(e, i) == i && m(i, e) == i;
    if (ok) identity = static_cast<Element>(e);
  }
  if (!identity) {
    std::size_t i = 0;
    while (i < n && m(0, i) == i && m(i, 0) == i) ++i;
    throw Error(ErrorCode::NoIdentity, "no element e with e*a = a*e = a; e.g. candidate 0 fails at a = " +
                                           std::to_string(i));
  }

  // Inverses are located (and their absence reported) by assemble(); run that
  // check before cancellation so the error names the right law.
  GroupTable g = assemble(n, t, *identity, std::move(labels));

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> row_seen(n, n), col_seen(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = m(i, j);
      if (row_seen[r] != n)
        throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(i) + " repeats value " + std::to_string(r) +
                                                   " at (a, b, b') = " + triple(i, row_seen[r], j));
      row_seen[r] = j;
      const std::size_t c = m(j, i);
      if (col_seen[c] != n)
        throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(i) + " repeats value " +
                                                   std::to_string(c) + " at (a, a', b) = " + triple(col_seen[c], j, i));
      col_seen[c] = j;
    }
  }

  if (n <= kDirectAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = m(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (m(ab, c) != m(a, m(b, c)))
            throw Error(ErrorCode::NotAssociative, "(a*b)*c != a*(b*c) at (a, b, c) = " + triple(a, b, c));
      }
  } else {
    check_associativity_light(n, t);
  }
  return g;
}

GroupTable GroupTable::from_permutations(const std::vector<Permutation>& generators, std::size_t order_cap) {
  const std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& p = generators[k];
    if (p.size() != degree)
      throw Error(ErrorCode::InvalidArgument, "generator " + std::to_string(k) + " acts on " +
                                                  std::to_string(p.size()) + " points, expected " +
                                                  std::to_string(degree));
    std::vector<char> hit(degree, 0);
    for (Element x : p) {
      if (x >= degree || hit[x])
        throw Error(ErrorCode::InvalidArgument, "generator " + std::to_string(k) + " is not a bijection");
      hit[x] = 1;
    }
  }
  const std::size_t cap = std::min(order_cap, kMaxTableOrder);

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Element>(i);
  auto compose = [&](const Permutation& p, const Permutation& q) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };

  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  std::vector<std::size_t> parent{0}, via{0};
  std::vector<std::size_t> gens;  // distinct non-identity generators, as indices into `generators`
  auto discover = [&](Permutation p, std::size_t from, std::size_t gen) {
    auto [it, inserted] = index.emplace(p, static_cast<Element>(elems.size()));
    if (!inserted) return;
    if (elems.size() >= cap)
      throw Error(ErrorCode::OrderCapExceeded, "permutation closure exceeds " + std::to_string(cap) + " elements");
    elems.push_back(std::move(p));
    parent.push_back(from);
    via.push_back(gen);
  };
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (index.count(generators[k])) continue;
    gens.push_back(k);
    discover(generators[k], 0, gens.size() - 1);
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t g = 0; g < gens.size(); ++g) discover(compose(elems[i], generators[gens[g]]), i, g);

  const std::size_t n = elems.size();
  // rgen[x][g] = x * gen_g
  std::vector<std::uint16_t> rgen(n * std::max<std::size_t>(gens.size(), 1));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t g = 0; g < gens.size(); ++g)
      rgen[x * gens.size() + g] = static_cast<std::uint16_t>(index.at(compose(elems[x], generators[gens[g]])));

  // x_j = x_parent(j) * gen_via(j), so x_i * x_j = (x_i * x_parent(j)) * gen_via(j).
  std::vector<std::uint16_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i * n] = static_cast<std::uint16_t>(i);
    for (std::size_t j = 1; j < n; ++j) t[i * n + j] = rgen[std::size_t{t[i * n + parent[j]]} * gens.size() + via[j]];
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycle_notation(p));
  return assemble(n, std::move(t), 0, std::move(labels));
}

std::optional<Element> GroupTable::find_label(std::string_view text) const {
  const std::string key = normalize_label(text);
  for (std::size_t i = 0; i < order_; ++i)
    if (normalize_label(labels_[i]) == key) return static_cast<Element>(i);
  return std::nullopt;
}

bool GroupTable::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul(static_cast<Element>(a), static_cast<Element>(b)) != mul(static_cast<Element>(b), static_cast<Element>(a)))
        return false;
  return true;
}

std::vector<std::vector<Element>> GroupTable::to_rows() const {
  std::vector<std::vector<Element>> rows(order_, std::vector<Element>(order_));
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) rows[i][j] = table_[i * order_ + j];
  return rows;
}

std::string cycle_notation(std::span<const Element> perm) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = perm[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace atomkit

namespace atomkit {

GroupTable GroupTable::induced(const GroupTable& parent, std::span<const Element> members) {
  const std::size_t n = members.size();
  std::vector<std::int64_t> local(parent.order(), -1);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<std::int64_t>(i);
  std::vector<std::uint16_t> t(n * n);
  std::optional<Element> identity;
  for (std::size_t i = 0; i < n; ++i) {
    if (members[i] == parent.identity()) identity = static_cast<Element>(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto p = local[parent.mul(members[i], members[j])];
      if (p < 0) throw Error(ErrorCode::NotASubgroup, "induced table: members are not closed under products");
      t[i * n + j] = static_cast<std::uint16_t>(p);
    }
  }
  if (!identity) throw Error(ErrorCode::NotASubgroup, "induced table: identity not among members");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element x : members) labels.push_back(parent.label(x));
  return assemble(n, std::move(t), *identity, std::move(labels));
}

}  // namespace atomkit
