#include "deformkit/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dk {

ValidationReport validate_group_table(const std::vector<std::vector<int>>& table) {
  ValidationReport r;
  const int n = static_cast<int>(table.size());
  if (n == 0) {
    r.add("empty", {});
    return r;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[static_cast<std::size_t>(a)].size()) != n) {
      r.add("row_length", {a});
      return r;
    }
    for (int b = 0; b < n; ++b) {
      int ab = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (ab < 0 || ab >= n) r.add("closure", {a, b});
    }
  }
  if (!r.ok()) return r;
  auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) r.add("associativity", {a, b, c});
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0) {
    r.add("identity", {});
    return r;
  }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = mul(a, b) == identity && mul(b, a) == identity;
    if (!found) r.add("inverse", {a});
  }
  return r;
}

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  if (labels_.size() != table_.size()) throw Error(ErrorCode::InvalidInput, "one label per group element required");
  auto report = validate_group_table(table_);
  if (!report.ok()) throw ValidationFailure("group table", report);
  const int n = order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  inverse_.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
}

namespace {

std::string cycle_notation(const std::vector<int>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    std::string cycle = "(";
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      cycle += std::to_string(x + 1);
    }
    out += cycle + ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup permutation_group(const std::vector<std::vector<int>>& generators, int degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidInput, "permutation degree must be >= 1");
  std::vector<int> id(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) id[static_cast<std::size_t>(i)] = i;
  for (const auto& g : generators) {
    auto sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != id) throw Error(ErrorCode::InvalidInput, "generator is not a permutation of the given degree");
  }
  auto compose = [](const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> out(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) out[x] = s[static_cast<std::size_t>(t[x])];
    return out;
  };
  std::set<std::vector<int>> elements{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& e : frontier)
      for (const auto& g : generators) {
        auto p = compose(g, e);
        if (elements.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> list(elements.begin(), elements.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(list.size(), std::vector<int>(list.size()));
  for (std::size_t a = 0; a < list.size(); ++a) {
    labels.push_back(cycle_notation(list[a]));
    for (std::size_t b = 0; b < list.size(); ++b) table[a][b] = index.at(compose(list[a], list[b]));
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators) {
  std::set<int> elements{g.identity()};
  std::vector<int> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (int s : generators) {
        int p = g.mul(s, e);
        if (elements.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {elements.begin(), elements.end()};
}

int conjugacy_class_count(const FiniteGroup& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  int classes = 0;
  for (int a = 0; a < g.order(); ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    ++classes;
    for (int k = 0; k < g.order(); ++k) seen[static_cast<std::size_t>(g.conjugate(k, a))] = true;
  }
  return classes;
}

namespace builtin {

namespace {

FiniteGroup cyclic(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup quaternion() {
  // Elements 1, -1, i, -i, j, -j, k, -k as (unit, sign).
  const std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // unit products: u*v = sign * w, units 0=1, 1=i, 2=j, 3=k
  const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * unit_sign[ua][ub];
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = unit_mul[ua][ub] * 2 + (sign < 0 ? 1 : 0);
    }
  return FiniteGroup(labels, std::move(table));
}

int parse_suffix(const std::string& name) {
  if (name.size() < 2) return -1;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return -1;
  if (name.size() > 4) return -1;
  return std::stoi(name.substr(1));
}

}  // namespace

FiniteGroup group(const std::string& name) {
  if (name == "Q8") return quaternion();
  const int n = parse_suffix(name);
  if (name[0] == 'Z' && n >= 1) return cyclic(n);
  if (name[0] == 'S' && n >= 1 && n <= 6) {
    std::vector<std::vector<int>> gens;
    if (n >= 2) {
      std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        swap[static_cast<std::size_t>(i)] = i;
        cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
      }
      std::swap(swap[0], swap[1]);
      gens = {swap, cycle};
    }
    return permutation_group(gens, n);
  }
  if (name[0] == 'D' && n >= 3) {
    std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      rot[static_cast<std::size_t>(i)] = (i + 1) % n;
      refl[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    return permutation_group({rot, refl}, n);
  }
  throw Error(ErrorCode::UnknownBuiltin, "unknown group " + name);
}

}  // namespace builtin

}  // namespace dk
