#include "deformkit/simplicial.hpp"

namespace dk {

void validate_ordinal_map(const OrdinalMap& f) {
  if (f.source < 0 || f.target < 0 || f.values.size() != static_cast<std::size_t>(f.source + 1))
    throw Error(ErrorCode::InvalidInput, "ordinal map needs source+1 values");
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    if (f.values[j] < 0 || f.values[j] > f.target)
      throw Error(ErrorCode::InvalidInput, "ordinal map value out of range");
    if (j > 0 && f.values[j] < f.values[j - 1])
      throw Error(ErrorCode::InvalidInput, "ordinal map must be non-decreasing");
  }
}

OrdinalMap identity_map(int n) {
  OrdinalMap f{n, n, {}};
  for (int j = 0; j <= n; ++j) f.values.push_back(j);
  return f;
}

OrdinalMap coface(int n, int i, CofaceConvention conv) {
  if (n < 1 || i < 0 || i > n)
    throw Error(ErrorCode::IndexOutOfRange,
                "coface d_" + std::to_string(i) + "^" + std::to_string(n) + " out of range");
  OrdinalMap f{n - 1, n, {}};
  for (int j = 0; j < n; ++j) {
    bool keep = conv == CofaceConvention::Standard ? j < i : j <= i;
    f.values.push_back(keep ? j : j + 1);
  }
  return f;
}

OrdinalMap codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n)
    throw Error(ErrorCode::IndexOutOfRange,
                "codegeneracy s_" + std::to_string(i) + "^" + std::to_string(n) + " out of range");
  OrdinalMap f{n + 1, n, {}};
  for (int j = 0; j <= n + 1; ++j) f.values.push_back(j <= i ? j : j - 1);
  return f;
}

OrdinalMap compose(const OrdinalMap& f, const OrdinalMap& g) {
  if (g.target != f.source)
    throw Error(ErrorCode::ComposeMismatch, "cannot compose [" + std::to_string(g.source) + "]->[" +
                                                std::to_string(g.target) + "] with [" +
                                                std::to_string(f.source) + "]->[" +
                                                std::to_string(f.target) + "]");
  OrdinalMap h{g.source, f.target, {}};
  for (int v : g.values) h.values.push_back(f.values[static_cast<std::size_t>(v)]);
  return h;
}

SimplicialReport verify_simplicial_identities(int max_n, CofaceConvention conv) {
  if (max_n < 1) throw Error(ErrorCode::InvalidInput, "max_n must be >= 1");
  SimplicialReport r;
  r.max_n = max_n;
  r.header =
      "cofaces d_i^n: [n-1]->[n] skip the value i; codegeneracies s_i^n: [n+1]->[n] repeat i; "
      "family (2) read as s_j^{n-1} d_i^n = d_i^{n-1} s_{j-1}^{n-2} for 0 <= i < j <= n-1";
  if (conv == CofaceConvention::Literal)
    r.header += "; literal coface convention d_i^n(j) = j for j <= i";
  r.checked_per_family.assign(5, 0);
  auto d = [conv](int n, int i) { return coface(n, i, conv); };
  auto s = [](int n, int i) { return codegeneracy(n, i); };
  auto check = [&r](int family, bool holds, int n, int i, int j) {
    ++r.checked_per_family[static_cast<std::size_t>(family - 1)];
    ++r.total_checked;
    if (!holds) r.failures.push_back({family, n, i, j});
  };
  for (int n = 1; n <= max_n; ++n)
    for (int j = 1; j <= n + 1; ++j)
      for (int i = 0; i < j; ++i)
        check(1, compose(d(n + 1, j), d(n, i)) == compose(d(n + 1, i), d(n, j - 1)), n, i, j);
  for (int n = 2; n <= max_n; ++n)
    for (int j = 1; j <= n - 1; ++j)
      for (int i = 0; i < j; ++i)
        check(2, compose(s(n - 1, j), d(n, i)) == compose(d(n - 1, i), s(n - 2, j - 1)), n, i, j);
  for (int n = 1; n <= max_n; ++n)
    for (int j = 0; j <= n - 1; ++j) {
      const auto id = identity_map(n - 1);
      check(3, compose(s(n - 1, j), d(n, j)) == id && compose(s(n - 1, j), d(n, j + 1)) == id, n, j, j);
    }
  for (int n = 2; n <= max_n; ++n)
    for (int j = 0; j <= n - 2; ++j)
      for (int i = j + 2; i <= n; ++i)
        check(4, compose(s(n - 1, j), d(n, i)) == compose(d(n - 1, i - 1), s(n - 2, j)), n, i, j);
  for (int n = 1; n <= max_n; ++n)
    for (int j = 0; j <= n - 1; ++j)
      for (int i = 0; i <= j; ++i)
        check(5, compose(s(n - 1, j), s(n, i)) == compose(s(n - 1, i), s(n, j + 1)), n, i, j);
  return r;
}

OrdinalMap generator_map(const Generator& g) {
  return g.kind == Generator::Kind::Coface ? coface(g.n, g.i) : codegeneracy(g.n, g.i);
}

std::string to_string(const Generator& g) {
  return std::string(g.kind == Generator::Kind::Coface ? "d" : "s") + "_" + std::to_string(g.i) +
         "^" + std::to_string(g.n);
}

EpiMono epi_mono_factor(const OrdinalMap& f) {
  validate_ordinal_map(f);
  EpiMono out;
  int current = f.source;
  for (int j = f.source - 1; j >= 0; --j)
    if (f.values[static_cast<std::size_t>(j)] == f.values[static_cast<std::size_t>(j + 1)]) {
      out.codegeneracies.push_back({Generator::Kind::Codegeneracy, current - 1, j});
      --current;
    }
  std::vector<bool> hit(static_cast<std::size_t>(f.target + 1), false);
  for (int v : f.values) hit[static_cast<std::size_t>(v)] = true;
  for (int c = 0; c <= f.target; ++c)
    if (!hit[static_cast<std::size_t>(c)]) {
      out.cofaces.push_back({Generator::Kind::Coface, current + 1, c});
      ++current;
    }
  return out;
}

OrdinalMap evaluate(const EpiMono& factors, int source) {
  OrdinalMap acc = identity_map(source);
  for (const auto& g : factors.codegeneracies) acc = compose(generator_map(g), acc);
  for (const auto& g : factors.cofaces) acc = compose(generator_map(g), acc);
  return acc;
}

std::vector<OrdinalMap> all_ordinal_maps(int n, int m) {
  std::vector<OrdinalMap> out;
  std::vector<int> v(static_cast<std::size_t>(n + 1), 0);
  while (true) {
    out.push_back({n, m, v});
    int k = n;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == m) --k;
    if (k < 0) break;
    int val = v[static_cast<std::size_t>(k)] + 1;
    for (int t = k; t <= n; ++t) v[static_cast<std::size_t>(t)] = val;
  }
  return out;
}

}  // namespace dk
