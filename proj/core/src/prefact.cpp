#include "deformkit/prefact.hpp"

#include <algorithm>
#include <functional>

#include "deformkit/sparse.hpp"

namespace dk {

namespace {

struct FlatBasis {
  std::vector<int> degree;  // per flat index
  std::map<int, std::size_t> offset;  // first flat index of each degree
};

FlatBasis flat_basis(const CochainComplex& c) {
  FlatBasis b;
  for (int deg : c.spaces().degrees()) {
    b.offset[deg] = b.degree.size();
    for (std::size_t i = 0; i < c.spaces().dim(deg); ++i) b.degree.push_back(deg);
  }
  return b;
}

// Differential on flat coordinates.
SparseVector flat_differential(const CochainComplex& c, const FlatBasis& b, int flat) {
  SparseVector out;
  const int deg = b.degree[static_cast<std::size_t>(flat)];
  const std::size_t local = static_cast<std::size_t>(flat) - b.offset.at(deg);
  auto next = b.offset.find(deg + 1);
  if (next == b.offset.end() || !c.has_differential(deg)) return out;
  Matrix d = c.differential(deg);
  for (std::size_t r = 0; r < d.rows(); ++r)
    if (sgn(d(r, local)) != 0) out[static_cast<int>(next->second + r)] = d(r, local);
  return out;
}

struct Tensor {
  std::vector<const FlatBasis*> factors;

  std::size_t size() const {
    std::size_t n = 1;
    for (auto* f : factors) n *= f->degree.size();
    return n;
  }
  std::size_t column(const std::vector<int>& t) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) c = c * factors[k]->degree.size() + static_cast<std::size_t>(t[k]);
    return c;
  }
  std::vector<int> tuple(std::size_t c) const {
    std::vector<int> t(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      const std::size_t n = factors[k]->degree.size();
      t[k] = static_cast<int>(c % n);
      c /= n;
    }
    return t;
  }
  int degree(const std::vector<int>& t) const {
    int d = 0;
    for (std::size_t k = 0; k < t.size(); ++k) d += factors[k]->degree[static_cast<std::size_t>(t[k])];
    return d;
  }
};

SparseVector column_of(const Matrix& m, std::size_t c) {
  SparseVector out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (sgn(m(r, c)) != 0) out[static_cast<int>(r)] = m(r, c);
  return out;
}

std::string family_label(const PrefactData& d, const std::vector<int>& fam) {
  std::string s = "(";
  for (std::size_t i = 0; i < fam.size(); ++i) s += (i ? "," : "") + d.opens[static_cast<std::size_t>(fam[i])];
  return s + ")";
}

// Sign of reordering the factors of t: out[k] = t[perm[k]].
int koszul_sign(const Tensor& tensor, const std::vector<int>& t, const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) {
        const std::size_t i = static_cast<std::size_t>(perm[a]), j = static_cast<std::size_t>(perm[b]);
        int da = tensor.factors[i]->degree[static_cast<std::size_t>(t[i])];
        int db = tensor.factors[j]->degree[static_cast<std::size_t>(t[j])];
        if ((da * db) % 2 != 0) sign = -sign;
      }
  return sign;
}

}  // namespace

ValidationReport validate_prefact(const PrefactData& d) {
  ValidationReport r;
  const int n = static_cast<int>(d.opens.size());
  if (d.disjoint.size() != d.opens.size() || d.contained.size() != d.opens.size() ||
      d.obs.size() != d.opens.size()) {
    r.add("shape", {});
    return r;
  }
  for (int u = 0; u < n; ++u)
    if (d.disjoint[static_cast<std::size_t>(u)].size() != d.opens.size() ||
        d.contained[static_cast<std::size_t>(u)].size() != d.opens.size()) {
      r.add("shape", {u});
      return r;
    }
  auto dis = [&](int a, int b) { return d.disjoint[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  auto in = [&](int a, int b) { return d.contained[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int u = 0; u < n; ++u) {
    if (dis(u, u)) r.add("self_disjoint", {u});
    for (int v = 0; v < n; ++v) {
      if (dis(u, v) != dis(v, u)) r.add("disjointness_asymmetric", {u, v});
      for (int w = 0; w < n; ++w)
        if (in(u, v) && dis(v, w) && !dis(u, w)) r.add("disjointness_order", {u, v, w});
    }
  }
  std::vector<FlatBasis> bases;
  for (const auto& c : d.obs) bases.push_back(flat_basis(c));
  for (const auto& [key, m] : d.maps) {
    const auto& [fam, target] = key;
    std::vector<int> witness = fam;
    witness.push_back(target);
    bool bad = target < 0 || target >= n || fam.empty();
    for (int u : fam) bad = bad || u < 0 || u >= n;
    if (bad) {
      r.add("family_index", witness);
      continue;
    }
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (!in(fam[i], target)) r.add("family_not_inside", witness);
      for (std::size_t j = i + 1; j < fam.size(); ++j)
        if (!dis(fam[i], fam[j])) r.add("family_not_disjoint", witness);
    }
    Tensor t;
    for (int u : fam) t.factors.push_back(&bases[static_cast<std::size_t>(u)]);
    const auto& tb = bases[static_cast<std::size_t>(target)];
    if (m.cols() != t.size() || m.rows() != tb.degree.size()) {
      r.add("map_shape", witness);
      continue;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto tup = t.tuple(c);
      const int deg = t.degree(tup);
      for (std::size_t row = 0; row < m.rows(); ++row)
        if (sgn(m(row, c)) != 0 && tb.degree[row] != deg) r.add("map_degree", witness);
      // d_V(iota(a)) = iota(d_tensor a)
      SparseVector lhs;
      for (const auto& [row, v] : column_of(m, c))
        add_scaled(lhs, flat_differential(d.obs[static_cast<std::size_t>(target)], tb, row), v);
      SparseVector rhs;
      int sign = 1;
      for (std::size_t k = 0; k < fam.size(); ++k) {
        const auto& fb = bases[static_cast<std::size_t>(fam[k])];
        for (const auto& [flat, v] : flat_differential(d.obs[static_cast<std::size_t>(fam[k])], fb, tup[k])) {
          auto tup2 = tup;
          tup2[k] = flat;
          add_scaled(rhs, column_of(m, t.column(tup2)), v * sign);
        }
        if (fb.degree[static_cast<std::size_t>(tup[k])] % 2 != 0) sign = -sign;
      }
      if (lhs != rhs) r.add("not_cochain_map", witness);
    }
  }
  return r;
}

ValidationReport prefact_check(const PrefactData& d) {
  ValidationReport r;
  std::vector<FlatBasis> bases;
  for (const auto& c : d.obs) bases.push_back(flat_basis(c));
  auto tensor_of = [&](const std::vector<int>& fam) {
    Tensor t;
    for (int u : fam) t.factors.push_back(&bases[static_cast<std::size_t>(u)]);
    return t;
  };

  // (i) invariance
  for (const auto& [key, m] : d.maps) {
    const auto& [fam, target] = key;
    auto sorted = fam;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [key2, m2] : d.maps) {
      const auto& [fam2, target2] = key2;
      if (target2 != target || fam2 == fam || fam2.size() != fam.size()) continue;
      auto sorted2 = fam2;
      std::sort(sorted2.begin(), sorted2.end());
      if (sorted2 != sorted || key2 < key) continue;
      // fam2[k] = fam[perm[k]]
      std::vector<int> perm;
      for (int u : fam2) perm.push_back(static_cast<int>(std::find(fam.begin(), fam.end(), u) - fam.begin()));
      Tensor t = tensor_of(fam);
      Tensor t2 = tensor_of(fam2);
      bool equal = true;
      for (std::size_t c = 0; c < t2.size() && equal; ++c) {
        auto tup2 = t2.tuple(c);
        std::vector<int> tup(fam.size());
        for (std::size_t k = 0; k < perm.size(); ++k) tup[static_cast<std::size_t>(perm[k])] = tup2[k];
        int sign = koszul_sign(t, tup, perm);
        auto direct = column_of(m2, c);
        auto via = scaled(column_of(m, t.column(tup)), sign);
        equal = direct == via;
      }
      if (!equal) {
        std::vector<int> witness = fam;
        witness.insert(witness.end(), fam2.begin(), fam2.end());
        witness.push_back(target);
        r.add("invariance", witness,
              family_label(d, fam2) + " vs " + family_label(d, fam) + " into " + d.opens[static_cast<std::size_t>(target)]);
      }
    }
  }

  // (ii) associativity
  auto in = [&](int a, int b) { return d.contained[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (const auto& [key, direct] : d.maps) {
    const auto& [fam, target] = key;
    for (const auto& [key2, outer] : d.maps) {
      const auto& [groups, target2] = key2;
      if (target2 != target || groups == fam) continue;
      // assign each member of fam to the unique group containing it
      std::vector<std::vector<int>> members(groups.size());
      bool valid = true;
      for (std::size_t i = 0; i < fam.size() && valid; ++i) {
        int hits = 0;
        for (std::size_t j = 0; j < groups.size(); ++j)
          if (in(fam[i], groups[j])) {
            ++hits;
            members[j].push_back(static_cast<int>(i));
          }
        valid = hits == 1;
      }
      for (const auto& mem : members) valid = valid && !mem.empty();
      if (!valid) continue;
      std::vector<const Matrix*> inner(groups.size(), nullptr);
      bool trivial = true;
      for (std::size_t j = 0; j < groups.size() && valid; ++j) {
        std::vector<int> sub;
        for (int i : members[j]) sub.push_back(fam[static_cast<std::size_t>(i)]);
        if (sub.size() == 1 && sub[0] == groups[j]) continue;
        trivial = false;
        auto it = d.maps.find({sub, groups[j]});
        if (it == d.maps.end())
          valid = false;
        else
          inner[j] = &it->second;
      }
      if (!valid || trivial) continue;

      Tensor tf = tensor_of(fam);
      Tensor tg = tensor_of(groups);
      std::vector<int> perm;  // grouped position -> fam index
      for (const auto& mem : members) perm.insert(perm.end(), mem.begin(), mem.end());
      bool equal = true;
      for (std::size_t c = 0; c < tf.size() && equal; ++c) {
        auto tup = tf.tuple(c);
        const int sign = koszul_sign(tf, tup, perm);
        // tensor product of the inner images, as sparse vectors over tg tuples
        std::map<std::vector<int>, Rational> acc{{{}, Rational(sign)}};
        std::size_t pos = 0;
        for (std::size_t j = 0; j < groups.size(); ++j) {
          SparseVector image;
          std::vector<int> sub_tuple;
          for (std::size_t k = 0; k < members[j].size(); ++k)
            sub_tuple.push_back(tup[static_cast<std::size_t>(perm[pos + k])]);
          pos += members[j].size();
          if (!inner[j]) {
            image[sub_tuple[0]] = 1;
          } else {
            std::vector<int> sub;
            for (int i : members[j]) sub.push_back(fam[static_cast<std::size_t>(i)]);
            image = column_of(*inner[j], tensor_of(sub).column(sub_tuple));
          }
          std::map<std::vector<int>, Rational> next;
          for (const auto& [prefix, v] : acc)
            for (const auto& [b, w] : image) {
              auto t2 = prefix;
              t2.push_back(b);
              next[t2] += v * w;
            }
          acc = std::move(next);
        }
        SparseVector via;
        for (const auto& [t2, v] : acc) add_scaled(via, column_of(outer, tg.column(t2)), v);
        equal = via == column_of(direct, c);
      }
      if (!equal) {
        std::vector<int> witness = fam;
        witness.insert(witness.end(), groups.begin(), groups.end());
        witness.push_back(target);
        r.add("associativity", witness,
              family_label(d, fam) + " through " + family_label(d, groups) + " into " +
                  d.opens[static_cast<std::size_t>(target)]);
      }
    }
  }
  return r;
}

namespace {

std::vector<std::vector<int>> monomials(std::size_t vars, int degree_bound) {
  std::vector<std::vector<int>> out;
  for (int total = 0; total <= degree_bound; ++total) {
    // exponent vectors with the given total, lexicographically descending
    std::vector<int> e(vars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
      if (k + 1 == vars || vars == 0) {
        if (vars == 0) {
          if (left == 0) out.push_back(e);
          return;
        }
        e[k] = left;
        out.push_back(e);
        e[k] = 0;
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[k] = v;
        rec(k + 1, left - v);
      }
      e[k] = 0;
    };
    rec(0, total);
  }
  return out;
}

}  // namespace

std::vector<std::string> obs_monomial_labels(const std::vector<std::string>& variables, int degree_bound) {
  std::vector<std::string> labels;
  for (const auto& e : monomials(variables.size(), degree_bound)) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!s.empty()) s += "*";
      s += variables[k];
      if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    labels.push_back(s.empty() ? "1" : s);
  }
  return labels;
}

PrefactData obs_assignment(const ObsModel& model) {
  if (model.degree_bound < 0) throw Error(ErrorCode::InvalidInput, "degree bound must be >= 0");
  std::map<std::string, int> patch_index;
  for (const auto& p : model.patches) {
    if (p.dim < 0) throw Error(ErrorCode::InvalidInput, "patch dimension must be >= 0");
    if (!patch_index.emplace(p.name, static_cast<int>(patch_index.size())).second)
      throw Error(ErrorCode::NotDisjointPoset, "repeated patch " + p.name);
  }
  std::vector<std::string> names;
  std::vector<std::vector<int>> sets;
  for (const auto& p : model.patches) {
    names.push_back(p.name);
    sets.push_back({patch_index.at(p.name)});
  }
  for (const auto& u : model.unions) {
    std::vector<int> s;
    for (const auto& p : u.patches) {
      auto it = patch_index.find(p);
      if (it == patch_index.end()) throw Error(ErrorCode::NotDisjointPoset, u.name + " uses unknown patch " + p);
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (s.empty()) throw Error(ErrorCode::NotDisjointPoset, "open " + u.name + " has no patches");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorCode::NotDisjointPoset, "open " + u.name + " repeats a patch");
    if (std::find(sets.begin(), sets.end(), s) != sets.end() ||
        std::find(names.begin(), names.end(), u.name) != names.end())
      throw Error(ErrorCode::NotDisjointPoset, "open " + u.name + " duplicates another open");
    names.push_back(u.name);
    sets.push_back(std::move(s));
  }
  const std::size_t n = names.size();
  PrefactData d;
  d.opens = names;
  d.disjoint.assign(n, std::vector<bool>(n, false));
  d.contained.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> meet;
      std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(), std::back_inserter(meet));
      d.disjoint[a][b] = meet.empty();
      d.contained[a][b] = meet.size() == sets[a].size();
    }

  // Variables of U: (patch, coordinate) for patches of U in patch order.
  std::vector<std::vector<std::pair<int, int>>> vars(n);
  std::vector<std::vector<std::vector<int>>> monos(n);
  std::vector<std::map<std::vector<int>, int>> mono_index(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<std::string> var_names;
    for (int p : sets[u])
      for (int i = 0; i < model.patches[static_cast<std::size_t>(p)].dim; ++i) {
        vars[u].push_back({p, i});
        var_names.push_back(model.patches[static_cast<std::size_t>(p)].name + "_" + std::to_string(i + 1));
      }
    monos[u] = monomials(vars[u].size(), model.degree_bound);
    for (std::size_t i = 0; i < monos[u].size(); ++i) mono_index[u][monos[u][i]] = static_cast<int>(i);
    GradedVectorSpace space;
    space.set_component(0, obs_monomial_labels(var_names, model.degree_bound));
    d.obs.emplace_back(std::move(space));
  }

  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> inside;
    for (std::size_t u = 0; u < n; ++u)
      if (u != v && d.contained[u][v]) inside.push_back(static_cast<int>(u));
    // all pairwise disjoint subsets of `inside`, each in every order
    std::function<void(std::size_t, std::vector<int>&)> choose = [&](std::size_t start, std::vector<int>& chosen) {
      if (!chosen.empty()) {
        auto fam = chosen;
        std::sort(fam.begin(), fam.end());
        do {
          std::size_t cols = 1;
          for (int u : fam) cols *= monos[static_cast<std::size_t>(u)].size();
          Matrix m(monos[v].size(), cols);
          std::vector<std::size_t> sizes;
          for (int u : fam) sizes.push_back(monos[static_cast<std::size_t>(u)].size());
          for (std::size_t c = 0; c < cols; ++c) {
            std::size_t rest = c;
            std::vector<int> exps(vars[v].size(), 0);
            int total = 0;
            for (std::size_t k = fam.size(); k-- > 0;) {
              const std::size_t u = static_cast<std::size_t>(fam[k]);
              const auto& mono = monos[u][rest % sizes[k]];
              rest /= sizes[k];
              for (std::size_t i = 0; i < mono.size(); ++i) {
                auto pos = std::find(vars[v].begin(), vars[v].end(), vars[u][i]) - vars[v].begin();
                exps[static_cast<std::size_t>(pos)] += mono[i];
                total += mono[i];
              }
            }
            if (total <= model.degree_bound) m(static_cast<std::size_t>(mono_index[v].at(exps)), c) = 1;
          }
          d.maps[{fam, static_cast<int>(v)}] = std::move(m);
        } while (std::next_permutation(fam.begin(), fam.end()));
      }
      for (std::size_t k = start; k < inside.size(); ++k) {
        bool ok = true;
        for (int c : chosen) ok = ok && d.disjoint[static_cast<std::size_t>(c)][static_cast<std::size_t>(inside[k])];
        if (!ok) continue;
        chosen.push_back(inside[k]);
        choose(k + 1, chosen);
        chosen.pop_back();
      }
    };
    std::vector<int> chosen;
    choose(0, chosen);
  }
  return d;
}

}  // namespace dk
