#include "deformkit/groupoid.hpp"

#include <algorithm>
#include <numeric>

namespace dk {

int FiniteGroupoid::add_object(std::string label) {
  int idx = static_cast<int>(objects_.size());
  if (!object_index_.emplace(label, idx).second)
    throw Error(ErrorCode::InvalidInput, "duplicate object label " + label);
  objects_.push_back(std::move(label));
  identity_.push_back(-1);
  return idx;
}

int FiniteGroupoid::add_morphism(int src, int dst, std::string label) {
  const int n = static_cast<int>(objects_.size());
  if (src < 0 || src >= n || dst < 0 || dst >= n)
    throw Error(ErrorCode::InvalidInput, "morphism endpoint out of range");
  morphisms_.push_back({src, dst, std::move(label)});
  inverse_.push_back(-1);
  return static_cast<int>(morphisms_.size()) - 1;
}

void FiniteGroupoid::set_identity(int object, int morphism) {
  identity_.at(static_cast<std::size_t>(object)) = morphism;
}

void FiniteGroupoid::set_inverse(int morphism, int inverse) {
  inverse_.at(static_cast<std::size_t>(morphism)) = inverse;
}

void FiniteGroupoid::set_composition(int g, int f, int result) { table_[{g, f}] = result; }

void FiniteGroupoid::finalize() {
  const std::size_t n = objects_.size();
  hom_.assign(n * n, {});
  for (std::size_t m = 0; m < morphisms_.size(); ++m) {
    const auto& mor = morphisms_[m];
    hom_[static_cast<std::size_t>(mor.src) * n + static_cast<std::size_t>(mor.dst)].push_back(
        static_cast<int>(m));
  }
}

int FiniteGroupoid::compose(int g, int f) const {
  if (morphism(f).dst != morphism(g).src)
    throw Error(ErrorCode::InvalidInput, "morphisms " + morphism(g).label + " and " +
                                             morphism(f).label + " are not composable");
  if (composer_) return composer_(g, f);
  auto it = table_.find({g, f});
  if (it == table_.end())
    throw Error(ErrorCode::InvalidInput,
                "composite " + morphism(g).label + " o " + morphism(f).label + " missing");
  return it->second;
}

const std::vector<int>& FiniteGroupoid::hom(int a, int b) const {
  const std::size_t n = objects_.size();
  return hom_.at(static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b));
}

std::optional<int> FiniteGroupoid::find_object(const std::string& label) const {
  auto it = object_index_.find(label);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

ValidationReport validate_groupoid(const FiniteGroupoid& g) {
  ValidationReport r;
  const int n = static_cast<int>(g.object_count());
  const int m = static_cast<int>(g.morphism_count());
  for (int o = 0; o < n; ++o) {
    int id = g.identity(o);
    if (id < 0 || id >= m || g.morphism(id).src != o || g.morphism(id).dst != o)
      r.add("identity_missing", {o});
  }
  if (!r.ok()) return r;
  auto safe_compose = [&](int a, int b) -> std::optional<int> {
    try {
      return g.compose(a, b);
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  for (int f = 0; f < m; ++f) {
    const auto& mf = g.morphism(f);
    auto left = safe_compose(g.identity(mf.dst), f);
    auto right = safe_compose(f, g.identity(mf.src));
    if (left != f || right != f) r.add("identity_law", {f});
    int inv = g.inverse(f);
    if (inv < 0 || inv >= m) {
      r.add("inverse_missing", {f});
      continue;
    }
    if (safe_compose(inv, f) != g.identity(mf.src) || safe_compose(f, inv) != g.identity(mf.dst))
      r.add("inverse_law", {f, inv});
  }
  // Associativity over composable triples h o g o f.
  for (int f = 0; f < m; ++f) {
    const auto& mf = g.morphism(f);
    for (int c = 0; c < n; ++c)
      for (int k : g.hom(mf.dst, c)) {
        auto kf = safe_compose(k, f);
        if (!kf) {
          r.add("composition_missing", {k, f});
          continue;
        }
        const auto& mk = g.morphism(*kf);
        if (mk.src != mf.src || mk.dst != c) r.add("composition_endpoints", {k, f});
        for (int d = 0; d < n; ++d)
          for (int h : g.hom(c, d)) {
            auto hk = safe_compose(h, k);
            if (!hk) continue;
            if (safe_compose(*hk, f) != safe_compose(h, *kf)) r.add("associativity", {h, k, f});
          }
      }
  }
  return r;
}

FiniteGroupoid delooping(const std::vector<std::string>& element_labels,
                         const std::vector<std::vector<int>>& table, int identity) {
  FiniteGroupoid g;
  g.add_object("*");
  const int n = static_cast<int>(element_labels.size());
  for (int i = 0; i < n; ++i) g.add_morphism(0, 0, element_labels[static_cast<std::size_t>(i)]);
  g.set_identity(0, identity);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      g.set_composition(a, b, ab);
      if (ab == identity) g.set_inverse(b, a);
    }
  g.finalize();
  return g;
}

FiniteGroupoid discrete_groupoid(const std::vector<std::string>& objects) {
  FiniteGroupoid g;
  for (const auto& o : objects) {
    int idx = g.add_object(o);
    int m = g.add_morphism(idx, idx, "id_" + o);
    g.set_identity(idx, m);
    g.set_inverse(m, m);
    g.set_composition(m, m, m);
  }
  g.finalize();
  return g;
}

GroupoidFunctor identity_functor(const FiniteGroupoid& g) {
  GroupoidFunctor f;
  f.object_map.resize(g.object_count());
  f.morphism_map.resize(g.morphism_count());
  std::iota(f.object_map.begin(), f.object_map.end(), 0);
  std::iota(f.morphism_map.begin(), f.morphism_map.end(), 0);
  return f;
}

GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f) {
  GroupoidFunctor h;
  for (int o : f.object_map) h.object_map.push_back(g.object_map.at(static_cast<std::size_t>(o)));
  for (int m : f.morphism_map) h.morphism_map.push_back(g.morphism_map.at(static_cast<std::size_t>(m)));
  return h;
}

bool same_functor(const GroupoidFunctor& a, const GroupoidFunctor& b) {
  return a.object_map == b.object_map && a.morphism_map == b.morphism_map;
}

ValidationReport validate_functor(const GroupoidFunctor& f, const FiniteGroupoid& s,
                                  const FiniteGroupoid& t) {
  ValidationReport r;
  const int tn = static_cast<int>(t.object_count());
  const int tm = static_cast<int>(t.morphism_count());
  if (f.object_map.size() != s.object_count() || f.morphism_map.size() != s.morphism_count()) {
    r.add("shape", {});
    return r;
  }
  for (int o : f.object_map)
    if (o < 0 || o >= tn) r.add("object_out_of_range", {o});
  for (int m : f.morphism_map)
    if (m < 0 || m >= tm) r.add("morphism_out_of_range", {m});
  if (!r.ok()) return r;
  auto fo = [&](int o) { return f.object_map[static_cast<std::size_t>(o)]; };
  auto fm = [&](int m) { return f.morphism_map[static_cast<std::size_t>(m)]; };
  for (int o = 0; o < static_cast<int>(s.object_count()); ++o)
    if (fm(s.identity(o)) != t.identity(fo(o))) r.add("identity", {o});
  for (int m = 0; m < static_cast<int>(s.morphism_count()); ++m) {
    const auto& mm = s.morphism(m);
    if (t.morphism(fm(m)).src != fo(mm.src) || t.morphism(fm(m)).dst != fo(mm.dst))
      r.add("endpoints", {m});
  }
  if (!r.ok()) return r;
  for (int f1 = 0; f1 < static_cast<int>(s.morphism_count()); ++f1) {
    const auto& m1 = s.morphism(f1);
    for (int c = 0; c < static_cast<int>(s.object_count()); ++c)
      for (int g1 : s.hom(m1.dst, c))
        if (fm(s.compose(g1, f1)) != t.compose(fm(g1), fm(f1))) r.add("composition", {g1, f1});
  }
  return r;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

Pi0 pi0(const FiniteGroupoid& g) {
  const std::size_t n = g.object_count();
  UnionFind uf(n);
  for (std::size_t m = 0; m < g.morphism_count(); ++m) {
    const auto& mm = g.morphism(static_cast<int>(m));
    uf.unite(mm.src, mm.dst);
  }
  std::map<int, std::string> least;
  for (std::size_t o = 0; o < n; ++o) {
    int root = uf.find(static_cast<int>(o));
    const auto& label = g.object_label(static_cast<int>(o));
    auto it = least.find(root);
    if (it == least.end() || label < it->second) least[root] = label;
  }
  Pi0 out;
  for (const auto& [root, label] : least) out.representatives.push_back(label);
  std::sort(out.representatives.begin(), out.representatives.end());
  out.count = out.representatives.size();
  std::map<std::string, int> number;
  for (std::size_t i = 0; i < out.representatives.size(); ++i)
    number[out.representatives[i]] = static_cast<int>(i);
  for (std::size_t o = 0; o < n; ++o)
    out.component_of.push_back(number.at(least.at(uf.find(static_cast<int>(o)))));
  return out;
}

WeakEquivalenceVerdict is_weak_equivalence(const GroupoidFunctor& f, const FiniteGroupoid& s,
                                           const FiniteGroupoid& t) {
  WeakEquivalenceVerdict v;
  const int n = static_cast<int>(s.object_count());
  for (int a = 0; a < n && v.fully_faithful; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& src_hom = s.hom(a, b);
      const auto& dst_hom = t.hom(f.object_map[static_cast<std::size_t>(a)],
                                  f.object_map[static_cast<std::size_t>(b)]);
      std::vector<int> images;
      for (int m : src_hom) images.push_back(f.morphism_map[static_cast<std::size_t>(m)]);
      std::sort(images.begin(), images.end());
      bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
      if (!injective || images.size() != dst_hom.size()) {
        v.fully_faithful = false;
        v.hom_witness = std::make_pair(s.object_label(a), s.object_label(b));
        break;
      }
    }
  Pi0 components = pi0(t);
  std::vector<bool> reached(components.count, false);
  for (int o : f.object_map) reached[static_cast<std::size_t>(components.component_of[static_cast<std::size_t>(o)])] = true;
  for (std::size_t o = 0; o < t.object_count(); ++o)
    if (!reached[static_cast<std::size_t>(components.component_of[o])]) {
      v.essentially_surjective = false;
      v.unreachable_object = t.object_label(static_cast<int>(o));
      break;
    }
  return v;
}

std::vector<int> ProductGroupoid::identity(const std::vector<int>& o) const {
  std::vector<int> out(o.size());
  for (std::size_t k = 0; k < o.size(); ++k) out[k] = factor(k).identity(o[k]);
  return out;
}

std::vector<int> ProductGroupoid::compose(const std::vector<int>& g, const std::vector<int>& f) const {
  std::vector<int> out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = factor(k).compose(g[k], f[k]);
  return out;
}

std::vector<int> ProductGroupoid::source(const std::vector<int>& m) const {
  std::vector<int> out(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) out[k] = factor(k).morphism(m[k]).src;
  return out;
}

std::vector<int> ProductGroupoid::target(const std::vector<int>& m) const {
  std::vector<int> out(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) out[k] = factor(k).morphism(m[k]).dst;
  return out;
}

namespace {

template <typename Choices>
std::vector<std::vector<int>> cartesian(std::size_t n, Choices choices) {
  std::vector<std::vector<int>> out;
  std::vector<const std::vector<int>*> lists;
  for (std::size_t k = 0; k < n; ++k) {
    lists.push_back(&choices(k));
    if (lists.back()->empty()) return out;
  }
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    std::vector<int> t(n);
    for (std::size_t k = 0; k < n; ++k) t[k] = (*lists[k])[pos[k]];
    out.push_back(std::move(t));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pos[k] < lists[k]->size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace

std::vector<std::vector<int>> ProductGroupoid::objects() const {
  std::vector<std::vector<int>> ranges(size());
  for (std::size_t k = 0; k < size(); ++k) {
    ranges[k].resize(factor(k).object_count());
    std::iota(ranges[k].begin(), ranges[k].end(), 0);
  }
  return cartesian(size(), [&](std::size_t k) -> const std::vector<int>& { return ranges[k]; });
}

std::vector<std::vector<int>> ProductGroupoid::hom(const std::vector<int>& a,
                                                   const std::vector<int>& b) const {
  return cartesian(size(), [&](std::size_t k) -> const std::vector<int>& {
    return factor(k).hom(a[k], b[k]);
  });
}

std::string ProductGroupoid::object_label(const std::vector<int>& o) const {
  std::string s = "(";
  for (std::size_t k = 0; k < o.size(); ++k) {
    if (k) s += ",";
    s += factor(k).object_label(o[k]);
  }
  return s + ")";
}

std::string ProductGroupoid::morphism_label(const std::vector<int>& m) const {
  std::string s = "(";
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) s += ",";
    s += factor(k).morphism(m[k]).label;
  }
  return s + ")";
}

FiniteGroupoid ProductGroupoid::materialize() const {
  FiniteGroupoid g;
  std::map<std::vector<int>, int> obj_index;
  auto objs = objects();
  for (const auto& o : objs) obj_index[o] = g.add_object(object_label(o));
  auto mor_index = std::make_shared<std::map<std::vector<int>, int>>();
  auto tuples = std::make_shared<std::vector<std::vector<int>>>();
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (auto& m : hom(a, b)) {
        int idx = g.add_morphism(obj_index.at(a), obj_index.at(b), morphism_label(m));
        (*mor_index)[m] = idx;
        tuples->push_back(m);
      }
  for (const auto& o : objs) g.set_identity(obj_index.at(o), mor_index->at(identity(o)));
  for (std::size_t i = 0; i < tuples->size(); ++i) {
    std::vector<int> inv((*tuples)[i].size());
    for (std::size_t k = 0; k < inv.size(); ++k) inv[k] = factor(k).inverse((*tuples)[i][k]);
    g.set_inverse(static_cast<int>(i), mor_index->at(inv));
  }
  auto self = *this;
  g.set_composer([self, mor_index, tuples](int gm, int fm) {
    return mor_index->at(self.compose((*tuples)[static_cast<std::size_t>(gm)],
                                      (*tuples)[static_cast<std::size_t>(fm)]));
  });
  g.finalize();
  return g;
}

std::vector<int> ComponentwiseFunctor::object(const std::vector<int>& o) const {
  std::vector<int> out(sources.size());
  for (std::size_t k = 0; k < sources.size(); ++k)
    out[k] = functors[k].object_map[static_cast<std::size_t>(o[static_cast<std::size_t>(sources[k])])];
  return out;
}

std::vector<int> ComponentwiseFunctor::morphism(const std::vector<int>& m) const {
  std::vector<int> out(sources.size());
  for (std::size_t k = 0; k < sources.size(); ++k)
    out[k] = functors[k].morphism_map[static_cast<std::size_t>(m[static_cast<std::size_t>(sources[k])])];
  return out;
}

ComponentwiseFunctor identity_functor(const ProductGroupoid& p) {
  ComponentwiseFunctor f;
  for (std::size_t k = 0; k < p.size(); ++k) {
    f.sources.push_back(static_cast<int>(k));
    f.functors.push_back(identity_functor(p.factor(k)));
  }
  return f;
}

ComponentwiseFunctor compose(const ComponentwiseFunctor& g, const ComponentwiseFunctor& f) {
  ComponentwiseFunctor h;
  for (std::size_t k = 0; k < g.sources.size(); ++k) {
    const std::size_t mid = static_cast<std::size_t>(g.sources[k]);
    h.sources.push_back(f.sources.at(mid));
    h.functors.push_back(compose(g.functors[k], f.functors.at(mid)));
  }
  return h;
}

bool same_functor(const ComponentwiseFunctor& a, const ComponentwiseFunctor& b,
                  const ProductGroupoid& source) {
  if (a.sources.size() != b.sources.size()) return false;
  for (std::size_t k = 0; k < source.size(); ++k)
    if (source.factor(k).object_count() == 0) return true;
  for (std::size_t k = 0; k < a.sources.size(); ++k) {
    const auto& fa = a.functors[k];
    const auto& fb = b.functors[k];
    if (a.sources[k] == b.sources[k]) {
      if (!same_functor(fa, fb)) return false;
      continue;
    }
    // Different input factors: equal only if both are constant with the same value.
    for (int x : fa.morphism_map)
      for (int y : fb.morphism_map)
        if (x != y) return false;
    for (int x : fa.object_map)
      for (int y : fb.object_map)
        if (x != y) return false;
  }
  return true;
}

}  // namespace dk
