#include "deformkit/site.hpp"

#include <algorithm>
#include <set>

namespace dk {

int Site::add_object(std::string label) {
  if (find_object(label)) throw Error(ErrorCode::InvalidInput, "duplicate site object " + label);
  objects_.push_back(std::move(label));
  identity_.push_back(-1);
  covers_.emplace_back();
  return static_cast<int>(objects_.size()) - 1;
}

int Site::add_arrow(std::string id, int src, int dst) {
  const int n = static_cast<int>(objects_.size());
  if (src < 0 || src >= n || dst < 0 || dst >= n)
    throw Error(ErrorCode::InvalidInput, "arrow " + id + " has an endpoint out of range");
  if (find_arrow(id)) throw Error(ErrorCode::InvalidInput, "duplicate arrow id " + id);
  arrows_.push_back({std::move(id), src, dst});
  return static_cast<int>(arrows_.size()) - 1;
}

void Site::set_identity(int object, int arrow) { identity_.at(static_cast<std::size_t>(object)) = arrow; }

void Site::set_composition(int g, int f, int result) { composition_[{g, f}] = result; }

void Site::add_cover(int object, std::vector<int> arrows) {
  covers_.at(static_cast<std::size_t>(object)).push_back(std::move(arrows));
}

void Site::set_pullback(int f, int g, std::vector<PullbackComponent> components) {
  pullbacks_[{f, g}] = std::move(components);
}

void Site::set_points(std::vector<std::string> points, std::vector<std::vector<int>> point_sets) {
  if (point_sets.size() != objects_.size())
    throw Error(ErrorCode::InvalidInput, "one point set per object required");
  points_ = std::move(points);
  point_sets_ = std::move(point_sets);
}

std::optional<int> Site::try_compose(int g, int f) const {
  if (arrow(f).dst != arrow(g).src) return std::nullopt;
  if (g == identity(arrow(g).dst)) return f;
  if (f == identity(arrow(f).dst)) return g;
  auto it = composition_.find({g, f});
  if (it == composition_.end()) return std::nullopt;
  return it->second;
}

int Site::compose(int g, int f) const {
  auto r = try_compose(g, f);
  if (!r)
    throw Error(ErrorCode::InvalidInput,
                "site composite " + arrow(g).id + " o " + arrow(f).id + " is not defined");
  return *r;
}

std::vector<int> Site::hom(int a, int b) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].src == a && arrows_[i].dst == b) out.push_back(static_cast<int>(i));
  return out;
}

const std::vector<PullbackComponent>& Site::pullback(int f, int g) const {
  auto it = pullbacks_.find({f, g});
  if (it == pullbacks_.end())
    throw Error(ErrorCode::MissingPullback,
                "no pullback recorded for (" + arrow(f).id + ", " + arrow(g).id + ")");
  return it->second;
}

std::optional<int> Site::find_object(const std::string& label) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Site::find_arrow(const std::string& id) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == id) return static_cast<int>(i);
  return std::nullopt;
}

namespace {

std::vector<int> as_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

ValidationReport validate_site(const Site& s) {
  ValidationReport r;
  const int n = static_cast<int>(s.object_count());
  const int m = static_cast<int>(s.arrow_count());
  for (int o = 0; o < n; ++o) {
    int id = s.identity(o);
    if (id < 0 || id >= m || s.arrow(id).src != o || s.arrow(id).dst != o) r.add("identity_missing", {o});
  }
  if (!r.ok()) return r;
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (s.arrow(f).dst != s.arrow(g).src) continue;
      auto gf = s.try_compose(g, f);
      if (!gf) {
        r.add("composition_missing", {g, f});
        continue;
      }
      if (s.arrow(*gf).src != s.arrow(f).src || s.arrow(*gf).dst != s.arrow(g).dst)
        r.add("composition_endpoints", {g, f});
    }
  if (!r.ok()) return r;
  for (int o = 0; o < n; ++o) {
    std::set<std::vector<int>> families;
    for (const auto& c : s.covers(o)) families.insert(as_set(c));
    for (std::size_t ci = 0; ci < s.covers(o).size(); ++ci)
      for (int a : s.covers(o)[ci])
        if (a < 0 || a >= m || s.arrow(a).dst != o) r.add("cover_arrow", {o, static_cast<int>(ci), a});
    if (!families.count({s.identity(o)})) r.add("identity_cover_missing", {o});
  }
  if (!r.ok()) return r;
  for (int o = 0; o < n; ++o)
    for (std::size_t ci = 0; ci < s.covers(o).size(); ++ci) {
      const auto& cover = s.covers(o)[ci];
      for (int g = 0; g < m; ++g) {
        if (s.arrow(g).dst != o) continue;
        const int v = s.arrow(g).src;
        std::vector<int> pulled;
        bool complete = true;
        for (int c : cover) {
          if (!s.has_pullback(c, g)) {
            r.add("missing_pullback", {c, g});
            complete = false;
            continue;
          }
          for (const auto& comp : s.pullback(c, g)) {
            const auto& left = s.arrow(comp.to_left);
            const auto& right = s.arrow(comp.to_right);
            if (left.src != comp.object || right.src != comp.object || left.dst != s.arrow(c).src ||
                right.dst != v || s.try_compose(c, comp.to_left) != s.try_compose(g, comp.to_right)) {
              r.add("pullback_square", {c, g, comp.object});
              complete = false;
            }
            pulled.push_back(comp.to_right);
          }
        }
        if (!complete) continue;
        pulled = as_set(pulled);
        bool found = false;
        for (const auto& c2 : s.covers(v))
          if (as_set(c2) == pulled) found = true;
        if (!found) r.add("pullback_stability", {o, static_cast<int>(ci), g});
      }
    }
  return r;
}

Site finite_space_site(const std::vector<std::string>& points,
                       const std::vector<std::pair<std::string, std::vector<int>>>& opens,
                       const std::vector<std::pair<std::string, std::vector<std::string>>>& covers) {
  Site s;
  std::vector<std::vector<int>> sets;
  for (const auto& [name, pts] : opens) {
    s.add_object(name);
    sets.push_back(as_set(pts));
  }
  const int n = static_cast<int>(opens.size());
  auto subset = [&](int a, int b) {
    return std::includes(sets[static_cast<std::size_t>(b)].begin(), sets[static_cast<std::size_t>(b)].end(),
                         sets[static_cast<std::size_t>(a)].begin(), sets[static_cast<std::size_t>(a)].end());
  };
  std::map<std::pair<int, int>, int> incl;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (subset(a, b)) {
        std::string id = a == b ? "id_" + s.object_label(a) : s.object_label(a) + "->" + s.object_label(b);
        incl[{a, b}] = s.add_arrow(id, a, b);
        if (a == b) s.set_identity(a, incl[{a, b}]);
      }
  for (const auto& [ab, f] : incl)
    for (const auto& [bc, g] : incl)
      if (ab.second == bc.first) s.set_composition(g, f, incl.at({ab.first, bc.second}));
  for (const auto& [ab, f] : incl)
    for (const auto& [cb, g] : incl) {
      if (ab.second != cb.second) continue;
      std::vector<int> meet;
      std::set_intersection(sets[static_cast<std::size_t>(ab.first)].begin(),
                            sets[static_cast<std::size_t>(ab.first)].end(),
                            sets[static_cast<std::size_t>(cb.first)].begin(),
                            sets[static_cast<std::size_t>(cb.first)].end(), std::back_inserter(meet));
      std::vector<int> inside;
      for (int w = 0; w < n; ++w)
        if (!sets[static_cast<std::size_t>(w)].empty() &&
            std::includes(meet.begin(), meet.end(), sets[static_cast<std::size_t>(w)].begin(),
                          sets[static_cast<std::size_t>(w)].end()))
          inside.push_back(w);
      std::vector<PullbackComponent> comps;
      for (int w : inside) {
        bool maximal = true;
        for (int w2 : inside)
          if (w2 != w && subset(w, w2) && !subset(w2, w)) maximal = false;
        if (maximal) comps.push_back({w, incl.at({w, ab.first}), incl.at({w, cb.first})});
      }
      s.set_pullback(f, g, std::move(comps));
    }
  for (int a = 0; a < n; ++a) s.add_cover(a, {s.identity(a)});
  for (const auto& [target, members] : covers) {
    auto t = s.find_object(target);
    if (!t) throw Error(ErrorCode::InvalidInput, "unknown open " + target);
    std::vector<int> family;
    for (const auto& m : members) {
      auto o = s.find_object(m);
      if (!o || !incl.count({*o, *t}))
        throw Error(ErrorCode::InvalidInput, m + " is not an open inside " + target);
      family.push_back(incl.at({*o, *t}));
    }
    if (as_set(family) != std::vector<int>{s.identity(*t)}) s.add_cover(*t, std::move(family));
  }
  s.set_points(points, sets);
  return s;
}

ValidationReport validate_prestack(const Site& s, const Prestack& x) {
  ValidationReport r;
  if (x.values.size() != s.object_count() || x.restrictions.size() != s.arrow_count()) {
    r.add("shape", {});
    return r;
  }
  for (std::size_t o = 0; o < x.values.size(); ++o) {
    auto rep = validate_groupoid(*x.values[o]);
    if (!rep.ok()) r.add("value_not_groupoid", {static_cast<int>(o)}, rep.summary(2));
  }
  if (!r.ok()) return r;
  for (std::size_t a = 0; a < s.arrow_count(); ++a) {
    const auto& arr = s.arrow(static_cast<int>(a));
    auto rep = validate_functor(x.restrictions[a], *x.values[static_cast<std::size_t>(arr.dst)],
                                *x.values[static_cast<std::size_t>(arr.src)]);
    if (!rep.ok()) r.add("restriction_not_functor", {static_cast<int>(a)}, rep.summary(2));
  }
  if (!r.ok()) return r;
  for (std::size_t o = 0; o < s.object_count(); ++o)
    if (!same_functor(x.restrictions[static_cast<std::size_t>(s.identity(static_cast<int>(o)))],
                      identity_functor(*x.values[o])))
      r.add("identity_restriction", {static_cast<int>(o)});
  const int m = static_cast<int>(s.arrow_count());
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      auto gf = s.try_compose(g, f);
      if (!gf) continue;
      auto expected = compose(x.restrictions[static_cast<std::size_t>(f)], x.restrictions[static_cast<std::size_t>(g)]);
      if (!same_functor(x.restrictions[static_cast<std::size_t>(*gf)], expected)) r.add("strictness", {g, f});
    }
  return r;
}

Prestack constant_prestack(const Site& s, const FiniteGroupoid& value) {
  Prestack x;
  auto shared = std::make_shared<const FiniteGroupoid>(value);
  x.values.assign(s.object_count(), shared);
  x.restrictions.assign(s.arrow_count(), identity_functor(value));
  return x;
}

Prestack function_prestack(const Site& s, int n) {
  if (!s.has_points()) throw Error(ErrorCode::InvalidInput, "function prestack needs a site with points");
  if (n < 1) throw Error(ErrorCode::InvalidInput, "function prestack needs n >= 1");
  Prestack x;
  std::vector<std::vector<std::vector<int>>> functions(s.object_count());
  for (std::size_t o = 0; o < s.object_count(); ++o) {
    const auto& pts = s.point_set(static_cast<int>(o));
    std::vector<int> f(pts.size(), 0);
    std::vector<std::string> labels;
    while (true) {
      functions[o].push_back(f);
      std::string label = "{";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) label += ",";
        label += s.points()[static_cast<std::size_t>(pts[i])] + ":" + std::to_string(f[i]);
      }
      labels.push_back(label + "}");
      std::size_t k = f.size();
      while (k > 0 && f[k - 1] == n - 1) f[--k] = 0;
      if (k == 0) break;
      ++f[k - 1];
    }
    x.values.push_back(std::make_shared<const FiniteGroupoid>(discrete_groupoid(labels)));
  }
  for (std::size_t a = 0; a < s.arrow_count(); ++a) {
    const auto& arr = s.arrow(static_cast<int>(a));
    const auto& big = s.point_set(arr.dst);
    const auto& small = s.point_set(arr.src);
    std::vector<std::size_t> position;
    for (int p : small) {
      auto it = std::find(big.begin(), big.end(), p);
      if (it == big.end()) throw Error(ErrorCode::InvalidInput, "arrow " + arr.id + " is not an inclusion");
      position.push_back(static_cast<std::size_t>(it - big.begin()));
    }
    std::map<std::vector<int>, int> index;
    const auto& dst_fns = functions[static_cast<std::size_t>(arr.src)];
    for (std::size_t i = 0; i < dst_fns.size(); ++i) index[dst_fns[i]] = static_cast<int>(i);
    GroupoidFunctor F;
    for (const auto& f : functions[static_cast<std::size_t>(arr.dst)]) {
      std::vector<int> restricted;
      for (auto p : position) restricted.push_back(f[p]);
      F.object_map.push_back(index.at(restricted));
    }
    F.morphism_map = F.object_map;  // discrete: morphism i is the identity of object i
    x.restrictions.push_back(std::move(F));
  }
  return x;
}

Prestack representable_prestack(const Site& s, int target) {
  Prestack x;
  std::vector<std::vector<int>> homs(s.object_count());
  for (std::size_t o = 0; o < s.object_count(); ++o) {
    homs[o] = s.hom(static_cast<int>(o), target);
    std::vector<std::string> labels;
    for (int a : homs[o]) labels.push_back(s.arrow(a).id);
    x.values.push_back(std::make_shared<const FiniteGroupoid>(discrete_groupoid(labels)));
  }
  for (std::size_t a = 0; a < s.arrow_count(); ++a) {
    const auto& arr = s.arrow(static_cast<int>(a));
    const auto& src_homs = homs[static_cast<std::size_t>(arr.src)];
    GroupoidFunctor F;
    for (int h : homs[static_cast<std::size_t>(arr.dst)]) {
      int hf = s.compose(h, static_cast<int>(a));
      auto it = std::find(src_homs.begin(), src_homs.end(), hf);
      F.object_map.push_back(static_cast<int>(it - src_homs.begin()));
    }
    F.morphism_map = F.object_map;
    x.restrictions.push_back(std::move(F));
  }
  return x;
}

namespace builtin {

Site circle2() {
  return finite_space_site({"p1", "p2", "q1", "q2"},
                           {{"V1", {2}}, {"V2", {3}}, {"U1", {0, 2, 3}}, {"U2", {1, 2, 3}}, {"S", {0, 1, 2, 3}}},
                           {{"S", {"U1", "U2"}}, {"U1", {"U1", "V1", "V2"}}, {"U2", {"U2", "V1", "V2"}}});
}

Site discrete2() {
  return finite_space_site({"1", "2"}, {{"{1}", {0}}, {"{2}", {1}}, {"{1,2}", {0, 1}}},
                           {{"{1,2}", {"{1}", "{2}"}}});
}

}  // namespace builtin

}  // namespace dk
