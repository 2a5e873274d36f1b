#include "deformkit/descent.hpp"

#include <algorithm>
#include <numeric>

#include "deformkit/parallel.hpp"

namespace dk {

ValidationReport validate_cosimplicial(const CosimplicialGroupoid& d) {
  ValidationReport r;
  auto check_shape = [&r](const ComponentwiseFunctor& f, const ProductGroupoid& src,
                          const ProductGroupoid& dst, const std::string& name) {
    if (f.sources.size() != dst.size() || f.functors.size() != dst.size()) {
      r.add("shape", {}, name);
      return;
    }
    for (std::size_t k = 0; k < dst.size(); ++k) {
      const auto s = static_cast<std::size_t>(f.sources[k]);
      if (f.sources[k] < 0 || s >= src.size()) {
        r.add("shape", {static_cast<int>(k)}, name);
        continue;
      }
      auto rep = validate_functor(f.functors[k], src.factor(s), dst.factor(k));
      if (!rep.ok()) r.add("not_a_functor", {static_cast<int>(k)}, name + ": " + rep.summary(1));
    }
  };
  check_shape(d.d0_1, d.level0, d.level1, "d0^1");
  check_shape(d.d1_1, d.level0, d.level1, "d1^1");
  check_shape(d.d0_2, d.level1, d.level2, "d0^2");
  check_shape(d.d1_2, d.level1, d.level2, "d1^2");
  check_shape(d.d2_2, d.level1, d.level2, "d2^2");
  check_shape(d.s0_0, d.level1, d.level0, "s0^0");
  if (!r.ok()) return r;
  auto eq = [&](const ComponentwiseFunctor& a, const ComponentwiseFunctor& b, const ProductGroupoid& src,
                const std::string& name) {
    if (!same_functor(a, b, src)) r.add("cosimplicial_identity", {}, name);
  };
  eq(compose(d.d1_2, d.d0_1), compose(d.d0_2, d.d0_1), d.level0, "d1 d0 = d0 d0");
  eq(compose(d.d2_2, d.d0_1), compose(d.d0_2, d.d1_1), d.level0, "d2 d0 = d0 d1");
  eq(compose(d.d2_2, d.d1_1), compose(d.d1_2, d.d1_1), d.level0, "d2 d1 = d1 d1");
  eq(compose(d.s0_0, d.d0_1), identity_functor(d.level0), d.level0, "s0 d0 = id");
  eq(compose(d.s0_0, d.d1_1), identity_functor(d.level0), d.level0, "s0 d1 = id");
  return r;
}

CosimplicialGroupoid constant_diagram(const FiniteGroupoid& value) {
  CosimplicialGroupoid d;
  ProductGroupoid p;
  p.factors.push_back(std::make_shared<const FiniteGroupoid>(value));
  p.factor_names.push_back("C");
  d.level0 = d.level1 = d.level2 = p;
  auto id = identity_functor(p);
  d.d0_1 = d.d1_1 = d.d0_2 = d.d1_2 = d.d2_2 = d.s0_0 = id;
  return d;
}

namespace {

// Constraint on the transition tuple h checked once its last slot is filled.
struct Constraint {
  enum class Kind { Normalization, Cocycle } kind;
  std::size_t out = 0;  // output factor of s0 or of level 2
  std::size_t last = 0;
};

std::string tuple_label(const ProductGroupoid& p, const std::vector<int>& m, bool morphisms) {
  return morphisms ? p.morphism_label(m) : p.object_label(m);
}

}  // namespace

Holim holim2(const CosimplicialGroupoid& d) {
  auto rep = validate_cosimplicial(d);
  if (!rep.ok()) throw Error(ErrorCode::InvalidDiagram, "cosimplicial identities fail: " + rep.summary());
  const auto& X0 = d.level0;
  const auto& X1 = d.level1;
  const auto& X2 = d.level2;
  const std::size_t n1 = X1.size();

  std::vector<Constraint> constraints;
  for (std::size_t i = 0; i < d.s0_0.sources.size(); ++i)
    constraints.push_back({Constraint::Kind::Normalization, i, static_cast<std::size_t>(d.s0_0.sources[i])});
  for (std::size_t t = 0; t < X2.size(); ++t) {
    std::size_t last = static_cast<std::size_t>(
        std::max({d.d0_2.sources[t], d.d1_2.sources[t], d.d2_2.sources[t]}));
    constraints.push_back({Constraint::Kind::Cocycle, t, last});
  }
  std::vector<std::vector<const Constraint*>> due(n1);
  for (const auto& c : constraints) due[c.last].push_back(&c);

  Holim out;
  for (const auto& x : X0.objects()) {
    const auto src = d.d1_1.object(x);
    const auto dst = d.d0_1.object(x);
    std::vector<const std::vector<int>*> choices(n1);
    bool empty = false;
    for (std::size_t k = 0; k < n1; ++k) {
      choices[k] = &X1.factor(k).hom(src[k], dst[k]);
      if (choices[k]->empty()) empty = true;
    }
    if (empty) continue;
    std::vector<int> h(n1, -1);
    auto satisfied = [&](const Constraint& c) {
      if (c.kind == Constraint::Kind::Normalization) {
        const auto& F = d.s0_0.functors[c.out];
        return F.morphism_map[static_cast<std::size_t>(h[c.last])] ==
               X0.factor(c.out).identity(x[c.out]);
      }
      const std::size_t t = c.out;
      auto image = [&](const ComponentwiseFunctor& F) {
        return F.functors[t].morphism_map[static_cast<std::size_t>(h[static_cast<std::size_t>(F.sources[t])])];
      };
      return X2.factor(t).compose(image(d.d0_2), image(d.d2_2)) == image(d.d1_2);
    };
    // Depth-first over h slots, checking constraints as soon as they are determined.
    std::vector<std::size_t> pos(n1, 0);
    std::size_t k = 0;
    while (true) {
      if (k == n1) {
        int idx = out.groupoid.add_object("x=" + tuple_label(X0, x, false) + ";h=" + tuple_label(X1, h, true));
        out.object_index[{x, h}] = idx;
        out.x.push_back(x);
        out.h.push_back(h);
        if (n1 == 0) break;
        --k;
        ++pos[k];
        continue;
      }
      if (pos[k] >= choices[k]->size()) {
        pos[k] = 0;
        h[k] = -1;
        if (k == 0) break;
        --k;
        ++pos[k];
        continue;
      }
      h[k] = (*choices[k])[pos[k]];
      bool ok = true;
      for (const Constraint* c : due[k])
        if (!satisfied(*c)) {
          ok = false;
          break;
        }
      if (ok)
        ++k;
      else
        ++pos[k];
    }
  }

  // Morphisms: every f: x -> x' out of an object determines h' = d0(f) h d1(f)^-1.
  for (std::size_t o = 0; o < out.x.size(); ++o) {
    const auto& x = out.x[o];
    for (const auto& y : X0.objects()) {
      for (const auto& f : X0.hom(x, y)) {
        const auto d1f = d.d1_1.morphism(f);
        std::vector<int> d1f_inv(d1f.size());
        for (std::size_t k = 0; k < d1f.size(); ++k) d1f_inv[k] = X1.factor(k).inverse(d1f[k]);
        const auto h2 = X1.compose(X1.compose(d.d0_1.morphism(f), out.h[o]), d1f_inv);
        auto it = out.object_index.find({y, h2});
        if (it == out.object_index.end()) continue;
        int idx = out.groupoid.add_morphism(static_cast<int>(o), it->second, tuple_label(X0, f, true));
        out.morphism_index[{static_cast<int>(o), f}] = idx;
        out.f.push_back(f);
      }
    }
  }
  for (std::size_t o = 0; o < out.x.size(); ++o)
    out.groupoid.set_identity(static_cast<int>(o), out.morphism_index.at({static_cast<int>(o), X0.identity(out.x[o])}));
  for (std::size_t m = 0; m < out.f.size(); ++m) {
    const auto& mm = out.groupoid.morphism(static_cast<int>(m));
    std::vector<int> inv(out.f[m].size());
    for (std::size_t k = 0; k < inv.size(); ++k) inv[k] = X0.factor(k).inverse(out.f[m][k]);
    out.groupoid.set_inverse(static_cast<int>(m), out.morphism_index.at({mm.dst, inv}));
  }
  auto fs = std::make_shared<std::vector<std::vector<int>>>(out.f);
  auto index = std::make_shared<std::map<std::pair<int, std::vector<int>>, int>>(out.morphism_index);
  auto srcs = std::make_shared<std::vector<int>>();
  for (std::size_t m = 0; m < out.f.size(); ++m) srcs->push_back(out.groupoid.morphism(static_cast<int>(m)).src);
  ProductGroupoid base = X0;
  out.groupoid.set_composer([fs, index, srcs, base](int g, int f) {
    auto composite = base.compose((*fs)[static_cast<std::size_t>(g)], (*fs)[static_cast<std::size_t>(f)]);
    return index->at({(*srcs)[static_cast<std::size_t>(f)], composite});
  });
  out.groupoid.finalize();
  return out;
}

namespace {

ProductGroupoid level_groupoid(const Site& site, const Prestack& x, const std::vector<CechPiece>& pieces) {
  ProductGroupoid p;
  for (const auto& piece : pieces) {
    p.factors.push_back(x.values[static_cast<std::size_t>(piece.object)]);
    std::string name = site.object_label(piece.object) + "[";
    for (std::size_t k = 0; k < piece.members.size(); ++k) name += (k ? "," : "") + std::to_string(piece.members[k]);
    p.factor_names.push_back(name + "]");
  }
  return p;
}

// Finds a piece of `pieces` over `members` and an arrow u: object -> piece
// with piece.to_member[k] o u = maps[k]; returns the component functor.
std::pair<int, GroupoidFunctor> factor_through(const Site& site, const Prestack& x,
                                               const std::vector<CechPiece>& pieces,
                                               const std::vector<int>& members, int object,
                                               const std::vector<int>& maps) {
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    if (pieces[p].members != members) continue;
    for (int u : site.hom(object, pieces[p].object)) {
      bool ok = true;
      for (std::size_t k = 0; k < maps.size() && ok; ++k)
        ok = site.try_compose(pieces[p].to_member[k], u) == maps[k];
      if (ok) return {static_cast<int>(p), x.restrictions[static_cast<std::size_t>(u)]};
    }
  }
  throw Error(ErrorCode::InvalidDiagram, "no Cech face map out of " + site.object_label(object));
}

}  // namespace

CechDiagram cech_diagram(const Site& site, int object, const std::vector<int>& cover, const Prestack& x) {
  CechDiagram out;
  const int n = static_cast<int>(cover.size());
  for (int a : cover)
    if (site.arrow(a).dst != object)
      throw Error(ErrorCode::InvalidInput, "cover arrow " + site.arrow(a).id + " does not land in " +
                                               site.object_label(object));
  for (int i = 0; i < n; ++i) {
    const int ci = cover[static_cast<std::size_t>(i)];
    out.level0.push_back({{i}, site.arrow(ci).src, {site.identity(site.arrow(ci).src)}});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& comp : site.pullback(cover[static_cast<std::size_t>(i)], cover[static_cast<std::size_t>(j)]))
        out.level1.push_back({{i, j}, comp.object, {comp.to_left, comp.to_right}});
  for (const auto& piece : out.level1) {
    const int i = piece.members[0];
    const int to_u = site.compose(cover[static_cast<std::size_t>(i)], piece.to_member[0]);
    for (int k = 0; k < n; ++k)
      for (const auto& comp : site.pullback(to_u, cover[static_cast<std::size_t>(k)]))
        out.level2.push_back({{piece.members[0], piece.members[1], k},
                              comp.object,
                              {site.compose(piece.to_member[0], comp.to_left),
                               site.compose(piece.to_member[1], comp.to_left), comp.to_right}});
  }
  // Sort level 2 by member tuple so the layout does not depend on the loop nesting.
  std::stable_sort(out.level2.begin(), out.level2.end(),
                   [](const CechPiece& a, const CechPiece& b) { return a.members < b.members; });

  auto& d = out.diagram;
  d.level0 = level_groupoid(site, x, out.level0);
  d.level1 = level_groupoid(site, x, out.level1);
  d.level2 = level_groupoid(site, x, out.level2);
  for (const auto& piece : out.level1) {
    d.d0_1.sources.push_back(piece.members[1]);
    d.d0_1.functors.push_back(x.restrictions[static_cast<std::size_t>(piece.to_member[1])]);
    d.d1_1.sources.push_back(piece.members[0]);
    d.d1_1.functors.push_back(x.restrictions[static_cast<std::size_t>(piece.to_member[0])]);
  }
  for (const auto& piece : out.level2) {
    const auto& m = piece.members;
    const auto& t = piece.to_member;
    auto add = [&](ComponentwiseFunctor& F, std::vector<int> members, std::vector<int> maps) {
      auto [src, functor] = factor_through(site, x, out.level1, members, piece.object, maps);
      F.sources.push_back(src);
      F.functors.push_back(std::move(functor));
    };
    add(d.d0_2, {m[1], m[2]}, {t[1], t[2]});
    add(d.d1_2, {m[0], m[2]}, {t[0], t[2]});
    add(d.d2_2, {m[0], m[1]}, {t[0], t[1]});
  }
  for (const auto& piece : out.level0) {
    const int id = site.identity(piece.object);
    auto [src, functor] = factor_through(site, x, out.level1, {piece.members[0], piece.members[0]},
                                         piece.object, {id, id});
    d.s0_0.sources.push_back(src);
    d.s0_0.functors.push_back(std::move(functor));
  }
  return out;
}

GroupoidFunctor comparison_functor(const std::vector<int>& cover, const Prestack& x, int object,
                                   const CechDiagram& cech, const Holim& holim) {
  const auto& value = *x.values[static_cast<std::size_t>(object)];
  const auto& d = cech.diagram;
  GroupoidFunctor psi;
  for (std::size_t u = 0; u < value.object_count(); ++u) {
    std::vector<int> xs;
    for (int c : cover) xs.push_back(x.restrictions[static_cast<std::size_t>(c)].object_map[u]);
    auto h = d.level1.identity(d.d1_1.object(xs));
    auto it = holim.object_index.find({xs, h});
    if (it == holim.object_index.end())
      throw Error(ErrorCode::InvalidDiagram, "restriction of " + value.object_label(static_cast<int>(u)) +
                                                 " is not descent data");
    psi.object_map.push_back(it->second);
  }
  for (std::size_t m = 0; m < value.morphism_count(); ++m) {
    std::vector<int> fs;
    for (int c : cover) fs.push_back(x.restrictions[static_cast<std::size_t>(c)].morphism_map[m]);
    int src = psi.object_map[static_cast<std::size_t>(value.morphism(static_cast<int>(m)).src)];
    psi.morphism_map.push_back(holim.morphism_index.at({src, fs}));
  }
  return psi;
}

DescentReport descent_check(const Site& site, const Prestack& x, unsigned threads) {
  auto site_report = validate_site(site);
  if (!site_report.ok()) throw ValidationFailure("site", site_report);
  auto prestack_report = validate_prestack(site, x);
  if (!prestack_report.ok()) throw ValidationFailure("prestack", prestack_report);

  std::vector<int> order(site.object_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return site.object_label(a) < site.object_label(b); });
  std::vector<std::pair<int, std::size_t>> jobs;
  for (int o : order)
    for (std::size_t c = 0; c < site.covers(o).size(); ++c) jobs.push_back({o, c});

  DescentReport report;
  report.covers.resize(jobs.size());
  parallel_for(
      jobs.size(),
      [&](std::size_t j) {
        const auto [o, c] = jobs[j];
        const auto& cover = site.covers(o)[c];
        CoverVerdict v;
        v.object = site.object_label(o);
        for (int a : cover) v.cover.push_back(site.arrow(a).id);
        auto cech = cech_diagram(site, o, cover, x);
        auto holim = holim2(cech.diagram);
        auto psi = comparison_functor(cover, x, o, cech, holim);
        const auto& value = *x.values[static_cast<std::size_t>(o)];
        v.value_pi0 = pi0(value).count;
        v.holim_objects = holim.groupoid.object_count();
        v.holim_pi0 = pi0(holim.groupoid).count;
        v.verdict = is_weak_equivalence(psi, value, holim.groupoid);
        report.covers[j] = std::move(v);
      },
      threads);
  return report;
}

}  // namespace dk
