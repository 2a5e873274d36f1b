#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "deformkit/descent.hpp"
#include "deformkit/error.hpp"
#include "deformkit/group.hpp"
#include "deformkit/groupoid.hpp"
#include "deformkit/prefact.hpp"
#include "deformkit/site.hpp"
#include "support/oracles.hpp"

using namespace dk;

namespace {

// a, b with a single isomorphism f: a -> b.
FiniteGroupoid two_isomorphic() {
  FiniteGroupoid g;
  int a = g.add_object("a"), b = g.add_object("b");
  int ia = g.add_morphism(a, a, "id_a"), ib = g.add_morphism(b, b, "id_b");
  int f = g.add_morphism(a, b, "f"), fi = g.add_morphism(b, a, "f^-1");
  g.set_identity(a, ia);
  g.set_identity(b, ib);
  g.set_inverse(ia, ia);
  g.set_inverse(ib, ib);
  g.set_inverse(f, fi);
  g.set_inverse(fi, f);
  g.set_composition(ia, ia, ia);
  g.set_composition(ib, ib, ib);
  g.set_composition(f, ia, f);
  g.set_composition(ib, f, f);
  g.set_composition(fi, ib, fi);
  g.set_composition(ia, fi, fi);
  g.set_composition(fi, f, ia);
  g.set_composition(f, fi, ib);
  g.finalize();
  return g;
}

FiniteGroupoid bg(const std::string& name) {
  auto g = builtin::group(name);
  return delooping(g.labels(), g.table(), g.identity());
}

struct CircleHolim {
  std::size_t objects;
  std::size_t components;
};

CircleHolim circle_holim(const std::string& group) {
  auto site = builtin::circle2();
  auto x = constant_prestack(site, bg(group));
  const int s = *site.find_object("S");
  const auto& cover = site.covers(s).at(1);
  auto cech = cech_diagram(site, s, cover, x);
  auto h = holim2(cech.diagram);
  return {h.groupoid.object_count(), pi0(h.groupoid).count};
}

// Random finite space with opens closed under nonempty intersection; every
// subfamily of opens inside U whose union is U covers U.
Site random_space_site(oracle::Gen& gen) {
  const int npoints = gen.uniform(2, 4);
  std::vector<std::vector<int>> opens;
  std::vector<int> all(static_cast<std::size_t>(npoints));
  std::iota(all.begin(), all.end(), 0);
  opens.push_back(all);
  const int extra = gen.uniform(1, 4);
  for (int k = 0; k < extra; ++k) {
    std::vector<int> s;
    for (int p = 0; p < npoints; ++p)
      if (gen.coin()) s.push_back(p);
    if (!s.empty()) opens.push_back(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    const auto snapshot = opens;
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) {
        std::vector<int> meet;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
        if (!meet.empty() && std::find(opens.begin(), opens.end(), meet) == opens.end()) {
          opens.push_back(meet);
          grew = true;
        }
      }
  }
  std::vector<std::string> points;
  for (int p = 0; p < npoints; ++p) points.push_back("p" + std::to_string(p));
  std::vector<std::pair<std::string, std::vector<int>>> named;
  for (std::size_t i = 0; i < opens.size(); ++i) named.push_back({"O" + std::to_string(i), opens[i]});
  std::vector<std::pair<std::string, std::vector<std::string>>> covers;
  for (std::size_t u = 0; u < opens.size(); ++u) {
    std::vector<std::size_t> inside;
    for (std::size_t v = 0; v < opens.size(); ++v)
      if (std::includes(opens[u].begin(), opens[u].end(), opens[v].begin(), opens[v].end())) inside.push_back(v);
    for (unsigned mask = 1; mask < (1u << inside.size()); ++mask) {
      std::vector<int> un;
      std::vector<std::string> members;
      for (std::size_t k = 0; k < inside.size(); ++k)
        if (mask & (1u << k)) {
          members.push_back(named[inside[k]].first);
          un.insert(un.end(), opens[inside[k]].begin(), opens[inside[k]].end());
        }
      std::sort(un.begin(), un.end());
      un.erase(std::unique(un.begin(), un.end()), un.end());
      if (un != opens[u]) continue;
      if (members.size() == 1 && members[0] == named[u].first) continue;  // identity cover is implicit
      covers.push_back({named[u].first, members});
    }
  }
  return finite_space_site(points, named, covers);
}

// Truncated polynomial observables, built from labels alone.
using Monomial = std::map<std::string, int>;

std::string monomial_label(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m) {
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += v + (e > 1 ? "^" + std::to_string(e) : "");
  }
  return s.empty() ? "1" : s;
}

std::vector<Monomial> monomials_upto(const std::vector<std::string>& vars, int bound) {
  std::vector<Monomial> out{Monomial{}};
  for (const auto& v : vars) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      int total = 0;
      for (const auto& [_, e] : m) total += e;
      for (int e = 0; total + e <= bound; ++e) {
        auto m2 = m;
        if (e > 0) m2[v] = e;
        next.push_back(m2);
      }
    }
    out = next;
  }
  return out;
}

struct NestedModel {
  PrefactData data;
  std::vector<std::vector<Monomial>> basis;
};

// Patches a, b, c (one coordinate each), V = a u b, W = a u b u c, degree <= 2.
NestedModel nested_oracle() {
  const int D = 2;
  NestedModel m;
  m.data.opens = {"a", "b", "c", "V", "W"};
  const std::vector<std::vector<std::string>> vars = {
      {"a_1"}, {"b_1"}, {"c_1"}, {"a_1", "b_1"}, {"a_1", "b_1", "c_1"}};
  const std::vector<std::set<std::string>> pts = {{"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "b", "c"}};
  const std::size_t n = 5;
  m.data.disjoint.assign(n, std::vector<bool>(n, false));
  m.data.contained.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::string> meet;
      std::set_intersection(pts[i].begin(), pts[i].end(), pts[j].begin(), pts[j].end(), std::back_inserter(meet));
      m.data.disjoint[i][j] = meet.empty();
      m.data.contained[i][j] = std::includes(pts[j].begin(), pts[j].end(), pts[i].begin(), pts[i].end());
    }
  for (std::size_t i = 0; i < n; ++i) {
    m.basis.push_back(monomials_upto(vars[i], D));
    std::vector<std::string> labels;
    for (const auto& mono : m.basis.back()) labels.push_back(monomial_label(mono));
    GradedVectorSpace sp;
    sp.set_component(0, labels);
    m.data.obs.emplace_back(sp);
  }
  auto product_map = [&](std::vector<int> fam, int target) {
    std::size_t cols = 1;
    for (int u : fam) cols *= m.basis[static_cast<std::size_t>(u)].size();
    const auto& tb = m.basis[static_cast<std::size_t>(target)];
    Matrix mat(tb.size(), cols);
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t rest = c;
      Monomial prod;
      for (std::size_t k = fam.size(); k-- > 0;) {
        const auto& fb = m.basis[static_cast<std::size_t>(fam[k])];
        for (const auto& [v, e] : fb[rest % fb.size()]) prod[v] += e;
        rest /= fb.size();
      }
      int total = 0;
      for (const auto& [_, e] : prod) total += e;
      if (total > D) continue;
      auto it = std::find(tb.begin(), tb.end(), prod);
      REQUIRE(it != tb.end());
      mat(static_cast<std::size_t>(it - tb.begin()), c) = 1;
    }
    m.data.maps[{fam, target}] = mat;
  };
  const std::vector<std::pair<std::vector<int>, int>> families = {
      {{0}, 3}, {{1}, 3}, {{0, 1}, 3}, {{1, 0}, 3}, {{0}, 4}, {{1}, 4}, {{2}, 4}, {{3}, 4},
      {{0, 1}, 4}, {{1, 0}, 4}, {{3, 2}, 4}, {{2, 3}, 4}, {{0, 1, 2}, 4}, {{2, 1, 0}, 4}};
  for (const auto& [fam, t] : families) product_map(fam, t);
  return m;
}

bool has_kind(const ValidationReport& r, const std::string& kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("groupoid basics and pi0") {
  auto d5 = discrete_groupoid({"a", "b", "c", "d", "e"});
  CHECK(validate_groupoid(d5).ok());
  CHECK(pi0(d5).count == 5);
  auto s3 = bg("S3");
  CHECK(validate_groupoid(s3).ok());
  CHECK(pi0(s3).count == 1);
  auto iso = two_isomorphic();
  CHECK(validate_groupoid(iso).ok());
  auto p = pi0(iso);
  CHECK(p.count == 1);
  CHECK(p.representatives == std::vector<std::string>{"a"});
}

TEST_CASE("is_weak_equivalence examples") {
  auto iso = two_isomorphic();
  CHECK(is_weak_equivalence(identity_functor(iso), iso, iso).ok());

  auto point = discrete_groupoid({"a"});
  GroupoidFunctor incl{{0}, {iso.identity(0)}};
  CHECK(validate_functor(incl, point, iso).ok());
  CHECK(is_weak_equivalence(incl, point, iso).ok());

  auto two = discrete_groupoid({"a", "b"});
  GroupoidFunctor into{{0}, {two.identity(0)}};
  auto v = is_weak_equivalence(into, point, two);
  CHECK_FALSE(v.ok());
  CHECK_FALSE(v.essentially_surjective);
  REQUIRE(v.unreachable_object.has_value());
  CHECK(*v.unreachable_object == "b");

  // BZ2 -> point is essentially surjective but not faithful
  auto z2 = bg("Z2");
  GroupoidFunctor collapse{{0}, {point.identity(0), point.identity(0)}};
  auto w = is_weak_equivalence(collapse, z2, point);
  CHECK_FALSE(w.fully_faithful);
  CHECK(w.hom_witness.has_value());
}

TEST_CASE("property: holim of a constant diagram is weakly equivalent to its value") {
  for (const auto& value : {bg("S3"), bg("Q8"), two_isomorphic(), discrete_groupoid({"x", "y", "z"})}) {
    auto h = holim2(constant_diagram(value));
    CHECK(h.groupoid.object_count() == value.object_count());
    // x -> (x, id_x), f -> f
    GroupoidFunctor F;
    for (int o = 0; o < static_cast<int>(value.object_count()); ++o)
      F.object_map.push_back(h.object_index.at({{o}, {value.identity(o)}}));
    for (int m = 0; m < static_cast<int>(value.morphism_count()); ++m)
      F.morphism_map.push_back(
          h.morphism_index.at({F.object_map[static_cast<std::size_t>(value.morphism(m).src)], {m}}));
    CHECK(validate_functor(F, value, h.groupoid).ok());
    CHECK(is_weak_equivalence(F, value, h.groupoid).ok());
  }
}

TEST_CASE("holim of the circle Cech diagram of constant BG") {
  auto z2 = circle_holim("Z2");
  CHECK(z2.objects == 4);
  CHECK(z2.components == 2);
  auto s3 = circle_holim("S3");
  CHECK(s3.objects == 36);
  CHECK(s3.components == 3);
  CHECK(circle_holim("Z4").components == 4);
}

TEST_CASE("property: circle holim components equal conjugacy classes") {
  for (const char* name : {"Z2", "Z3", "Z4", "Z5", "S3", "Q8", "D4", "D5", "S4"}) {
    CAPTURE(name);
    auto g = builtin::group(name);
    auto h = circle_holim(name);
    CHECK(h.components == static_cast<std::size_t>(oracle::class_count(g)));
    CHECK(h.objects == static_cast<std::size_t>(g.order() * g.order()));
  }
}

TEST_CASE("cech_diagram examples") {
  SUBCASE("identity cover") {
    auto site = builtin::circle2();
    auto x = constant_prestack(site, bg("S3"));
    const int u1 = *site.find_object("U1");
    auto cech = cech_diagram(site, u1, {site.identity(u1)}, x);
    CHECK(cech.diagram.level0.size() == 1);
    CHECK(cech.diagram.level1.size() == 1);
    CHECK(cech.diagram.level2.size() == 1);
    auto pg = cech.diagram.level0;
    CHECK(same_functor(cech.diagram.d0_1, identity_functor(pg), pg));
    CHECK(same_functor(cech.diagram.d1_1, identity_functor(pg), pg));
  }
  SUBCASE("circle: the U1,U2 overlap splits into V1 and V2") {
    auto site = builtin::circle2();
    auto x = constant_prestack(site, bg("Z2"));
    const int s = *site.find_object("S");
    auto cech = cech_diagram(site, s, site.covers(s).at(1), x);
    CHECK(cech.level0.size() == 2);
    std::vector<std::string> off;
    for (const auto& p : cech.level1)
      if (p.members == std::vector<int>{0, 1}) off.push_back(site.object_label(p.object));
    CHECK(off == std::vector<std::string>{"V1", "V2"});
    CHECK(cech.level1.size() == 6);
  }
  SUBCASE("discrete two points: empty overlap contributes nothing") {
    auto site = builtin::discrete2();
    auto x = function_prestack(site, 2);
    const int top = *site.find_object("{1,2}");
    auto cech = cech_diagram(site, top, site.covers(top).at(1), x);
    for (const auto& p : cech.level1) CHECK(p.members[0] == p.members[1]);
    CHECK(cech.level1.size() == 2);
  }
}

TEST_CASE("missing pullback is reported") {
  Site s;
  int u = s.add_object("U"), v = s.add_object("V");
  int iu = s.add_arrow("id_U", u, u), iv = s.add_arrow("id_V", v, v), f = s.add_arrow("f", v, u);
  s.set_identity(u, iu);
  s.set_identity(v, iv);
  s.set_composition(iu, iu, iu);
  s.set_composition(iv, iv, iv);
  s.set_composition(f, iv, f);
  s.set_composition(iu, f, f);
  s.add_cover(u, {f});
  CHECK_FALSE(validate_site(s).ok());
  auto x = constant_prestack(s, bg("Z2"));
  try {
    cech_diagram(s, u, {f}, x);
    FAIL("expected MISSING_PULLBACK");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingPullback);
  }
}

TEST_CASE("descent_check examples") {
  auto functions = descent_check(builtin::discrete2(), function_prestack(builtin::discrete2(), 3));
  CHECK(functions.ok());

  auto circle = builtin::circle2();
  auto constant = descent_check(circle, constant_prestack(circle, bg("S3")));
  CHECK_FALSE(constant.ok());
  bool seen = false;
  for (const auto& c : constant.covers)
    if (c.object == "S" && c.cover.size() == 2) {
      seen = true;
      CHECK(c.value_pi0 == 1);
      CHECK(c.holim_pi0 == 3);
      CHECK_FALSE(c.verdict.essentially_surjective);
    }
  CHECK(seen);

  auto bare = finite_space_site({"p", "q"}, {{"A", {0}}, {"B", {0, 1}}}, {});
  auto r = descent_check(bare, constant_prestack(bare, bg("S3")));
  CHECK(r.ok());
  CHECK(r.covers.size() == 2);
}

TEST_CASE("descent verdicts do not depend on the thread count") {
  auto circle = builtin::circle2();
  auto x = constant_prestack(circle, bg("D4"));
  auto a = descent_check(circle, x, 1);
  auto b = descent_check(circle, x, 4);
  REQUIRE(a.covers.size() == b.covers.size());
  for (std::size_t i = 0; i < a.covers.size(); ++i) {
    CHECK(a.covers[i].object == b.covers[i].object);
    CHECK(a.covers[i].holim_pi0 == b.covers[i].holim_pi0);
    CHECK(a.covers[i].verdict.ok() == b.covers[i].verdict.ok());
  }
}

TEST_CASE("property: representable prestacks on random finite sites are stacks") {
  oracle::Gen gen(4242);
  int covers_checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto site = random_space_site(gen);
    REQUIRE(validate_site(site).ok());
    for (int target = 0; target < static_cast<int>(site.object_count()); ++target) {
      auto x = representable_prestack(site, target);
      auto r = descent_check(site, x);
      CHECK(r.ok());
      covers_checked += static_cast<int>(r.covers.size());
    }
  }
  CHECK(covers_checked > 100);
}

TEST_CASE("function prestacks satisfy descent on the circle site") {
  auto circle = builtin::circle2();
  CHECK(descent_check(circle, function_prestack(circle, 2)).ok());
}

TEST_CASE("prefact_check: constant and sign-flip controls") {
  PrefactData d;
  d.opens = {"U1", "U2", "V"};
  d.disjoint = {{false, true, false}, {true, false, false}, {false, false, false}};
  d.contained = {{true, false, true}, {false, true, true}, {false, false, true}};
  for (int i = 0; i < 3; ++i) {
    GradedVectorSpace sp;
    sp.set_component(0, {"1"});
    d.obs.emplace_back(sp);
  }
  for (auto fam : std::vector<std::vector<int>>{{0}, {1}, {0, 1}, {1, 0}}) d.maps[{fam, 2}] = Matrix::identity(1);
  REQUIRE(validate_prefact(d).ok());
  CHECK(prefact_check(d).ok());

  // degree-1 generators: the swap carries a Koszul sign, so equal matrices disagree
  PrefactData f = d;
  f.obs.clear();
  for (int i = 0; i < 2; ++i) {
    GradedVectorSpace sp;
    sp.set_component(1, {"u" + std::to_string(i + 1)});
    f.obs.emplace_back(sp);
  }
  GradedVectorSpace v;
  v.set_component(1, {"a", "b"});
  v.set_component(2, {"ab"});
  f.obs.emplace_back(v);
  f.maps.clear();
  f.maps[{{0}, 2}] = Matrix::from_rows({{1}, {0}, {0}});
  f.maps[{{1}, 2}] = Matrix::from_rows({{0}, {1}, {0}});
  f.maps[{{0, 1}, 2}] = Matrix::from_rows({{0}, {0}, {1}});
  f.maps[{{1, 0}, 2}] = Matrix::from_rows({{0}, {0}, {1}});
  REQUIRE(validate_prefact(f).ok());
  auto r = prefact_check(f);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].kind == "invariance");
  CHECK(r.violations[0].indices == std::vector<int>{0, 1, 1, 0, 2});

  // the Koszul-correct swap passes
  f.maps[{{1, 0}, 2}] = Matrix::from_rows({{0}, {0}, {-1}});
  CHECK(prefact_check(f).ok());
}

TEST_CASE("prefact_check: three-level nesting of truncated polynomial observables") {
  auto m = nested_oracle();
  REQUIRE(validate_prefact(m.data).ok());
  CHECK(prefact_check(m.data).ok());

  // agrees with obs_assignment on every shared structure map
  ObsModel model{{{"a", 1}, {"b", 1}, {"c", 1}}, {{"V", {"a", "b"}}, {"W", {"a", "b", "c"}}}, 2};
  auto lib = obs_assignment(model);
  REQUIRE(lib.opens == m.data.opens);
  for (std::size_t u = 0; u < 5; ++u) {
    auto want = m.data.obs[u].spaces().labels(0);
    auto got = lib.obs[u].spaces().labels(0);
    CHECK(std::is_permutation(want.begin(), want.end(), got.begin(), got.end()));
  }
  int compared = 0;
  for (const auto& [key, mat] : m.data.maps) {
    const auto it = lib.maps.find(key);
    REQUIRE(it != lib.maps.end());
    // compare column by column through labels
    const auto& fam = key.first;
    const auto& tl = m.data.obs[static_cast<std::size_t>(key.second)].spaces().labels(0);
    const auto& tl2 = lib.obs[static_cast<std::size_t>(key.second)].spaces().labels(0);
    std::size_t cols = mat.cols();
    REQUIRE(it->second.cols() == cols);
    for (std::size_t c = 0; c < cols; ++c) {
      // translate the column tuple from oracle order to library order
      std::size_t rest = c, c2 = 0, stride = 1;
      for (std::size_t k = fam.size(); k-- > 0;) {
        const auto& fl = m.data.obs[static_cast<std::size_t>(fam[k])].spaces().labels(0);
        const auto& fl2 = lib.obs[static_cast<std::size_t>(fam[k])].spaces().labels(0);
        const auto idx = rest % fl.size();
        rest /= fl.size();
        const auto idx2 = static_cast<std::size_t>(std::find(fl2.begin(), fl2.end(), fl[idx]) - fl2.begin());
        c2 += idx2 * stride;
        stride *= fl2.size();
      }
      for (std::size_t r = 0; r < mat.rows(); ++r) {
        const auto r2 = static_cast<std::size_t>(std::find(tl2.begin(), tl2.end(), tl[r]) - tl2.begin());
        CHECK(mat(r, c) == it->second(r2, c2));
      }
    }
    ++compared;
  }
  CHECK(compared == static_cast<int>(m.data.maps.size()));

  // breaking the direct map is caught as an associativity failure
  auto broken = m.data;
  auto& direct = broken.maps.at({{0, 1, 2}, 4});
  direct(0, 0) = 2;
  auto r = prefact_check(broken);
  CHECK(has_kind(r, "associativity"));
}

TEST_CASE("obs_assignment examples") {
  auto one = obs_assignment({{{"p", 2}}, {}, 1});
  CHECK(one.obs[0].spaces().total_dim() == 3);
  CHECK(one.obs[0].spaces().labels(0) == std::vector<std::string>{"1", "p_1", "p_2"});

  auto two = obs_assignment({{{"a", 1}, {"b", 1}}, {{"U", {"a", "b"}}}, 2});
  CHECK(two.obs[2].spaces().total_dim() == 6);
  CHECK(prefact_check(two).ok());

  // linear functionals: a_1 (x) 1 -> a_1 and 1 (x) b_1 -> b_1
  const auto& m = two.maps.at({{0, 1}, 2});
  const auto& al = two.obs[0].spaces().labels(0);
  const auto& bl = two.obs[1].spaces().labels(0);
  const auto& ul = two.obs[2].spaces().labels(0);
  auto col = [&](const std::string& x, const std::string& y) {
    auto i = static_cast<std::size_t>(std::find(al.begin(), al.end(), x) - al.begin());
    auto j = static_cast<std::size_t>(std::find(bl.begin(), bl.end(), y) - bl.begin());
    return i * bl.size() + j;
  };
  auto row = [&](const std::string& z) {
    return static_cast<std::size_t>(std::find(ul.begin(), ul.end(), z) - ul.begin());
  };
  CHECK(m(row("a_1"), col("a_1", "1")) == 1);
  CHECK(m(row("b_1"), col("1", "b_1")) == 1);
  CHECK(m(row("a_1*b_1"), col("a_1", "b_1")) == 1);
  // degree 4 product is truncated
  for (std::size_t r = 0; r < ul.size(); ++r) CHECK(m(r, col("a_1^2", "b_1^2")) == 0);

  CHECK_THROWS_AS(obs_assignment({{{"a", 1}, {"a", 1}}, {}, 1}), Error);
  try {
    obs_assignment({{{"a", 1}}, {{"U", {"z"}}}, 1});
    FAIL("expected NOT_DISJOINT_POSET");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDisjointPoset);
  }
}

TEST_CASE("property: obs_assignment outputs pass prefact_check") {
  oracle::Gen gen(777);
  for (int trial = 0; trial < 25; ++trial) {
    ObsModel model;
    const int np = gen.uniform(1, 3);
    for (int p = 0; p < np; ++p) model.patches.push_back({"p" + std::to_string(p), gen.uniform(0, 2)});
    std::set<std::vector<std::string>> seen;
    for (int u = 0; u < 3; ++u) {
      std::vector<std::string> ps;
      for (int p = 0; p < np; ++p)
        if (gen.coin()) ps.push_back("p" + std::to_string(p));
      if (ps.size() < 2 || !seen.insert(ps).second) continue;
      model.unions.push_back({"U" + std::to_string(u), ps});
    }
    model.degree_bound = gen.uniform(0, 2);
    auto d = obs_assignment(model);
    CHECK(validate_prefact(d).ok());
    CHECK(prefact_check(d).ok());
  }
}
