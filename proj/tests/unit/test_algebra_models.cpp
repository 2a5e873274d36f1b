#include "doctest.h"

#include "deformkit/dgla.hpp"
#include "deformkit/error.hpp"
#include "deformkit/gca.hpp"
#include "deformkit/lie.hpp"
#include "support/oracles.hpp"

using namespace dk;

namespace {

int idx(const LieAlgebra& l, const std::string& s) { return *l.index_of(s); }
int form(const GradedAlgebra& a, const std::string& s) { return *a.index_of(s); }

// Structure constants of iso(2,1) typed in by hand: eps_123 = +1.
int eps(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return ((a == 0 && b == 1) || (a == 1 && b == 2) || (a == 2 && b == 0)) ? (c == 3 - a - b ? 1 : 0)
                                                                          : (c == 3 - a - b ? -1 : 0);
}

std::vector<LieAlgebra> all_builtin_lie() {
  return {builtin::sl2(), builtin::abelian(1), builtin::abelian(3), builtin::heisenberg3(), builtin::iso21()};
}

}  // namespace

TEST_CASE("sl2 is valid and a perturbed copy reports the Jacobi triple") {
  auto l = builtin::sl2();
  CHECK(validate_lie(l).ok());
  CHECK(l.bracket(idx(l, "E"), idx(l, "F")) == SparseVector{{idx(l, "H"), 1}});
  CHECK(l.bracket(idx(l, "H"), idx(l, "E")) == SparseVector{{idx(l, "E"), 2}});

  LieAlgebra bad = l;
  bad.set_antisymmetric(idx(l, "E"), idx(l, "F"), {{idx(l, "E"), 1}});
  auto r = validate_lie(bad);
  REQUIRE_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.violations)
    if (v.kind == "jacobi" && v.indices == std::vector<int>{0, 1, 2}) found = true;
  CHECK(found);
}

TEST_CASE("antisymmetry violations are reported") {
  LieAlgebra l({"x", "y"});
  l.set_bracket(0, 1, {{0, 1}});
  auto r = validate_lie(l);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().kind == "antisymmetry");
}

TEST_CASE("iso21 matches the hand-typed epsilon table") {
  auto l = builtin::iso21();
  REQUIRE(l.dim() == 6);
  CHECK(validate_lie(l).ok());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      SparseVector jj, jp;
      for (int c = 0; c < 3; ++c) {
        if (eps(a, b, c)) jj[c] = eps(a, b, c);
        if (eps(a, b, c)) jp[3 + c] = eps(a, b, c);
      }
      CHECK(l.bracket(a, b) == jj);
      CHECK(l.bracket(a, 3 + b) == jp);
      CHECK(l.bracket(3 + a, 3 + b).empty());
    }
}

TEST_CASE("iso21 pairing is invariant and nondegenerate") {
  auto l = builtin::iso21();
  auto p = builtin::iso21_pairing();
  auto r = validate_pairing(l, p);
  CHECK(r.ok());
  CHECK(oracle::bareiss_rank(p.gram) == 6);
  // <[J1,J2],P3> + <J2,[J1,P3]> = 1 - 1
  CHECK(p(l.bracket(0, 1), {{5, 1}}) == 1);
  CHECK(p({{1, 1}}, l.bracket(0, 5)) == -1);

  // the J-J block alone is invariant but degenerate
  InvariantPairing jj{Matrix(6, 6)};
  for (std::size_t a = 0; a < 3; ++a) jj.gram(a, a) = 1;
  auto degenerate = validate_pairing(l, jj);
  CHECK(degenerate.violations.ok());
  CHECK_FALSE(degenerate.nondegenerate);

  // <J1,P1> = 1 alone: <[J2,J3],P1> + <J3,[J2,P1]> = 1
  InvariantPairing jp{Matrix(6, 6)};
  jp.gram(0, 3) = 1;
  jp.gram(3, 0) = 1;
  auto bad = validate_pairing(l, jp);
  CHECK_FALSE(bad.violations.ok());
}

TEST_CASE("sl2 trace pairing is invariant") {
  CHECK(validate_pairing(builtin::sl2(), builtin::sl2_trace_pairing()).ok());
}

TEST_CASE("modules: builtins satisfy the bracket rule, a broken action does not") {
  for (const auto& l : all_builtin_lie()) {
    CHECK(validate_module(l, trivial_module(l)).ok());
    CHECK(validate_module(l, adjoint_module(l)).ok());
    CHECK(validate_module(l, coadjoint_module(l)).ok());
  }
  auto l = builtin::sl2();
  CHECK(validate_module(l, sl2_defining_module()).ok());
  auto bad = sl2_defining_module();
  bad.action[0] = Matrix::identity(2);
  CHECK_FALSE(validate_module(l, bad).ok());
}

TEST_CASE("abelian algebras have no brackets") {
  auto l = builtin::abelian(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(l.bracket(i, j).empty());
}

TEST_CASE("builtin gcas validate and have the expected products") {
  for (int n = 0; n <= 4; ++n) CHECK(validate_gca(builtin::torus_gca(n)).ok());
  for (int g = 1; g <= 3; ++g) CHECK(validate_gca(builtin::surface_gca(g)).ok());
  for (int d = 0; d <= 3; ++d) CHECK(validate_gca(builtin::interval_forms(d)).ok());

  auto s = builtin::surface_gca(1);
  const int a = form(s, "a1"), b = form(s, "b1"), w = form(s, "omega");
  CHECK(s.product(a, b) == SparseVector{{w, 1}});
  CHECK(s.product(b, a) == SparseVector{{w, -1}});
  CHECK(s.product(a, a).empty());
  CHECK(s.product(b, b).empty());
  CHECK(s.integrate({{w, 1}}) == 1);

  auto t = builtin::torus_gca(3);
  CHECK(t.component_dims() == std::map<int, std::size_t>{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
  CHECK(t.integrate({{form(t, "theta1theta2theta3"), 1}}) == 1);
  CHECK(t.top_degree() == 3);
}

TEST_CASE("interval forms: d(t^k) = k t^(k-1) dt and Leibniz") {
  auto f = builtin::interval_forms(3);
  CHECK(f.differential(form(f, "t^3")) == SparseVector{{form(f, "t^2*dt"), 3}});
  CHECK(f.differential(form(f, "t")) == SparseVector{{form(f, "dt"), 1}});
  CHECK(f.differential(form(f, "1")).empty());
  CHECK(f.product(form(f, "t"), form(f, "t*dt")) == SparseVector{{form(f, "t^2*dt"), 1}});
}

TEST_CASE("gca validator catches broken commutativity and Leibniz") {
  auto t = builtin::torus_gca(2);
  GradedAlgebra bad = t;
  bad.set_product(form(t, "theta2"), form(t, "theta1"), {{form(t, "theta1theta2"), 1}});
  auto r = validate_gca(bad);
  REQUIRE_FALSE(r.ok());
  bool comm = false;
  for (const auto& v : r.violations) comm = comm || v.kind == "graded_commutativity";
  CHECK(comm);

  GradedAlgebra dbad = t;
  Matrix d(4, 4);
  d(static_cast<std::size_t>(form(t, "theta1")), static_cast<std::size_t>(form(t, "1"))) = 1;
  dbad.set_differential(d);
  CHECK_FALSE(validate_gca(dbad).ok());
}

TEST_CASE("build_dgla: component dimensions and brackets") {
  auto g = build_dgla(builtin::torus_gca(2), builtin::sl2());
  CHECK(g.component_dims() == std::map<int, std::size_t>{{0, 3}, {1, 6}, {2, 3}});
  const auto& A = g.forms();
  const auto& L = g.lie();
  const int t1E = g.index(form(A, "theta1"), idx(L, "E"));
  const int t2F = g.index(form(A, "theta2"), idx(L, "F"));
  const int t1F = g.index(form(A, "theta1"), idx(L, "F"));
  const int t12H = g.index(form(A, "theta1theta2"), idx(L, "H"));
  CHECK(g.bracket(t1E, t2F) == SparseVector{{t12H, 1}});
  CHECK(g.bracket(t1E, t1F).empty());
  CHECK(g.label(t1E) == "theta1(x)E");

  LieAlgebra bad = builtin::sl2();
  bad.set_antisymmetric(0, 1, {{0, 1}});
  CHECK_THROWS_AS(build_dgla(builtin::torus_gca(2), bad), Error);
}

TEST_CASE("property: every builtin dgla satisfies the graded axioms") {
  std::vector<GradedAlgebra> forms = {builtin::torus_gca(2), builtin::surface_gca(1), builtin::interval_forms(2)};
  for (const auto& a : forms)
    for (const auto& l : {builtin::sl2(), builtin::heisenberg3(), builtin::abelian(2)}) {
      auto r = validate_dgla(Dgla(a, l));
      CHECK_MESSAGE(r.ok(), r.summary());
    }
  CHECK(validate_dgla(Dgla(builtin::torus_gca(3), builtin::iso21())).ok());
}

TEST_CASE("property: Leibniz on random elements of interval forms") {
  auto f = builtin::interval_forms(3);
  oracle::Gen gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    SparseVector x, y;
    const int dx = gen.uniform(0, 1), dy = gen.uniform(0, 1);
    for (int i : f.basis_in_degree(dx)) add_term(x, i, gen.small_rational());
    for (int i : f.basis_in_degree(dy)) add_term(y, i, gen.small_rational());
    SparseVector lhs = f.differential(f.multiply(x, y));
    SparseVector rhs = f.multiply(f.differential(x), y);
    add_scaled(rhs, f.multiply(x, f.differential(y)), dx % 2 ? -1 : 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("unknown builtin names throw") {
  CHECK_THROWS_AS(builtin::abelian(-1), Error);
  CHECK_THROWS_AS(builtin::surface_gca(0), Error);
}
