#include "doctest.h"

#include <bit>

#include "deformkit/ce.hpp"
#include "deformkit/error.hpp"
#include "support/oracles.hpp"

using namespace dk;

namespace {

// Trivial-coefficient cochains as the exterior algebra on g*, monomials as
// bitmasks, with d(e^k) = -sum_{i<j} c_ij^k e^i e^j extended as a derivation.
struct ExteriorOracle {
  int n;
  std::vector<std::map<unsigned, Rational>> d_gen;  // d(e^k)

  explicit ExteriorOracle(const LieAlgebra& l) : n(static_cast<int>(l.dim())), d_gen(l.dim()) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (const auto& [k, c] : l.bracket(i, j)) d_gen[static_cast<std::size_t>(k)][(1u << i) | (1u << j)] -= c;
  }

  // Sign of moving bit k into the sorted position of mask.
  static int insert_sign(unsigned mask, int k) { return std::popcount(mask & ((1u << k) - 1)) % 2 ? -1 : 1; }

  std::map<unsigned, Rational> d(unsigned mask) const {
    std::map<unsigned, Rational> out;
    int seen = 0;
    for (int k = 0; k < n; ++k) {
      if (!(mask & (1u << k))) continue;
      // Leibniz: (-1)^{number of generators before e^k} (e^..)(d e^k)(e^..)
      const unsigned rest = mask & ~(1u << k);
      for (const auto& [m2, c] : d_gen[static_cast<std::size_t>(k)]) {
        if (m2 & rest) continue;
        // e^{before} d(e^k) e^{after}: move the degree-2 block past nothing, then sort.
        unsigned before = rest & ((1u << k) - 1);
        unsigned after = rest & ~((1u << k) - 1);
        int sign = seen % 2 ? -1 : 1;
        // sort (before, m2, after): m2 is even, so only the inversions it creates matter
        int inv = 0;
        for (int b = 0; b < n; ++b)
          if (m2 & (1u << b)) inv += std::popcount(before & ~((1u << b) - 1)) + std::popcount(after & ((1u << b) - 1));
        if (inv % 2) sign = -sign;
        out[rest | m2] += sign * c;
      }
      ++seen;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  std::vector<std::size_t> betti() const {
    std::vector<std::vector<unsigned>> by_degree(static_cast<std::size_t>(n) + 1);
    for (unsigned m = 0; m < (1u << n); ++m) by_degree[static_cast<std::size_t>(std::popcount(m))].push_back(m);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);
    for (int p = 0; p < n; ++p) {
      const auto& src = by_degree[static_cast<std::size_t>(p)];
      const auto& dst = by_degree[static_cast<std::size_t>(p) + 1];
      Matrix m(dst.size(), src.size());
      for (std::size_t c = 0; c < src.size(); ++c)
        for (const auto& [mask, v] : d(src[c])) {
          auto r = std::find(dst.begin(), dst.end(), mask) - dst.begin();
          m(static_cast<std::size_t>(r), c) = v;
        }
      ranks[static_cast<std::size_t>(p)] = oracle::bareiss_rank(m);
    }
    std::vector<std::size_t> out;
    for (int p = 0; p <= n; ++p) {
      std::size_t dim = by_degree[static_cast<std::size_t>(p)].size();
      std::size_t out_rank = ranks[static_cast<std::size_t>(p)];
      std::size_t in_rank = p > 0 ? ranks[static_cast<std::size_t>(p) - 1] : 0;
      out.push_back(dim - out_rank - in_rank);
    }
    return out;
  }
};

std::vector<std::size_t> as_list(const std::map<int, std::size_t>& m) {
  std::vector<std::size_t> out;
  for (const auto& [k, v] : m) out.push_back(v);
  return out;
}

CeSpec spec_of(LieAlgebra l, std::optional<LieModule> m = {}, CeDirection dir = CeDirection::Cohomology) {
  CeSpec s;
  s.module = m ? *m : trivial_module(l);
  s.lie = std::move(l);
  s.direction = dir;
  return s;
}

void require_closed(const CochainComplex& c) {
  auto degs = c.spaces().degrees();
  for (int d : degs) CHECK((c.differential(d + 1) * c.differential(d)).is_zero());
}

}  // namespace

TEST_CASE("wedge basis is lexicographic increasing tuples") {
  auto w = wedge_basis(4, 2);
  REQUIRE(w.size() == 6);
  CHECK(w.front() == std::vector<int>{0, 1});
  CHECK(w[1] == std::vector<int>{0, 2});
  CHECK(w.back() == std::vector<int>{2, 3});
  CHECK(wedge_basis(3, 0).size() == 1);
  CHECK(wedge_basis(3, 4).empty());
}

TEST_CASE("cohomology golden values") {
  CHECK(as_list(lie_cohomology(spec_of(builtin::sl2()))) == std::vector<std::size_t>{1, 0, 0, 1});
  CHECK(as_list(lie_cohomology(spec_of(builtin::heisenberg3()))) == std::vector<std::size_t>{1, 2, 2, 1});
  for (int n = 0; n <= 6; ++n) {
    std::vector<std::size_t> expect;
    for (int k = 0; k <= n; ++k) expect.push_back(oracle::binomial(n, k));
    CHECK(as_list(lie_cohomology(spec_of(builtin::abelian(n)))) == expect);
  }
}

TEST_CASE("sl2 trivial cochains: delta^0 = 0, delta^1 has rank 3") {
  auto c = ce_cochain_complex(spec_of(builtin::sl2()));
  CHECK(c.differential(0).is_zero());
  CHECK(oracle::bareiss_rank(c.differential(1)) == 3);
  auto ab = ce_cochain_complex(spec_of(builtin::abelian(2)));
  for (int d = 0; d <= 2; ++d) CHECK(ab.differential(d).is_zero());
  auto h = ce_cochain_complex(spec_of(builtin::heisenberg3()));
  for (int n = 0; n <= 3; ++n) CHECK(h.spaces().dim(n) == oracle::binomial(3, n));
  CHECK(oracle::bareiss_rank(h.differential(1)) == 1);
}

TEST_CASE("homology golden values") {
  CHECK(as_list(lie_homology(spec_of(builtin::abelian(2), {}, CeDirection::Homology))) ==
        std::vector<std::size_t>{1, 2, 1});
  CHECK(as_list(lie_homology(spec_of(builtin::sl2(), {}, CeDirection::Homology))) ==
        std::vector<std::size_t>{1, 0, 0, 1});
  auto adj = lie_homology(spec_of(builtin::sl2(), adjoint_module(builtin::sl2()), CeDirection::Homology));
  CHECK(adj.at(0) == 0);
}

TEST_CASE("chain complex sits in negative degrees") {
  auto c = ce_chain_complex(spec_of(builtin::sl2(), {}, CeDirection::Homology));
  auto degs = c.spaces().degrees();
  CHECK(degs.front() == -3);
  CHECK(degs.back() == 0);
}

TEST_CASE("oracle: exterior-algebra route agrees on trivial coefficients") {
  std::vector<LieAlgebra> algebras = {builtin::sl2(), builtin::heisenberg3(), builtin::iso21(), builtin::abelian(4)};
  for (const auto& l : algebras) {
    ExteriorOracle o(l);
    CHECK(as_list(lie_cohomology(spec_of(l))) == o.betti());
    CHECK(as_list(lie_homology(spec_of(l, {}, CeDirection::Homology))) == o.betti());
  }
}

TEST_CASE("property: delta^2 = 0 and d^2 = 0 for every builtin pair") {
  std::vector<std::pair<LieAlgebra, LieModule>> pairs;
  for (const auto& l : {builtin::sl2(), builtin::heisenberg3(), builtin::iso21(), builtin::abelian(3)}) {
    pairs.emplace_back(l, trivial_module(l));
    pairs.emplace_back(l, adjoint_module(l));
    pairs.emplace_back(l, coadjoint_module(l));
  }
  pairs.emplace_back(builtin::sl2(), sl2_defining_module());
  for (const auto& [l, m] : pairs) {
    require_closed(ce_cochain_complex_unchecked(spec_of(l, m)));
    require_closed(ce_chain_complex_unchecked(spec_of(l, m, CeDirection::Homology)));
  }
}

TEST_CASE("property: H^0 equals the invariant subspace") {
  for (const auto& l : {builtin::sl2(), builtin::heisenberg3(), builtin::iso21()}) {
    for (const auto& m : {adjoint_module(l), coadjoint_module(l), trivial_module(l)}) {
      Matrix stacked(m.dim * l.dim(), m.dim);
      for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t r = 0; r < m.dim; ++r)
          for (std::size_t c = 0; c < m.dim; ++c) stacked(i * m.dim + r, c) = m.action[i](r, c);
      CHECK(lie_cohomology(spec_of(l, m)).at(0) == m.dim - oracle::bareiss_rank(stacked));
    }
  }
}

TEST_CASE("property: Euler characteristic of cochains equals that of cohomology") {
  for (const auto& l : {builtin::sl2(), builtin::heisenberg3(), builtin::iso21()}) {
    auto m = adjoint_module(l);
    auto c = ce_cochain_complex(spec_of(l, m));
    long chi_c = 0, chi_h = 0;
    for (const auto& [d, dim] : lie_cohomology(spec_of(l, m))) {
      chi_h += (d % 2 ? -1 : 1) * static_cast<long>(dim);
      chi_c += (d % 2 ? -1 : 1) * static_cast<long>(c.spaces().dim(d));
    }
    CHECK(chi_c == chi_h);
  }
}

TEST_CASE("a Jacobi-violating table is rejected with its triple; the unchecked build is not closed") {
  LieAlgebra bad = builtin::sl2();
  bad.set_antisymmetric(0, 1, {{0, 1}});
  try {
    ce_cochain_complex(spec_of(bad));
    FAIL("expected a validation failure");
  } catch (const ValidationFailure& e) {
    bool triple = false;
    for (const auto& v : e.report().violations) triple = triple || (v.kind == "jacobi" && v.indices.size() == 3);
    CHECK(triple);
  }
  auto c = ce_cochain_complex_unchecked(spec_of(bad));
  bool nonzero = false;
  for (int d = 0; d < 3; ++d) nonzero = nonzero || !(c.differential(d + 1) * c.differential(d)).is_zero();
  CHECK(nonzero);
}

TEST_CASE("max_degree truncates and is range-checked") {
  CeSpec s = spec_of(builtin::sl2());
  s.max_degree = 1;
  auto h = lie_cohomology(s);
  CHECK(h.count(2) == 0);
  s.max_degree = 4;
  CHECK_THROWS_AS(lie_cohomology(s), Error);
}
