#include "doctest.h"

#include "deformkit/complex.hpp"
#include "deformkit/error.hpp"
#include "deformkit/matrix.hpp"
#include "deformkit/rational.hpp"
#include "support/oracles.hpp"

using namespace dk;

namespace {

Matrix rows(std::initializer_list<std::initializer_list<int>> r) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : r) {
    out.emplace_back();
    for (int v : row) out.back().push_back(v);
  }
  return Matrix::from_rows(out);
}

CochainComplex complex_of(std::vector<std::size_t> dims) {
  GradedVectorSpace v;
  for (std::size_t n = 0; n < dims.size(); ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dims[n]; ++i) labels.push_back("e" + std::to_string(n) + "_" + std::to_string(i));
    v.set_component(static_cast<int>(n), labels);
  }
  return CochainComplex(v);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  try {
    parse_rational("1/0");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  CHECK(factorial(5) == 120);
}

TEST_CASE("solve: proportional rows") {
  auto r = solve(rows({{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  REQUIRE(r.kernel_basis.size() == 1);
  CHECK(r.kernel_basis[0] == Vector{-2, 1});
}

TEST_CASE("solve: identity and zero maps") {
  auto id = solve(Matrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.kernel_basis.empty());
  auto z = solve(Matrix(2, 3));
  CHECK(z.rank == 0);
  REQUIRE(z.kernel_basis.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    Vector e(3);
    e[i] = 1;
    CHECK(z.kernel_basis[i] == e);
  }
  CHECK(solve(Matrix(0, 0)).rank == 0);
  CHECK(solve(Matrix(0, 4)).kernel_basis.size() == 4);
}

TEST_CASE("solve_particular and subspace reduction") {
  Matrix m = rows({{1, 1}, {0, 1}});
  auto x = solve_particular(m, {3, 1});
  REQUIRE(x);
  CHECK(*x == Vector{2, 1});
  CHECK_FALSE(solve_particular(rows({{1, 1}, {1, 1}}), {1, 2}));
  SubspaceReducer red(3, {{1, 1, 0}});
  CHECK(red.dimension() == 1);
  CHECK(red.contains({2, 2, 0}));
  CHECK_FALSE(red.contains({1, 0, 0}));
  CHECK(red.reduce({1, 1, 5}) == Vector{0, 0, 5});
}

TEST_CASE("property: rank-nullity and kernel soundness on random matrices") {
  oracle::Gen gen(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(gen.uniform(0, 6));
    const auto c = static_cast<std::size_t>(gen.uniform(0, 6));
    Matrix m = gen.matrix(r, c);
    auto s = solve(m);
    CHECK(s.rank + s.kernel_basis.size() == c);
    CHECK(s.rank == oracle::bareiss_rank(m));
    for (const auto& v : s.kernel_basis) CHECK(is_zero(m.apply(v)));
    CHECK(oracle::bareiss_rank(Matrix::from_columns(c, s.kernel_basis)) == s.kernel_basis.size());
  }
}

TEST_CASE("cohomology_dims: small complexes") {
  auto exact = complex_of({1, 1});
  exact.set_differential(0, Matrix::identity(1));
  auto d = cohomology_dims(exact);
  CHECK(d.at(0) == 0);
  CHECK(d.at(1) == 0);

  auto diff = complex_of({2, 1});
  diff.set_differential(0, rows({{1, -1}}));
  d = cohomology_dims(diff);
  CHECK(d.at(0) == 1);
  CHECK(d.at(1) == 0);

  auto zero = complex_of({1, 3, 3, 1});
  d = cohomology_dims(zero);
  CHECK(d == std::map<int, std::size_t>{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
}

TEST_CASE("cohomology_dims rejects d^2 != 0 and names the degree") {
  auto c = complex_of({1, 1, 1});
  c.set_differential(0, Matrix::identity(1));
  c.set_differential(1, Matrix::identity(1));
  try {
    cohomology_dims(c);
    FAIL("expected COMPLEX_NOT_CLOSED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ComplexNotClosed);
    CHECK(std::string(e.what()).find('0') != std::string::npos);
  }
  CHECK(error_code_name(ErrorCode::ComplexNotClosed) == "COMPLEX_NOT_CLOSED");
}

TEST_CASE("property: scaling a differential keeps cohomology") {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = static_cast<std::size_t>(gen.uniform(1, 4));
    const auto b = static_cast<std::size_t>(gen.uniform(1, 4));
    auto c = complex_of({a, b});
    Matrix d = gen.matrix(b, a);
    c.set_differential(0, d);
    auto before = cohomology_dims(c);
    c.set_differential(0, gen.nonzero_rational() * d);
    CHECK(cohomology_dims(c) == before);
    CHECK(before.at(0) == a - oracle::bareiss_rank(d));
  }
}

TEST_CASE("graded vector space rejects duplicate labels and bad shapes") {
  GradedVectorSpace v;
  CHECK_THROWS_AS(v.set_component(0, {"x", "x"}), Error);
  auto c = complex_of({2, 1});
  CHECK_THROWS_AS(c.set_differential(0, Matrix(2, 2)), Error);
}
