#include "deformkit/dgla.hpp"

namespace dk {

namespace {

int koszul(int a, int b) { return ((a * b) % 2 == 0) ? 1 : -1; }

}  // namespace

Dgla::Dgla(GradedAlgebra forms, LieAlgebra lie) : forms_(std::move(forms)), lie_(std::move(lie)) {}

std::string Dgla::label(int idx) const {
  return forms_.name(form_of(idx)) + "(x)" + lie_.label(lie_of(idx));
}

std::vector<int> Dgla::basis_in_degree(int degree) const {
  std::vector<int> out;
  for (int f : forms_.basis_in_degree(degree))
    for (int l = 0; l < static_cast<int>(lie_.dim()); ++l) out.push_back(index(f, l));
  return out;
}

std::map<int, std::size_t> Dgla::component_dims() const {
  std::map<int, std::size_t> out;
  for (const auto& [deg, n] : forms_.component_dims()) out[deg] = n * lie_.dim();
  return out;
}

SparseVector Dgla::bracket(int x, int y) const {
  SparseVector out;
  const auto& prod = forms_.product(form_of(x), form_of(y));
  if (prod.empty()) return out;
  const auto& br = lie_.bracket(lie_of(x), lie_of(y));
  for (const auto& [f, a] : prod)
    for (const auto& [l, b] : br) add_term(out, index(f, l), a * b);
  return out;
}

SparseVector Dgla::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) add_scaled(out, bracket(i, j), a * b);
  return out;
}

SparseVector Dgla::differential(int x) const {
  SparseVector out;
  for (const auto& [f, a] : forms_.differential(form_of(x))) add_term(out, index(f, lie_of(x)), a);
  return out;
}

SparseVector Dgla::differential(const SparseVector& x) const {
  SparseVector out;
  for (const auto& [i, a] : x) add_scaled(out, differential(i), a);
  return out;
}

Matrix Dgla::differential_matrix(int degree) const {
  auto src = basis_in_degree(degree);
  auto dst = basis_in_degree(degree + 1);
  std::map<int, std::size_t> row_of;
  for (std::size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
  Matrix d(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (const auto& [k, v] : differential(src[c])) d(row_of.at(k), c) = v;
  return d;
}

Dgla build_dgla(GradedAlgebra forms, LieAlgebra lie) {
  auto gca_report = validate_gca(forms);
  if (!gca_report.ok())
    throw Error(ErrorCode::InvalidInput, "graded-commutative algebra: " + gca_report.summary());
  auto lie_report = validate_lie(lie);
  if (!lie_report.ok())
    throw Error(ErrorCode::InvalidInput, "Lie algebra: " + lie_report.summary());
  return Dgla(std::move(forms), std::move(lie));
}

ValidationReport validate_dgla(const Dgla& g) {
  ValidationReport report;
  const int n = static_cast<int>(g.dim());
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      SparseVector sum = g.bracket(x, y);
      add_scaled(sum, g.bracket(y, x), koszul(g.degree(x), g.degree(y)));
      if (!sum.empty()) report.add("graded_antisymmetry", {x, y});
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      SparseVector xy = g.bracket(x, y);
      for (int z = 0; z < n; ++z) {
        SparseVector ex{{x, 1}}, ey{{y, 1}}, ez{{z, 1}};
        // [X,[Y,Z]] = [[X,Y],Z] + (-1)^{|X||Y|} [Y,[X,Z]]
        SparseVector lhs = g.bracket(ex, g.bracket(y, z));
        SparseVector rhs = g.bracket(xy, ez);
        add_scaled(rhs, g.bracket(ey, g.bracket(x, z)), koszul(g.degree(x), g.degree(y)));
        if (lhs != rhs) report.add("graded_jacobi", {x, y, z});
      }
    }
  for (int x = 0; x < n; ++x) {
    if (!g.differential(g.differential(x)).empty()) report.add("d_squared", {x});
    for (int y = 0; y < n; ++y) {
      SparseVector ex{{x, 1}}, ey{{y, 1}};
      SparseVector lhs = g.differential(g.bracket(x, y));
      SparseVector rhs = g.bracket(g.differential(x), ey);
      add_scaled(rhs, g.bracket(ex, g.differential(y)), g.degree(x) % 2 ? -1 : 1);
      if (lhs != rhs) report.add("graded_leibniz", {x, y});
    }
  }
  return report;
}

}  // namespace dk
