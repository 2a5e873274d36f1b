#include "deformkit/artinian.hpp"

namespace dk {

ArtinianAlgebra::ArtinianAlgebra(GradedAlgebra ideal, std::vector<int> powers,
                                 int nilpotency_order)
    : ideal_(std::move(ideal)), powers_(std::move(powers)), nilpotency_(nilpotency_order) {
  if (powers_.size() != ideal_.dim())
    throw Error(ErrorCode::InvalidInput, "one filtration power per ideal basis element required");
  if (nilpotency_order < 1) throw Error(ErrorCode::InvalidInput, "nilpotency order must be >= 1");
}

ArtinianAlgebra ArtinianAlgebra::scalars() {
  ArtinianAlgebra a;
  a.ideal_ = GradedAlgebra({{"1", 0}});
  a.ideal_.set_product(0, 0, {{0, 1}});
  a.ideal_.set_unit(0);
  a.powers_ = {0};
  a.scalar_ = true;
  return a;
}

ValidationReport validate_artinian(const ArtinianAlgebra& a) {
  ValidationReport report;
  if (a.is_scalar()) return report;
  report.append(validate_gca(a.ideal(), GcaRequirements{.require_unit = false}));
  const int n = static_cast<int>(a.dim());
  for (int i = 0; i < n; ++i) {
    if (a.degree(i) > 0) report.add("positive_degree", {i});
    if (a.power(i) < 1) report.add("power_below_one", {i});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.ideal().product(i, j))
        if (a.power(k) < a.power(i) + a.power(j)) report.add("filtration", {i, j, k});
  if (a.ideal().has_differential())
    for (int i = 0; i < n; ++i)
      for (const auto& [k, c] : a.ideal().differential(i))
        if (a.power(k) < a.power(i)) report.add("differential_filtration", {i, k});

  // m^N = 0: span of all N-fold products, grown one factor at a time.
  std::vector<SparseVector> layer;
  for (int i = 0; i < n; ++i) layer.push_back({{i, 1}});
  const int order = *a.nilpotency_order();
  for (int step = 1; step < order && !layer.empty(); ++step) {
    std::vector<Vector> next;
    for (const auto& v : layer)
      for (int j = 0; j < n; ++j) {
        auto p = a.ideal().multiply(v, {{j, 1}});
        if (!p.empty()) next.push_back(to_dense(p, a.dim()));
      }
    layer.clear();
    if (next.empty()) break;
    auto echelon = rref(Matrix::from_rows(next));
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r)
      layer.push_back(to_sparse(echelon.reduced.row(r)));
  }
  if (!layer.empty()) report.add("nilpotency", {order});
  return report;
}

namespace builtin {

ArtinianAlgebra dual_numbers() {
  GradedAlgebra ideal({{"eps", 0}});
  return ArtinianAlgebra(std::move(ideal), {1}, 2);
}

ArtinianAlgebra truncated_polynomial(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "truncated_polynomial needs n >= 2");
  std::vector<GradedAlgebra::BasisElement> basis;
  std::vector<int> powers;
  for (int k = 1; k < n; ++k) {
    basis.push_back({k == 1 ? std::string("t") : "t^" + std::to_string(k), 0});
    powers.push_back(k);
  }
  GradedAlgebra ideal(std::move(basis));
  for (int a = 1; a < n; ++a)
    for (int b = 1; a + b < n; ++b) ideal.set_product(a - 1, b - 1, {{a + b - 1, 1}});
  return ArtinianAlgebra(std::move(ideal), std::move(powers), n);
}

}  // namespace builtin

}  // namespace dk
