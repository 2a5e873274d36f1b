#include "deformkit/gca.hpp"

#include <algorithm>
#include <set>

namespace dk {

GradedAlgebra::GradedAlgebra(std::vector<BasisElement> basis)
    : basis_(std::move(basis)),
      products_(basis_.size() * basis_.size()),
      differential_(basis_.size()) {
  std::set<std::string> seen;
  for (const auto& b : basis_)
    if (!seen.insert(b.name).second)
      throw Error(ErrorCode::InvalidInput, "duplicate algebra basis name '" + b.name + "'");
}

std::optional<int> GradedAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<int> GradedAlgebra::basis_in_degree(int degree) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == degree) out.push_back(static_cast<int>(i));
  return out;
}

std::map<int, std::size_t> GradedAlgebra::component_dims() const {
  std::map<int, std::size_t> out;
  for (const auto& b : basis_) ++out[b.degree];
  return out;
}

std::optional<int> GradedAlgebra::top_degree() const {
  if (basis_.empty()) return std::nullopt;
  return std::max_element(basis_.begin(), basis_.end(),
                          [](const auto& a, const auto& b) { return a.degree < b.degree; })
      ->degree;
}

void GradedAlgebra::set_product(int i, int j, SparseVector value) {
  auto n = static_cast<int>(dim());
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw Error(ErrorCode::IndexOutOfRange, "product index out of range");
  for (const auto& [k, c] : value)
    if (k < 0 || k >= n) throw Error(ErrorCode::IndexOutOfRange, "product value out of range");
  std::erase_if(value, [](const auto& kv) { return sgn(kv.second) == 0; });
  products_[static_cast<std::size_t>(i) * dim() + static_cast<std::size_t>(j)] = std::move(value);
}

SparseVector GradedAlgebra::multiply(const SparseVector& a, const SparseVector& b) const {
  SparseVector out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) add_scaled(out, product(i, j), x * y);
  return out;
}

void GradedAlgebra::set_differential(const Matrix& d) {
  if (d.rows() != dim() || d.cols() != dim())
    throw Error(ErrorCode::InvalidInput, "differential must be square on the algebra basis");
  for (std::size_t j = 0; j < dim(); ++j) differential_[j] = to_sparse(d.column(j));
  has_differential_ = true;
}

SparseVector GradedAlgebra::differential(const SparseVector& a) const {
  SparseVector out;
  if (!has_differential_) return out;
  for (const auto& [i, x] : a) add_scaled(out, differential(i), x);
  return out;
}

Matrix GradedAlgebra::differential_matrix() const {
  Matrix d(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [i, c] : differential_[j]) d(static_cast<std::size_t>(i), j) = c;
  return d;
}

void GradedAlgebra::set_integration(Vector functional) {
  if (functional.size() != dim())
    throw Error(ErrorCode::InvalidInput, "integration functional has wrong length");
  integration_ = std::move(functional);
}

Rational GradedAlgebra::integrate(const SparseVector& a) const {
  if (!integration_) throw Error(ErrorCode::NoIntegration, "algebra has no integration");
  Rational out = 0;
  for (const auto& [i, x] : a) out += x * (*integration_)[static_cast<std::size_t>(i)];
  return out;
}

namespace {

int koszul(int a, int b) { return ((a * b) % 2 == 0) ? 1 : -1; }

}  // namespace

ValidationReport validate_gca(const GradedAlgebra& a, GcaRequirements req) {
  ValidationReport report;
  const int n = static_cast<int>(a.dim());
  auto homogeneous = [&](const SparseVector& v, int degree) {
    return std::all_of(v.begin(), v.end(),
                       [&](const auto& kv) { return a.degree(kv.first) == degree; });
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!homogeneous(a.product(i, j), a.degree(i) + a.degree(j)))
        report.add("product_degree", {i, j});
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      SparseVector diff = a.product(i, j);
      add_scaled(diff, a.product(j, i), -koszul(a.degree(i), a.degree(j)));
      if (!diff.empty())
        report.add("graded_commutativity", {i, j}, a.name(i) + "*" + a.name(j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        SparseVector ei{{i, 1}}, ek{{k, 1}};
        SparseVector lhs = a.multiply(a.product(i, j), ek);
        SparseVector rhs = a.multiply(ei, a.product(j, k));
        if (lhs != rhs) report.add("associativity", {i, j, k});
      }
  if (req.require_unit) {
    if (!a.unit()) {
      report.add("missing_unit", {});
    } else {
      int u = *a.unit();
      if (u < 0 || u >= n || a.degree(u) != 0) {
        report.add("unit_degree", {u});
      } else {
        for (int i = 0; i < n; ++i) {
          SparseVector ei{{i, 1}};
          if (a.product(u, i) != ei || a.product(i, u) != ei) report.add("unit", {i});
        }
      }
    }
  }
  if (a.has_differential()) {
    for (int i = 0; i < n; ++i) {
      if (!homogeneous(a.differential(i), a.degree(i) + 1)) report.add("differential_degree", {i});
      if (!a.differential(a.differential(i)).empty()) report.add("d_squared", {i});
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        SparseVector ei{{i, 1}}, ej{{j, 1}};
        SparseVector lhs = a.differential(a.product(i, j));
        SparseVector rhs = a.multiply(a.differential(i), ej);
        add_scaled(rhs, a.multiply(ei, a.differential(j)), koszul(a.degree(i), 1));
        if (lhs != rhs) report.add("leibniz", {i, j}, a.name(i) + "," + a.name(j));
      }
  }
  if (const auto& integ = a.integration()) {
    auto top = a.top_degree();
    for (int i = 0; i < n; ++i)
      if (sgn((*integ)[static_cast<std::size_t>(i)]) != 0 && a.degree(i) != *top)
        report.add("integration_support", {i});
    if (is_zero(*integ)) report.add("integration_zero", {});
  }
  return report;
}

namespace builtin {

GradedAlgebra torus_gca(int n) {
  if (n < 0 || n > 12) throw Error(ErrorCode::InvalidInput, "torus_gca(n) needs 0 <= n <= 12");
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) {
    int px = __builtin_popcount(x), py = __builtin_popcount(y);
    if (px != py) return px < py;
    // lexicographic on the increasing index sequence
    for (int i = 0; i < 32; ++i) {
      bool bx = x & (1u << i), by = y & (1u << i);
      if (bx != by) return bx;
    }
    return false;
  });
  std::vector<GradedAlgebra::BasisElement> basis;
  std::vector<int> index_of_mask(1u << n);
  for (std::size_t k = 0; k < masks.size(); ++k) {
    std::string name;
    for (int i = 0; i < n; ++i)
      if (masks[k] & (1u << i)) name += "theta" + std::to_string(i + 1);
    if (name.empty()) name = "1";
    basis.push_back({name, __builtin_popcount(masks[k])});
    index_of_mask[masks[k]] = static_cast<int>(k);
  }
  GradedAlgebra a(std::move(basis));
  for (unsigned x : masks)
    for (unsigned y : masks) {
      if (x & y) continue;
      // sign of merging the sorted sequences x then y: count pairs (i in x, j in y) with i > j
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        if (x & (1u << i)) inversions += __builtin_popcount(y & ((1u << i) - 1));
      a.set_product(index_of_mask[x], index_of_mask[y],
                    {{index_of_mask[x | y], inversions % 2 ? -1 : 1}});
    }
  a.set_unit(index_of_mask[0]);
  Vector integ(a.dim());
  integ[static_cast<std::size_t>(index_of_mask[(1u << n) - 1])] = 1;
  a.set_integration(std::move(integ));
  return a;
}

GradedAlgebra surface_gca(int g) {
  if (g < 1) throw Error(ErrorCode::InvalidInput, "surface_gca(g) needs g >= 1");
  std::vector<GradedAlgebra::BasisElement> basis{{"1", 0}};
  for (int i = 1; i <= g; ++i) basis.push_back({"a" + std::to_string(i), 1});
  for (int i = 1; i <= g; ++i) basis.push_back({"b" + std::to_string(i), 1});
  basis.push_back({"omega", 2});
  GradedAlgebra a(std::move(basis));
  const int omega = 2 * g + 1;
  for (int i = 0; i <= omega; ++i) {
    a.set_product(0, i, {{i, 1}});
    a.set_product(i, 0, {{i, 1}});
  }
  for (int i = 1; i <= g; ++i) {
    a.set_product(i, g + i, {{omega, 1}});
    a.set_product(g + i, i, {{omega, -1}});
  }
  a.set_unit(0);
  Vector integ(a.dim());
  integ[static_cast<std::size_t>(omega)] = 1;
  a.set_integration(std::move(integ));
  return a;
}

GradedAlgebra interval_forms(int max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::InvalidInput, "interval_forms(D) needs D >= 0");
  const int D = max_degree;
  auto fn_name = [](int k) {
    return k == 0 ? std::string("1") : k == 1 ? std::string("t") : "t^" + std::to_string(k);
  };
  auto form_name = [](int k) {
    return k == 0 ? std::string("dt") : k == 1 ? std::string("t*dt")
                                               : "t^" + std::to_string(k) + "*dt";
  };
  std::vector<GradedAlgebra::BasisElement> basis;
  for (int k = 0; k <= D; ++k) basis.push_back({fn_name(k), 0});
  for (int k = 0; k <= D; ++k) basis.push_back({form_name(k), 1});
  GradedAlgebra a(std::move(basis));
  auto fn = [](int k) { return k; };
  auto form = [D](int k) { return D + 1 + k; };
  for (int x = 0; x <= D; ++x)
    for (int y = 0; y <= D; ++y) {
      if (x + y <= D) a.set_product(fn(x), fn(y), {{fn(x + y), 1}});
      bool keep = x + y <= D - 1 || x == 0;
      if (keep && x + y <= D) {
        a.set_product(fn(x), form(y), {{form(x + y), 1}});
        a.set_product(form(y), fn(x), {{form(x + y), 1}});
      }
    }
  Matrix d(a.dim(), a.dim());
  for (int k = 1; k <= D; ++k)
    d(static_cast<std::size_t>(form(k - 1)), static_cast<std::size_t>(fn(k))) = k;
  a.set_differential(d);
  a.set_unit(fn(0));
  return a;
}

}  // namespace builtin

}  // namespace dk
