#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deformkit/error.hpp"
#include "deformkit/matrix.hpp"
#include "deformkit/sparse.hpp"

namespace dk {

/// Finite-dimensional graded-commutative algebra on a homogeneous basis, with
/// optional degree +1 differential, unit and top-degree integration.
///
/// Also used without a unit for the maximal ideal of an Artinian algebra.
class GradedAlgebra {
 public:
  struct BasisElement {
    std::string name;
    int degree = 0;
    friend bool operator==(const BasisElement&, const BasisElement&) = default;
  };

  GradedAlgebra() = default;
  explicit GradedAlgebra(std::vector<BasisElement> basis);

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  const std::string& name(int i) const { return basis_.at(static_cast<std::size_t>(i)).name; }
  int degree(int i) const { return basis_.at(static_cast<std::size_t>(i)).degree; }
  std::optional<int> index_of(const std::string& name) const;
  std::vector<int> basis_in_degree(int degree) const;
  std::map<int, std::size_t> component_dims() const;
  std::optional<int> top_degree() const;

  void set_product(int i, int j, SparseVector value);
  const SparseVector& product(int i, int j) const {
    return products_[static_cast<std::size_t>(i) * dim() + static_cast<std::size_t>(j)];
  }
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;

  /// Column j of `d` is d(b_j).
  void set_differential(const Matrix& d);
  bool has_differential() const noexcept { return has_differential_; }
  const SparseVector& differential(int i) const {
    return differential_[static_cast<std::size_t>(i)];
  }
  SparseVector differential(const SparseVector& a) const;
  Matrix differential_matrix() const;

  void set_unit(int i) { unit_ = i; }
  std::optional<int> unit() const noexcept { return unit_; }

  void set_integration(Vector functional);
  const std::optional<Vector>& integration() const noexcept { return integration_; }
  Rational integrate(const SparseVector& a) const;

  friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

 private:
  std::vector<BasisElement> basis_;
  std::vector<SparseVector> products_;
  bool has_differential_ = false;
  std::vector<SparseVector> differential_;
  std::optional<int> unit_;
  std::optional<Vector> integration_;
};

struct GcaRequirements {
  bool require_unit = true;
};

/// Degree additivity of products, graded commutativity, associativity, unit,
/// and when present: d of degree +1, d^2 = 0, graded Leibniz, integration
/// supported on the top degree only.
ValidationReport validate_gca(const GradedAlgebra& a, GcaRequirements req = {});

namespace builtin {

/// Exterior algebra on theta1..thetan (degree 1), zero differential,
/// integral of theta1...thetan = 1. Basis ordered by degree, then lexicographically.
GradedAlgebra torus_gca(int n);
/// Cohomology of a genus-g surface: 1; a1..ag, b1..bg; omega with
/// a_i b_j = delta_ij omega, b_i a_j = -delta_ij omega, integral of omega = 1.
GradedAlgebra surface_gca(int g);
/// Polynomial forms on the interval with coefficient degree <= D:
/// 1, t, ..., t^D in degree 0 and dt, t*dt, ..., t^D*dt in degree 1,
/// d(t^k) = k t^(k-1) dt. Products landing above the bound vanish; the
/// top form t^D*dt is reached only through the unit.
GradedAlgebra interval_forms(int max_degree);

}  // namespace builtin

}  // namespace dk
