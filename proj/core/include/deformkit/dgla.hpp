#pragma once

#include <map>
#include <string>
#include <vector>

#include "deformkit/gca.hpp"
#include "deformkit/lie.hpp"

namespace dk {

/// The dg Lie algebra A (x) l built from a graded-commutative algebra A and an
/// ordinary Lie algebra l:
///   [a (x) X, b (x) Y] = ab (x) [X, Y],   d(a (x) X) = da (x) X.
/// Basis element a_i (x) x_j has index i * dim(l) + j and degree deg(a_i).
class Dgla {
 public:
  Dgla() = default;
  Dgla(GradedAlgebra forms, LieAlgebra lie);

  const GradedAlgebra& forms() const noexcept { return forms_; }
  const LieAlgebra& lie() const noexcept { return lie_; }

  std::size_t dim() const noexcept { return forms_.dim() * lie_.dim(); }
  int index(int form, int lie) const { return form * static_cast<int>(lie_.dim()) + lie; }
  int form_of(int idx) const { return idx / static_cast<int>(lie_.dim()); }
  int lie_of(int idx) const { return idx % static_cast<int>(lie_.dim()); }
  int degree(int idx) const { return forms_.degree(form_of(idx)); }
  std::string label(int idx) const;

  std::vector<int> basis_in_degree(int degree) const;
  std::map<int, std::size_t> component_dims() const;

  SparseVector bracket(int x, int y) const;
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  SparseVector differential(int x) const;
  SparseVector differential(const SparseVector& x) const;
  /// d restricted to degree n -> n+1, in the basis order of basis_in_degree.
  Matrix differential_matrix(int degree) const;

 private:
  GradedAlgebra forms_;
  LieAlgebra lie_;
};

/// Throws Error(InvalidInput) if either factor fails its validator.
Dgla build_dgla(GradedAlgebra forms, LieAlgebra lie);

/// Graded antisymmetry and graded Jacobi on all basis pairs/triples, graded
/// Leibniz for d over the bracket, and d^2 = 0.
ValidationReport validate_dgla(const Dgla& g);

}  // namespace dk
