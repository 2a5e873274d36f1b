#pragma once

#include <optional>
#include <vector>

#include "deformkit/element.hpp"

namespace dk {

/// d_tot(alpha) + 1/2 [alpha, alpha]. Throws Error(TypeMismatch) unless alpha
/// has total degree 1.
Element mc_defect(const TensorContext& ctx, const Element& alpha);

struct TangentResult {
  std::size_t dim_z1 = 0;
  std::size_t dim_h1 = 0;
  /// Kernel of d on the degree-1 component, in the order of
  /// Dgla::basis_in_degree(1).
  std::vector<Vector> z1_basis;
};

/// Z^1 = ker(d: g^1 -> g^2) and H^1 = Z^1 / d(g^0).
TangentResult mc_tangent(const Dgla& g);

struct LiftResult {
  bool obstructed = false;
  /// alpha - beta when unobstructed; alpha itself otherwise.
  Element lifted;
  /// Canonical representative of the defect's class in
  /// H^2 (x) m^k / m^(k+1); empty when unobstructed.
  Element obstruction;
  /// The correction beta (d_tot beta = power-k part of the defect, mod m^(k+1)).
  Element correction;
  /// Defect of the input.
  Element defect;
};

/// One step of order-by-order lifting: alpha must satisfy the MC equation
/// modulo m^k (throws Error(PreconditionDefectTooLow) otherwise).
LiftResult mc_lift(const TensorContext& ctx, const Element& alpha, int k);

/// e^{ad_x}(alpha) - sum_{k>=0} ad_x^k / (k+1)! (d_tot x). x must have total
/// degree 0 and alpha total degree 1 (TypeMismatch). The series must terminate:
/// if it has not after dim(g (x) m) + 2 terms Error(InvalidInput) is thrown.
Element gauge_act(const TensorContext& ctx, const Element& x, const Element& alpha);

/// A(t) = A0(t) + A1(t) dt with a0[k], a1[k] the coefficients of t^k.
struct PolyPath {
  std::vector<Element> a0;
  std::vector<Element> a1;
};

struct PathEquation {
  bool holds = true;
  /// Power of t of the first nonzero residual coefficient.
  std::optional<int> first_failing_power;
  Element residual;
};

struct PathReport {
  PathEquation flatness;  // d_tot A0 + 1/2 [A0, A0] = 0
  PathEquation homotopy;  // dA0/dt + [A1, A0] = 0
  bool ok() const noexcept { return flatness.holds && homotopy.holds; }
};

/// Throws Error(DegreeBoundExceeded) if either component has polynomial
/// degree above `degree_bound`, Error(TypeMismatch) on wrong total degrees.
PathReport gauge_path_check(const TensorContext& ctx, const PolyPath& path, int degree_bound);

struct CartanSplit {
  Element omega;      // J components
  Element e;          // P components
  Element curvature;  // d omega + 1/2 [omega, omega]
  Element torsion;    // d e + [omega, e]
  bool consistent = false;  // mc_defect(alpha) == curvature + torsion
};

/// Requires the Lie factor to be iso21 (Error(WrongLieAlgebra) otherwise).
CartanSplit split_cartan(const TensorContext& ctx, const Element& alpha);

}  // namespace dk
