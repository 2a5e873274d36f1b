#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deformkit/error.hpp"
#include "deformkit/matrix.hpp"
#include "deformkit/sparse.hpp"

namespace dk {

/// Finite-dimensional Lie algebra given by structure constants on an ordered basis.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<std::string> basis);

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const std::string& label(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(const std::string& label) const;

  /// Sets [e_i, e_j] only; the caller is responsible for the (j, i) entry.
  void set_bracket(int i, int j, SparseVector value);
  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_antisymmetric(int i, int j, const SparseVector& value);

  const SparseVector& bracket(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * dim() + static_cast<std::size_t>(j)];
  }
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::vector<std::string> basis_;
  std::vector<SparseVector> table_;
};

/// Antisymmetry on all pairs (including [e_i, e_i] = 0) and the Jacobi identity
/// on all triples i < j < k.
ValidationReport validate_lie(const LieAlgebra& l);

/// Representation: action[i] is the matrix of e_i on the module.
struct LieModule {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> action;
};

/// rho([x, y]) = rho(x) rho(y) - rho(y) rho(x) on every basis pair.
ValidationReport validate_module(const LieAlgebra& l, const LieModule& m);

LieModule trivial_module(const LieAlgebra& l);
LieModule adjoint_module(const LieAlgebra& l);
LieModule coadjoint_module(const LieAlgebra& l);
/// The 2-dimensional defining representation of sl2 (basis order E, F, H).
LieModule sl2_defining_module();

/// Symmetric bilinear form on a Lie algebra, by its Gram matrix.
struct InvariantPairing {
  Matrix gram;

  Rational operator()(const SparseVector& x, const SparseVector& y) const;
};

struct PairingReport {
  ValidationReport violations;  // symmetry and ad-invariance failures
  bool nondegenerate = false;

  bool ok() const noexcept { return violations.ok() && nondegenerate; }
};

/// <[x,y],z> + <y,[x,z]> = 0 on all basis triples, symmetry, and full rank.
PairingReport validate_pairing(const LieAlgebra& l, const InvariantPairing& p);

namespace builtin {

/// Basis (E, F, H): [E,F] = H, [H,E] = 2E, [H,F] = -2F.
LieAlgebra sl2();
LieAlgebra abelian(int n);
/// Basis (X, Y, Z): [X,Y] = Z, Z central.
LieAlgebra heisenberg3();
/// Basis (J1, J2, J3, P1, P2, P3) with [J_a,J_b] = eps_abc J_c,
/// [J_a,P_b] = eps_abc P_c, [P_a,P_b] = 0; eps_123 = +1, indices raised by
/// the identity.
LieAlgebra iso21();
/// <J_a, P_b> = delta_ab, <J,J> = <P,P> = 0.
InvariantPairing iso21_pairing();
/// Trace form of the defining representation: <E,F> = 1, <H,H> = 2.
InvariantPairing sl2_trace_pairing();

}  // namespace builtin

}  // namespace dk
