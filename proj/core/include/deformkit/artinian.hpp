#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deformkit/gca.hpp"

namespace dk {

/// Coefficient ring R = k (+) m for deformation problems, stored through its
/// maximal ideal m: a non-unital graded-commutative algebra with degrees <= 0,
/// a filtration power per basis element (b_i lies in m^power[i] and spans a
/// piece of m^power[i] / m^(power[i]+1)) and a nilpotency order N, m^N = 0.
///
/// The field k itself is modelled as the scalar ring: a single basis element
/// "1" with 1 * 1 = 1, filtration power 0 and no nilpotency.
class ArtinianAlgebra {
 public:
  ArtinianAlgebra() = default;
  ArtinianAlgebra(GradedAlgebra ideal, std::vector<int> powers, int nilpotency_order);
  static ArtinianAlgebra scalars();

  bool is_scalar() const noexcept { return scalar_; }
  const GradedAlgebra& ideal() const noexcept { return ideal_; }
  std::size_t dim() const noexcept { return ideal_.dim(); }
  const std::string& name(int i) const { return ideal_.name(i); }
  int degree(int i) const { return ideal_.degree(i); }
  int power(int i) const { return powers_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& powers() const noexcept { return powers_; }
  /// N with m^N = 0; nullopt for the scalar ring.
  std::optional<int> nilpotency_order() const noexcept { return nilpotency_; }
  std::optional<int> index_of(const std::string& name) const { return ideal_.index_of(name); }

  friend bool operator==(const ArtinianAlgebra&, const ArtinianAlgebra&) = default;

 private:
  GradedAlgebra ideal_;
  std::vector<int> powers_;
  std::optional<int> nilpotency_;
  bool scalar_ = false;
};

/// Degrees <= 0, graded commutativity and associativity of m, products
/// respecting the filtration, m^N = 0, and d (if any) of degree +1 with
/// d^2 = 0, Leibniz and d(m^k) inside m^k.
ValidationReport validate_artinian(const ArtinianAlgebra& a);

namespace builtin {
/// k[eps]/eps^2: ideal spanned by "eps".
ArtinianAlgebra dual_numbers();
/// (t)/(t^n) inside k[t]/t^n: basis t, t^2, ..., t^(n-1), nilpotency n.
ArtinianAlgebra truncated_polynomial(int n);
}  // namespace builtin

}  // namespace dk
