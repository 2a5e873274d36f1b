#pragma once

#include <map>
#include <string>
#include <utility>

#include "deformkit/artinian.hpp"
#include "deformkit/dgla.hpp"

namespace dk {

/// Key (dgla basis index, coefficient basis index) of a term g (x) c in g (x) m.
using TermKey = std::pair<int, int>;
/// Sparse element of g (x) m (or g (x) k over the scalar ring).
using Element = std::map<TermKey, Rational>;

void add_term(Element& acc, TermKey key, const Rational& c);
void add_scaled(Element& acc, const Element& v, const Rational& s);
Element scaled(Element v, const Rational& s);
Element difference(const Element& a, const Element& b);

/// The dg Lie algebra g (x) m with
///   [g1 (x) c1, g2 (x) c2] = (-1)^{|c1||g2|} [g1, g2] (x) c1 c2,
///   d_tot(g (x) c) = dg (x) c + (-1)^{|g|} g (x) dc.
class TensorContext {
 public:
  TensorContext(const Dgla& g, const ArtinianAlgebra& a) : g_(&g), a_(&a) {}

  const Dgla& dgla() const noexcept { return *g_; }
  const ArtinianAlgebra& coefficients() const noexcept { return *a_; }

  int degree(TermKey k) const { return g_->degree(k.first) + a_->degree(k.second); }
  int power(TermKey k) const { return a_->power(k.second); }
  std::string label(TermKey k) const;

  /// Throws Error(TypeMismatch) unless every term has total degree `degree`
  /// and every index is in range.
  void require_degree(const Element& x, int degree, const std::string& what) const;

  Element bracket(const Element& x, const Element& y) const;
  Element differential(const Element& x) const;
  /// ad_x(y) = [x, y].
  Element ad(const Element& x, const Element& y) const { return bracket(x, y); }

  /// Terms whose coefficient lies in m^k (power >= k).
  bool in_power(const Element& x, int k) const;
  /// Terms with coefficient power exactly k.
  Element power_part(const Element& x, int k) const;

  /// Basis of total degree `degree` with coefficient power exactly k, ordered
  /// by (dgla index, coefficient index).
  std::vector<TermKey> basis(int degree, int power) const;

  /// A dgla vector times the scalar "1"; requires the scalar ring.
  Element from_dgla(const SparseVector& v) const;
  SparseVector to_dgla(const Element& x) const;

 private:
  const Dgla* g_;
  const ArtinianAlgebra* a_;
};

}  // namespace dk
