#pragma once

#include <map>

#include "deformkit/rational.hpp"

namespace dk {

/// Basis index -> nonzero coefficient.
using SparseVector = std::map<int, Rational>;

inline void add_scaled(SparseVector& acc, const SparseVector& v, const Rational& s) {
  if (sgn(s) == 0) return;
  for (const auto& [k, c] : v) {
    auto [it, inserted] = acc.try_emplace(k, 0);
    it->second += c * s;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

inline void add_term(SparseVector& acc, int k, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = acc.try_emplace(k, 0);
  it->second += c;
  if (sgn(it->second) == 0) acc.erase(it);
}

inline SparseVector scaled(SparseVector v, const Rational& s) {
  if (sgn(s) == 0) return {};
  for (auto& [k, c] : v) c *= s;
  return v;
}

inline SparseVector difference(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  add_scaled(out, b, -1);
  return out;
}

inline Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector out(dim);
  for (const auto& [k, c] : v) out[static_cast<std::size_t>(k)] = c;
  return out;
}

inline SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) out.emplace(static_cast<int>(k), v[k]);
  return out;
}

}  // namespace dk
