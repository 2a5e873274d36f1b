#pragma once

#include <string>

#include "deformkit/element.hpp"

namespace fixture {

/// value * coef * (form (x) lie); coef "" means the scalar unit.
inline dk::TermKey key(const dk::TensorContext& ctx, const std::string& form, const std::string& lie,
                       const std::string& coef = "") {
  const auto& g = ctx.dgla();
  int c = 0;
  if (!coef.empty()) c = *ctx.coefficients().index_of(coef);
  return {g.index(*g.forms().index_of(form), *g.lie().index_of(lie)), c};
}

inline dk::Element term(const dk::TensorContext& ctx, const std::string& form, const std::string& lie,
                        const std::string& coef = "", const dk::Rational& value = 1) {
  dk::Element e;
  dk::add_term(e, key(ctx, form, lie, coef), value);
  return e;
}

inline dk::Element operator+(dk::Element a, const dk::Element& b) {
  dk::add_scaled(a, b, 1);
  return a;
}

inline dk::Element operator*(const dk::Rational& s, const dk::Element& a) { return dk::scaled(a, s); }

}  // namespace fixture

#include "support/oracles.hpp"

namespace fixture {

/// Random element of total degree `degree` with coefficient powers in
/// [min_power, max_power].
inline dk::Element random_element(oracle::Gen& gen, const dk::TensorContext& ctx, int degree, int min_power,
                                  int max_power, double zero_p = 0.5) {
  dk::Element e;
  for (int p = min_power; p <= max_power; ++p)
    for (const auto& k : ctx.basis(degree, p)) dk::add_term(e, k, gen.small_rational(zero_p));
  return e;
}

}  // namespace fixture
