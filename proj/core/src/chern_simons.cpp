#include "deformkit/chern_simons.hpp"

namespace dk {

void require_cs_model(const CyclicStructure& c) {
  const auto& forms = c.dgla.forms();
  if (!forms.integration()) throw Error(ErrorCode::NoIntegration, "algebra has no integration functional");
  auto top = forms.top_degree();
  if (!top || *top != 3)
    throw Error(ErrorCode::WrongTopDegree,
                "Chern-Simons needs top degree 3, got " + (top ? std::to_string(*top) : std::string("none")));
}

Rational integrated_pairing(const CyclicStructure& c, const SparseVector& u, const SparseVector& v) {
  const Dgla& g = c.dgla;
  Rational total = 0;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) {
      const Rational& gram = c.pairing.gram(static_cast<std::size_t>(g.lie_of(i)),
                                            static_cast<std::size_t>(g.lie_of(j)));
      if (sgn(gram) == 0) continue;
      Rational integral = g.forms().integrate(g.forms().product(g.form_of(i), g.form_of(j)));
      total += a * b * gram * integral;
    }
  return total;
}

Rational cs_value(const CyclicStructure& c, const SparseVector& alpha) {
  require_cs_model(c);
  const Dgla& g = c.dgla;
  Rational value = integrated_pairing(c, alpha, g.differential(alpha));
  value += Rational(1, 3) * integrated_pairing(c, alpha, g.bracket(alpha, alpha));
  return value;
}

Vector cs_gradient(const CyclicStructure& c, const SparseVector& alpha) {
  require_cs_model(c);
  const Dgla& g = c.dgla;
  const auto basis = g.basis_in_degree(1);
  const SparseVector d_alpha = g.differential(alpha);
  const SparseVector sq = g.bracket(alpha, alpha);
  Vector grad(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    SparseVector e{{basis[k], 1}};
    Rational v = integrated_pairing(c, e, d_alpha) + integrated_pairing(c, alpha, g.differential(e));
    v += Rational(1, 3) * integrated_pairing(c, e, sq);
    v += Rational(2, 3) * integrated_pairing(c, alpha, g.bracket(e, alpha));
    grad[k] = v;
  }
  return grad;
}

}  // namespace dk
