#include "deformkit/deformation.hpp"

namespace dk {

Element mc_defect(const TensorContext& ctx, const Element& alpha) {
  ctx.require_degree(alpha, 1, "MC element");
  Element out = ctx.differential(alpha);
  add_scaled(out, ctx.bracket(alpha, alpha), Rational(1, 2));
  return out;
}

TangentResult mc_tangent(const Dgla& g) {
  TangentResult out;
  auto d1 = g.differential_matrix(1);
  auto sol = solve(d1);
  out.dim_z1 = sol.kernel_basis.size();
  out.z1_basis = sol.kernel_basis;
  out.dim_h1 = out.dim_z1 - rank(g.differential_matrix(0));
  return out;
}

LiftResult mc_lift(const TensorContext& ctx, const Element& alpha, int k) {
  LiftResult out;
  out.defect = mc_defect(ctx, alpha);
  if (!ctx.in_power(out.defect, k))
    throw Error(ErrorCode::PreconditionDefectTooLow,
                "MC defect is not in m^" + std::to_string(k));
  out.lifted = alpha;
  Element target = ctx.power_part(out.defect, k);
  if (target.empty()) return out;

  // d_tot on the associated graded piece m^k / m^(k+1).
  auto src = ctx.basis(1, k);
  auto dst = ctx.basis(2, k);
  std::map<TermKey, std::size_t> row_of;
  for (std::size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
  Matrix d(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (const auto& [key, v] : ctx.power_part(ctx.differential(Element{{src[c], 1}}), k))
      d(row_of.at(key), c) = v;
  Vector b(dst.size());
  for (const auto& [key, v] : target) b[row_of.at(key)] = v;

  if (auto beta = solve_particular(d, b)) {
    for (std::size_t c = 0; c < src.size(); ++c) add_term(out.correction, src[c], (*beta)[c]);
    out.lifted = difference(alpha, out.correction);
    return out;
  }
  std::vector<Vector> image;
  for (std::size_t c = 0; c < src.size(); ++c) image.push_back(d.column(c));
  SubspaceReducer reducer(dst.size(), image);
  Vector rem = reducer.reduce(b);
  for (std::size_t r = 0; r < dst.size(); ++r) add_term(out.obstruction, dst[r], rem[r]);
  out.obstructed = true;
  return out;
}

Element gauge_act(const TensorContext& ctx, const Element& x, const Element& alpha) {
  ctx.require_degree(x, 0, "gauge parameter");
  ctx.require_degree(alpha, 1, "MC element");
  const std::size_t max_terms = ctx.dgla().dim() * ctx.coefficients().dim() + 2;
  Element out;
  // e^{ad_x} alpha
  Element term = alpha;
  for (std::size_t k = 0; !term.empty(); ++k) {
    if (k > max_terms) throw Error(ErrorCode::InvalidInput, "gauge series does not terminate");
    add_scaled(out, term, Rational(1) / factorial(static_cast<unsigned>(k)));
    term = ctx.ad(x, term);
  }
  // - sum ad_x^k (d x) / (k+1)!
  term = ctx.differential(x);
  for (std::size_t k = 0; !term.empty(); ++k) {
    if (k > max_terms) throw Error(ErrorCode::InvalidInput, "gauge series does not terminate");
    add_scaled(out, term, Rational(-1) / factorial(static_cast<unsigned>(k + 1)));
    term = ctx.ad(x, term);
  }
  return out;
}

namespace {

const Element& coefficient(const std::vector<Element>& poly, std::size_t k) {
  static const Element zero;
  return k < poly.size() ? poly[k] : zero;
}

void record(PathEquation& eq, int power, const Element& residual) {
  if (residual.empty() || !eq.holds) return;
  eq.holds = false;
  eq.first_failing_power = power;
  eq.residual = residual;
}

std::size_t poly_degree(const std::vector<Element>& poly) {
  std::size_t deg = 0;
  for (std::size_t k = 0; k < poly.size(); ++k)
    if (!poly[k].empty()) deg = k;
  return deg;
}

}  // namespace

PathReport gauge_path_check(const TensorContext& ctx, const PolyPath& path, int degree_bound) {
  const std::size_t bound = static_cast<std::size_t>(degree_bound);
  if (poly_degree(path.a0) > bound || poly_degree(path.a1) > bound)
    throw Error(ErrorCode::DegreeBoundExceeded,
                "path coefficient degree exceeds bound " + std::to_string(degree_bound));
  for (const auto& c : path.a0) ctx.require_degree(c, 1, "A0 coefficient");
  for (const auto& c : path.a1) ctx.require_degree(c, 0, "A1 coefficient");

  PathReport report;
  const std::size_t n0 = path.a0.size();
  const std::size_t n1 = path.a1.size();
  for (std::size_t n = 0; n + 1 < 2 * std::max<std::size_t>(n0, 1); ++n) {
    Element r = ctx.differential(coefficient(path.a0, n));
    for (std::size_t i = 0; i <= n; ++i)
      add_scaled(r, ctx.bracket(coefficient(path.a0, i), coefficient(path.a0, n - i)), Rational(1, 2));
    record(report.flatness, static_cast<int>(n), r);
  }
  const std::size_t top = std::max(n0, n1 + (n0 ? n0 - 1 : 0)) + 1;
  for (std::size_t k = 0; k < top; ++k) {
    Element r = scaled(coefficient(path.a0, k + 1), Rational(static_cast<long>(k + 1)));
    for (std::size_t i = 0; i <= k; ++i)
      add_scaled(r, ctx.bracket(coefficient(path.a1, i), coefficient(path.a0, k - i)), 1);
    record(report.homotopy, static_cast<int>(k), r);
  }
  return report;
}

CartanSplit split_cartan(const TensorContext& ctx, const Element& alpha) {
  if (!(ctx.dgla().lie() == builtin::iso21()))
    throw Error(ErrorCode::WrongLieAlgebra, "Cartan splitting needs the iso21 Lie factor");
  ctx.require_degree(alpha, 1, "connection");
  CartanSplit out;
  for (const auto& [key, c] : alpha) {
    if (ctx.dgla().lie_of(key.first) < 3)
      out.omega.emplace(key, c);
    else
      out.e.emplace(key, c);
  }
  out.curvature = ctx.differential(out.omega);
  add_scaled(out.curvature, ctx.bracket(out.omega, out.omega), Rational(1, 2));
  out.torsion = ctx.differential(out.e);
  add_scaled(out.torsion, ctx.bracket(out.omega, out.e), 1);
  Element sum = out.curvature;
  add_scaled(sum, out.torsion, 1);
  out.consistent = (sum == mc_defect(ctx, alpha));
  return out;
}

}  // namespace dk
