#include "deformkit/lie.hpp"

#include <set>

namespace dk {

LieAlgebra::LieAlgebra(std::vector<std::string> basis)
    : basis_(std::move(basis)), table_(basis_.size() * basis_.size()) {
  std::set<std::string> seen;
  for (const auto& b : basis_)
    if (!seen.insert(b).second)
      throw Error(ErrorCode::InvalidInput, "duplicate Lie basis label '" + b + "'");
}

std::optional<int> LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

void LieAlgebra::set_bracket(int i, int j, SparseVector value) {
  auto n = static_cast<int>(dim());
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw Error(ErrorCode::IndexOutOfRange, "bracket index out of range");
  for (const auto& [k, c] : value)
    if (k < 0 || k >= n) throw Error(ErrorCode::IndexOutOfRange, "bracket value out of range");
  std::erase_if(value, [](const auto& kv) { return sgn(kv.second) == 0; });
  table_[static_cast<std::size_t>(i) * dim() + static_cast<std::size_t>(j)] = std::move(value);
}

void LieAlgebra::set_antisymmetric(int i, int j, const SparseVector& value) {
  set_bracket(i, j, value);
  set_bracket(j, i, scaled(value, -1));
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) add_scaled(out, bracket(i, j), a * b);
  return out;
}

ValidationReport validate_lie(const LieAlgebra& l) {
  ValidationReport report;
  const int n = static_cast<int>(l.dim());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      SparseVector sum = l.bracket(i, j);
      add_scaled(sum, l.bracket(j, i), 1);
      if (!sum.empty()) report.add("antisymmetry", {i, j});
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        SparseVector ei{{i, 1}}, ej{{j, 1}}, ek{{k, 1}};
        SparseVector jac = l.bracket(ei, l.bracket(ej, ek));
        add_scaled(jac, l.bracket(ej, l.bracket(ek, ei)), 1);
        add_scaled(jac, l.bracket(ek, l.bracket(ei, ej)), 1);
        if (!jac.empty())
          report.add("jacobi", {i, j, k},
                     "at (" + l.label(i) + "," + l.label(j) + "," + l.label(k) + ")");
      }
  return report;
}

ValidationReport validate_module(const LieAlgebra& l, const LieModule& m) {
  ValidationReport report;
  const int n = static_cast<int>(l.dim());
  if (m.action.size() != l.dim()) {
    report.add("action_count", {static_cast<int>(m.action.size())});
    return report;
  }
  for (int i = 0; i < n; ++i) {
    const auto& a = m.action[static_cast<std::size_t>(i)];
    if (a.rows() != m.dim || a.cols() != m.dim) report.add("action_shape", {i});
  }
  if (!report.ok()) return report;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& ai = m.action[static_cast<std::size_t>(i)];
      const auto& aj = m.action[static_cast<std::size_t>(j)];
      Matrix rho_bracket(m.dim, m.dim);
      for (const auto& [k, c] : l.bracket(i, j))
        rho_bracket = rho_bracket + c * m.action[static_cast<std::size_t>(k)];
      if (!(ai * aj - aj * ai == rho_bracket)) report.add("module_bracket", {i, j});
    }
  return report;
}

LieModule trivial_module(const LieAlgebra& l) {
  LieModule m;
  m.dim = 1;
  m.labels = {"1"};
  m.action.assign(l.dim(), Matrix(1, 1));
  return m;
}

LieModule adjoint_module(const LieAlgebra& l) {
  LieModule m;
  m.dim = l.dim();
  m.labels = l.basis();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Matrix a(l.dim(), l.dim());
    for (std::size_t j = 0; j < l.dim(); ++j)
      for (const auto& [k, c] : l.bracket(static_cast<int>(i), static_cast<int>(j)))
        a(static_cast<std::size_t>(k), j) = c;
    m.action.push_back(std::move(a));
  }
  return m;
}

LieModule coadjoint_module(const LieAlgebra& l) {
  LieModule m = adjoint_module(l);
  for (auto& label : m.labels) label += "*";
  for (auto& a : m.action) a = Rational(-1) * a.transpose();
  return m;
}

LieModule sl2_defining_module() {
  LieModule m;
  m.dim = 2;
  m.labels = {"v1", "v2"};
  m.action = {Matrix::from_rows({{0, 1}, {0, 0}}), Matrix::from_rows({{0, 0}, {1, 0}}),
              Matrix::from_rows({{1, 0}, {0, -1}})};
  return m;
}

Rational InvariantPairing::operator()(const SparseVector& x, const SparseVector& y) const {
  Rational out = 0;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      out += a * b * gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return out;
}

PairingReport validate_pairing(const LieAlgebra& l, const InvariantPairing& p) {
  PairingReport report;
  const int n = static_cast<int>(l.dim());
  if (p.gram.rows() != l.dim() || p.gram.cols() != l.dim()) {
    report.violations.add("gram_shape", {static_cast<int>(p.gram.rows()),
                                         static_cast<int>(p.gram.cols())});
    return report;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) !=
          p.gram(static_cast<std::size_t>(j), static_cast<std::size_t>(i)))
        report.violations.add("symmetry", {i, j});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        SparseVector ey{{y, 1}}, ez{{z, 1}};
        Rational lhs = p(l.bracket(x, y), ez) + p(ey, l.bracket(x, z));
        if (sgn(lhs) != 0)
          report.violations.add("ad_invariance", {x, y, z},
                                "<[" + l.label(x) + "," + l.label(y) + "]," + l.label(z) +
                                    "> + <" + l.label(y) + ",[" + l.label(x) + "," +
                                    l.label(z) + "]> = " + to_string(lhs));
      }
  report.nondegenerate = rank(p.gram) == l.dim();
  return report;
}

namespace builtin {

LieAlgebra sl2() {
  LieAlgebra l({"E", "F", "H"});
  l.set_antisymmetric(0, 1, {{2, 1}});
  l.set_antisymmetric(2, 0, {{0, 2}});
  l.set_antisymmetric(2, 1, {{1, -2}});
  return l;
}

LieAlgebra abelian(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "abelian(n) needs n >= 0");
  std::vector<std::string> basis;
  for (int i = 1; i <= n; ++i) basis.push_back("x" + std::to_string(i));
  return LieAlgebra(std::move(basis));
}

LieAlgebra heisenberg3() {
  LieAlgebra l({"X", "Y", "Z"});
  l.set_antisymmetric(0, 1, {{2, 1}});
  return l;
}

namespace {

int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // even permutations of (0,1,2) are the cyclic ones
  return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace

LieAlgebra iso21() {
  LieAlgebra l({"J1", "J2", "J3", "P1", "P2", "P3"});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      SparseVector jj, jp;
      for (int c = 0; c < 3; ++c) {
        if (int e = levi_civita(a, b, c)) {
          jj[c] = e;
          jp[3 + c] = e;
        }
      }
      l.set_bracket(a, b, jj);
      l.set_bracket(a, 3 + b, jp);
      l.set_bracket(3 + b, a, scaled(jp, -1));
    }
  return l;
}

InvariantPairing iso21_pairing() {
  Matrix g(6, 6);
  for (std::size_t a = 0; a < 3; ++a) {
    g(a, 3 + a) = 1;
    g(3 + a, a) = 1;
  }
  return {g};
}

InvariantPairing sl2_trace_pairing() {
  return {Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 2}})};
}

}  // namespace builtin

}  // namespace dk
